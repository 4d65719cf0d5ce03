#include <catch2/catch_amalgamated.hpp>

#include "qlie/lie.hpp"
#include "qlie/lyndon.hpp"
#include "support/helpers.hpp"

using namespace qlie;
using namespace qlie::testing;

TEST_CASE("validate_presentation accepts the standard fixtures") {
  CHECK(validate_presentation(sl2_q()).ok);
  CHECK(validate_presentation(abelian_q(3, "abelian3")).ok);
  CHECK(validate_presentation(heisenberg_q()).ok);
  CHECK(validate_presentation(solv2_q()).ok);
  CHECK(validate_presentation(rest2_f2()).ok);
  CHECK(validate_presentation(sl2_f5()).ok);
}

TEST_CASE("corrupted sl2 fails Jacobi at (e, h, f)") {
  LiePresentation P = sl2_q();
  LieElement e = P.zero_element();
  e.coeffs[0] = Scalar::one(P.field);
  P.table[{0, 2}] = e;  // [e,f] = e instead of h
  PresentationReport rep = validate_presentation(P);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.issues.size() == 1);
  CHECK(rep.issues[0].kind == PresentationIssue::Kind::Jacobi);
  CHECK(rep.issues[0].triple == std::array<std::uint32_t, 3>{0, 1, 2});
}

TEST_CASE("malformed tables are reported separately from axiom failures") {
  LiePresentation P = sl2_q();
  P.table[{1, 7}] = P.zero_element();
  PresentationReport rep = validate_presentation(P);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.issues[0].kind == PresentationIssue::Kind::Malformed);

  LiePresentation R = abelian_q(2, "bad");
  R.basis_names[1] = "x";
  CHECK_FALSE(validate_presentation(R).ok);
}

TEST_CASE("bracket on sl2 matches the table and bilinearity") {
  LiePresentation P = sl2_q();
  LieElement e = P.basis_element(0), h = P.basis_element(1), f = P.basis_element(2);

  LieElement he = bracket(P, h, e);
  CHECK(he == lie_scale(Scalar::of_int(2, P.field), e));

  // [e+f, h] = -2e + 2f
  LieElement lhs = bracket(P, lie_add(e, f), h);
  LieElement want = lie_add(lie_scale(Scalar::of_int(-2, P.field), e), lie_scale(Scalar::of_int(2, P.field), f));
  CHECK(lhs == want);

  CHECK(bracket(P, lie_add(e, h), lie_add(e, h)).is_zero());

  LieElement bad{std::vector<Scalar>(2, Scalar::zero(P.field))};
  CHECK_THROWS_AS(bracket(P, bad, e), input_error);
}

TEST_CASE("randomized Lie axioms hold exactly on validated presentations") {
  std::mt19937_64 rng(20240811);
  for (const LiePresentation& P : {sl2_q(), heisenberg_q(), solv2_q(), rest2_f2(), sl2_f5()}) {
    for (int iter = 0; iter < 120; ++iter) {
      LieElement u = random_lie(rng, P), v = random_lie(rng, P), w = random_lie(rng, P);
      // antisymmetry
      CHECK(bracket(P, u, v) == lie_scale(-Scalar::one(P.field), bracket(P, v, u)));
      // Jacobi
      LieElement jac = bracket(P, bracket(P, u, v), w);
      jac = lie_add(jac, bracket(P, bracket(P, v, w), u));
      jac = lie_add(jac, bracket(P, bracket(P, w, u), v));
      CHECK(jac.is_zero());
      // ad is a Lie-algebra morphism to matrices
      ScalarMatrix lhs = ad_matrix(P, bracket(P, u, v));
      ScalarMatrix ab = mat_mul(ad_matrix(P, u), ad_matrix(P, v));
      ScalarMatrix ba = mat_mul(ad_matrix(P, v), ad_matrix(P, u));
      for (std::size_t r = 0; r < lhs.size(); ++r)
        for (std::size_t c = 0; c < lhs.size(); ++c) CHECK(lhs[r][c] == ab[r][c] - ba[r][c]);
    }
  }
}

TEST_CASE("ad_matrix on sl2") {
  LiePresentation P = sl2_q();
  ScalarMatrix ad_h = ad_matrix(P, P.basis_element(1));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      int want = (r == c) ? (r == 0 ? 2 : (r == 2 ? -2 : 0)) : 0;
      CHECK(ad_h[r][c] == Scalar::of_int(want, P.field));
    }
  // ad(e) applied to f is h
  ScalarMatrix ad_e = ad_matrix(P, P.basis_element(0));
  CHECK(ad_e[1][2] == Scalar::one(P.field));

  LiePresentation Ab = abelian_q(3, "abelian3");
  std::mt19937_64 rng(7);
  ScalarMatrix z = ad_matrix(Ab, random_lie(rng, Ab));
  for (const auto& row : z)
    for (const auto& c : row) CHECK(c.is_zero());
}

TEST_CASE("lyndon words: small alphabet enumeration") {
  auto basis = lyndon_basis(2, 3);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].size() == 2);  // a, b
  CHECK(basis[1].size() == 1);  // ab
  CHECK(basis[2].size() == 2);  // aab, abb
  CHECK(basis[1][0].word == std::vector<std::uint32_t>{0, 1});
  CHECK(basis[2][0].word == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(basis[2][1].word == std::vector<std::uint32_t>{0, 1, 1});
  CHECK(basis[2][0].bracketing == "[a,[a,b]]");
  CHECK(basis[2][1].bracketing == "[[a,b],b]");

  auto one = lyndon_basis(1, 5);
  CHECK(one[0].size() == 1);
  for (std::size_t d = 1; d < 5; ++d) CHECK(one[d].empty());
}

TEST_CASE("lyndon counts match the Witt formula, words are self-minimal") {
  CHECK(witt_dimension(2, 5) == 6);
  for (std::uint32_t k = 1; k <= 3; ++k) {
    auto basis = lyndon_basis(k, 8);
    for (std::uint32_t d = 1; d <= 8; ++d) {
      CHECK(basis[d - 1].size() == witt_dimension(k, d));
      for (const auto& entry : basis[d - 1]) {
        // strictly smaller than all proper suffixes
        for (std::size_t s = 1; s < entry.word.size(); ++s) {
          std::vector<std::uint32_t> suffix(entry.word.begin() + static_cast<std::ptrdiff_t>(s),
                                            entry.word.end());
          CHECK(entry.word < suffix);
        }
        // bracketing spells the word
        std::vector<std::uint32_t> letters;
        for (char ch : entry.bracketing)
          if (ch >= 'a' && ch <= 'z') letters.push_back(static_cast<std::uint32_t>(ch - 'a'));
        CHECK(letters == entry.word);
      }
    }
  }
}
