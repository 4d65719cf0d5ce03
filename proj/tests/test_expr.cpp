#include <catch2/catch_amalgamated.hpp>

#include "qlie/expr.hpp"
#include "qlie/io.hpp"
#include "support/helpers.hpp"

using namespace qlie;
using namespace qlie::testing;

namespace {

FPElement gen(const FreeProduct& A, std::uint32_t i) {
  return A.inject_env(A.env().embed_lie(A.env().presentation().basis_element(i)));
}

}  // namespace

TEST_CASE("expression evaluation on sl2") {
  FreeProduct A(sl2_q(), EnvMode::Full);

  // [h,[e,f]] = [h,h] = 0
  CHECK(evaluate_expression(A, "[h,[e,f]]").is_zero());

  // e*f - f*e = h
  CHECK(evaluate_expression(A, "e*f - f*e") == gen(A, 1));

  // x^2 * e is the single word [x^2 e]
  FPElement v = evaluate_expression(A, "x^2 * e");
  REQUIRE(v.terms.size() == 1);
  FPWord want{FPLetter::x(2), FPLetter::env(PBWMonomial{{1, 0, 0}})};
  CHECK(v.terms.begin()->first == want);
  CHECK(v.terms.begin()->second.is_one());

  // rational scalars, parentheses, subtraction chains
  CHECK(evaluate_expression(A, "1/2*h + 1/2*h") == gen(A, 1));
  CHECK(evaluate_expression(A, "(e + f) - e") == gen(A, 2));
  CHECK(evaluate_expression(A, "0").is_zero());

  // whitespace insensitivity
  CHECK(evaluate_expression(A, " [ h , [ e , f ] ] ").is_zero());
}

TEST_CASE("unary minus binds tighter than the power") {
  FreeProduct A(sl2_q(), EnvMode::Full);
  // -e^2 parses as (-e)^2 = e^2
  CHECK(evaluate_expression(A, "-e^2") == evaluate_expression(A, "e^2"));
  CHECK(evaluate_expression(A, "-(e^2)") == fp_scale(-Scalar::one(A.field()), evaluate_expression(A, "e^2")));
  // power chains associate left: e^2^3 = (e^2)^3 = e^6
  CHECK(evaluate_expression(A, "e^2^3") == evaluate_expression(A, "e^6"));
  CHECK(evaluate_expression(A, "e^0") == A.one());
}

TEST_CASE("parse and evaluation errors carry positions") {
  FreeProduct A(sl2_q(), EnvMode::Full);

  CHECK_THROWS_AS(parse_expression("e +"), parse_error);
  CHECK_THROWS_AS(parse_expression("(e"), parse_error);
  CHECK_THROWS_AS(parse_expression("e $ f"), parse_error);
  CHECK_THROWS_AS(parse_expression("[e, f"), parse_error);
  CHECK_THROWS_AS(parse_expression("e^-2"), parse_error);
  CHECK_THROWS_AS(parse_expression("e^(2)"), parse_error);
  CHECK_THROWS_AS(parse_expression("e^1/2"), parse_error);
  CHECK_THROWS_AS(evaluate_expression(A, "q + e"), parse_error);

  try {
    parse_expression("e +\n+ f");
    FAIL("expected a parse error");
  } catch (const parse_error& err) {
    CHECK(err.where.line == 2);
    CHECK(std::string(err.what()).find("2:1") != std::string::npos);
  }

  try {
    evaluate_expression(A, "e + qq");
    FAIL("expected an unbound-identifier error");
  } catch (const parse_error& err) {
    CHECK(err.where.col == 5);
  }
}

TEST_CASE("scalar literals follow the presentation field") {
  FreeProduct A(sl2_f5(), EnvMode::Restricted);
  // 1/2 = 3 mod 5
  CHECK(evaluate_expression(A, "1/2*h") == evaluate_expression(A, "3*h"));
  CHECK(evaluate_expression(A, "7*e") == evaluate_expression(A, "2*e"));
  CHECK_THROWS_AS(evaluate_expression(A, "1/5*h"), parse_error);
}

TEST_CASE("round-trip: parse -> evaluate -> render -> parse") {
  std::mt19937_64 rng(603060);
  int checked = 0;
  for (const LiePresentation& P : {sl2_q(), rest2_f2(), toral_f3()}) {
    FreeProduct A(P, P.pmap ? EnvMode::Restricted : EnvMode::Full);
    for (int i = 0; i < 20; ++i) {
      FPElement v = random_fp(rng, A, 3);
      std::string rendered = fp_expression_str(P, v);
      CHECK(evaluate_expression(A, rendered) == v);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("reserved x cannot be shadowed") {
  FreeProduct A(sl2_q(), EnvMode::Full);
  FPElement x = evaluate_expression(A, "x");
  CHECK(x == A.x_gen());
}
