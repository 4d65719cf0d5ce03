#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <random>
#include <vector>

#include "qlie/lie.hpp"

namespace qlie {

enum class EnvMode { Full, Restricted };

inline std::string mode_str(EnvMode m) { return m == EnvMode::Full ? "full" : "restricted"; }

// Ordered monomial e_0^{k_0} ... e_{n-1}^{k_{n-1}} in the PBW basis.
struct PBWMonomial {
  std::vector<std::uint32_t> exps;

  static PBWMonomial identity(std::uint32_t n) { return {std::vector<std::uint32_t>(n, 0)}; }

  static PBWMonomial generator(std::uint32_t n, std::uint32_t i) {
    PBWMonomial m = identity(n);
    m.exps.at(i) = 1;
    return m;
  }

  std::uint32_t degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }
  bool is_identity() const { return degree() == 0; }

  // generator indices in increasing order, with multiplicity
  std::vector<std::uint32_t> expanded() const {
    std::vector<std::uint32_t> w;
    for (std::uint32_t i = 0; i < exps.size(); ++i)
      for (std::uint32_t c = 0; c < exps[i]; ++c) w.push_back(i);
    return w;
  }

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

// Graded order; within a degree, the monomial whose expanded word is
// lexicographically earlier (more weight on early generators) comes first,
// so for sl2 the degree-1 monomials read e, h, f in basis order.
struct MonomialLess {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
  }
};

struct EnvElement {
  std::map<PBWMonomial, Scalar, MonomialLess> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }

  friend bool operator==(const EnvElement&, const EnvElement&) = default;
};

inline void env_add_term(EnvElement& e, const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.terms.erase(it);
  }
}

inline EnvElement env_add(const EnvElement& a, const EnvElement& b) {
  EnvElement out = a;
  for (const auto& [m, c] : b.terms) env_add_term(out, m, c);
  return out;
}

inline EnvElement env_sub(const EnvElement& a, const EnvElement& b) {
  EnvElement out = a;
  for (const auto& [m, c] : b.terms) env_add_term(out, m, -c);
  return out;
}

inline EnvElement env_scale(const Scalar& c, const EnvElement& a) {
  EnvElement out;
  for (const auto& [m, x] : a.terms) env_add_term(out, m, c * x);
  return out;
}

// The enveloping algebra Q(L): U(L) in full mode, U_p(L) in restricted mode.
// Products are brought to PBW normal form by rewriting the leftmost
// out-of-order adjacent generator pair e_j e_i (j > i) into
// e_i e_j + [e_j, e_i]; the swap lowers the inversion count and the bracket
// term lowers the degree, so the rewriting terminates. In restricted mode an
// exponent that reaches p in an otherwise sorted word is reduced through the
// presentation's p-map before the word is emitted.
class EnvAlgebra {
 public:
  EnvAlgebra(LiePresentation P, EnvMode mode) : pres_(std::move(P)), mode_(mode) {
    if (mode == EnvMode::Restricted) {
      if (pres_.field.kind != FieldKind::Prime)
        throw unsupported_mode("restricted enveloping algebra needs a prime field");
      if (!pres_.pmap) throw input_error("restricted enveloping algebra needs a p-map on the presentation");
    }
  }

  const LiePresentation& presentation() const { return pres_; }
  EnvMode mode() const { return mode_; }
  const FieldSpec& field() const { return pres_.field; }
  std::uint32_t dim() const { return pres_.dim(); }

  EnvElement zero() const { return {}; }

  EnvElement scalar(const Scalar& c) const {
    EnvElement e;
    env_add_term(e, PBWMonomial::identity(dim()), c);
    return e;
  }

  EnvElement one() const { return scalar(Scalar::one(field())); }

  EnvElement monomial(const PBWMonomial& m, const Scalar& c) const {
    EnvElement e;
    env_add_term(e, m, c);
    return e;
  }

  EnvElement embed_lie(const LieElement& u) const {
    if (u.coeffs.size() != dim()) throw input_error("embed_lie: dimension mismatch");
    EnvElement e;
    for (std::uint32_t i = 0; i < dim(); ++i)
      env_add_term(e, PBWMonomial::generator(dim(), i), u.coeffs[i]);
    return e;
  }

  void straighten_into(std::vector<std::uint32_t> word, Scalar coeff, EnvElement& out) const {
    std::vector<std::pair<std::vector<std::uint32_t>, Scalar>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      if (c.is_zero()) continue;

      std::size_t k = 0;
      bool inverted = false;
      for (; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) {
          inverted = true;
          break;
        }
      if (inverted) {
        LieElement br = pres_.bracket_basis(w[k], w[k + 1]);
        auto swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        work.emplace_back(std::move(swapped), c);
        for (std::uint32_t g = 0; g < dim(); ++g) {
          if (br.coeffs[g].is_zero()) continue;
          std::vector<std::uint32_t> shorter;
          shorter.reserve(w.size() - 1);
          shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
          shorter.push_back(g);
          shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
          work.emplace_back(std::move(shorter), c * br.coeffs[g]);
        }
        continue;
      }

      if (mode_ == EnvMode::Restricted) {
        const std::uint32_t p = field().p;
        std::size_t run_start = 0;
        bool reduced = false;
        while (run_start < w.size()) {
          std::size_t run_end = run_start;
          while (run_end < w.size() && w[run_end] == w[run_start]) ++run_end;
          if (run_end - run_start >= p) {
            const std::uint32_t g = w[run_start];
            const LieElement& pv = (*pres_.pmap)[g];
            std::vector<std::uint32_t> base;
            base.reserve(w.size() - p);
            base.insert(base.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(run_start));
            base.insert(base.end(), w.begin() + static_cast<std::ptrdiff_t>(run_start) + p, w.end());
            for (std::uint32_t h = 0; h < dim(); ++h) {
              if (pv.coeffs[h].is_zero()) continue;
              auto w2 = base;
              w2.insert(std::lower_bound(w2.begin(), w2.end(), h), h);
              work.emplace_back(std::move(w2), c * pv.coeffs[h]);
            }
            reduced = true;
            break;
          }
          run_start = run_end;
        }
        if (reduced) continue;
      }

      PBWMonomial m = PBWMonomial::identity(dim());
      for (auto g : w) ++m.exps[g];
      env_add_term(out, m, c);
    }
  }

  EnvElement multiply_monomials(const PBWMonomial& a, const PBWMonomial& b, const Scalar& c) const {
    auto w = a.expanded();
    auto wb = b.expanded();
    w.insert(w.end(), wb.begin(), wb.end());
    EnvElement out;
    straighten_into(std::move(w), c, out);
    return out;
  }

  EnvElement multiply(const EnvElement& a, const EnvElement& b) const {
    EnvElement out;
    for (const auto& [ma, ca] : a.terms) {
      auto wa = ma.expanded();
      for (const auto& [mb, cb] : b.terms) {
        auto w = wa;
        auto wb = mb.expanded();
        w.insert(w.end(), wb.begin(), wb.end());
        straighten_into(std::move(w), ca * cb, out);
      }
    }
    return out;
  }

  EnvElement power(const EnvElement& a, std::uint32_t m) const {
    EnvElement acc = one();
    for (std::uint32_t i = 0; i < m; ++i) acc = multiply(acc, a);
    return acc;
  }

  Scalar counit(const EnvElement& a) const {
    auto it = a.terms.find(PBWMonomial::identity(dim()));
    return it == a.terms.end() ? Scalar::zero(field()) : it->second;
  }

  EnvElement constantless_part(const EnvElement& a) const {
    return env_sub(a, scalar(counit(a)));
  }

  std::vector<PBWMonomial> pbw_basis(std::uint32_t d) const {
    std::vector<PBWMonomial> out;
    PBWMonomial cur = PBWMonomial::identity(dim());
    const std::uint32_t cap = mode_ == EnvMode::Restricted ? field().p - 1 : d;
    enumerate(cur, 0, d, cap, out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
  }

  // u^[p], extended from the basis table: the p-th power of the embedded
  // element, reduced in U_p. The result must land back in L with zero
  // constant term; anything else means the presentation's p-map is broken.
  LieElement pmap_apply(const LieElement& u) const {
    if (mode_ != EnvMode::Restricted)
      throw unsupported_mode("pmap_apply needs the restricted enveloping algebra");
    EnvElement e = power(embed_lie(u), field().p);
    if (e.degree() > 1 || !counit(e).is_zero())
      throw input_error("p-map on the presentation is inconsistent: p-th power left the Lie algebra");
    LieElement out = pres_.zero_element();
    for (const auto& [m, c] : e.terms)
      for (std::uint32_t i = 0; i < dim(); ++i)
        if (m.exps[i] == 1) out.coeffs[i] = c;
    return out;
  }

 private:
  void enumerate(PBWMonomial& cur, std::uint32_t i, std::uint32_t budget, std::uint32_t cap,
                 std::vector<PBWMonomial>& out) const {
    if (i == dim()) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t k = 0; k <= std::min(budget, cap); ++k) {
      cur.exps[i] = k;
      enumerate(cur, i + 1, budget - k, cap, out);
    }
    cur.exps[i] = 0;
  }

  LiePresentation pres_;
  EnvMode mode_;
};

struct PmapIssue {
  enum class Category { AdAxiom, Scaling, Additivity };
  Category category;
  std::string detail;
};

inline std::string pmap_category_str(PmapIssue::Category c) {
  switch (c) {
    case PmapIssue::Category::AdAxiom: return "ad-axiom";
    case PmapIssue::Category::Scaling: return "scaling";
    case PmapIssue::Category::Additivity: return "additivity";
  }
  return "?";
}

struct PmapReport {
  bool ok = true;
  std::vector<PmapIssue> issues;
  std::vector<std::string> notes;
};

// Restricted-structure validation.
//   (i)  ad(e_i^[p]) = ad(e_i)^p on every basis vector;
//   (ii) p-semilinear scaling (lambda e_i)^[p] = lambda^p e_i^[p], with the
//        left side derived independently as a p-th power in U_p;
//   (iii) additivity on basis pairs through the identity, computed in the
//        full (unreduced) enveloping algebra,
//        (e_i+e_j)^[p] - e_i^[p] - e_j^[p] = (e_i+e_j)^p - e_i^p - e_j^p.
// Checks (ii) and (iii) hold by construction of the derived extension and
// guard the engine rather than the data; (i) is the check with teeth (valid
// basis values are exactly those commuting with ad in this sense).
inline PmapReport validate_pmap(const LiePresentation& P, std::uint64_t seed = 0x51EDD5EEDULL) {
  if (P.field.kind != FieldKind::Prime) throw input_error("validate_pmap: field is not a prime field");
  if (!P.pmap) throw input_error("validate_pmap: presentation has no p-map");

  PmapReport rep;
  const std::uint32_t n = P.dim();
  const std::uint32_t p = P.field.p;
  auto fail = [&](PmapIssue::Category cat, std::string msg) {
    rep.ok = false;
    rep.issues.push_back({cat, std::move(msg)});
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    ScalarMatrix lhs = ad_matrix(P, (*P.pmap)[i]);
    ScalarMatrix rhs = mat_pow(ad_matrix(P, P.basis_element(i)), p, P.field);
    if (lhs != rhs)
      fail(PmapIssue::Category::AdAxiom,
           "ad(" + P.basis_names[i] + "^[p]) differs from ad(" + P.basis_names[i] + ")^p");
  }
  if (!rep.ok) {
    rep.notes.push_back("derived-extension checks skipped: basis values already violate the ad axiom");
    return rep;
  }

  EnvAlgebra Up(P, EnvMode::Restricted);
  EnvAlgebra U(P, EnvMode::Full);

  std::vector<std::uint32_t> lambdas;
  if (p <= 13)
    for (std::uint32_t l = 1; l < p; ++l) lambdas.push_back(l);
  else {
    std::mt19937_64 rng(seed);
    lambdas = {1, 2, p - 1};
    for (int t = 0; t < 5; ++t) lambdas.push_back(static_cast<std::uint32_t>(rng() % (p - 1)) + 1);
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (auto l : lambdas) {
      Scalar lam = Scalar::residue(l, p);
      LieElement lhs = Up.pmap_apply(lie_scale(lam, P.basis_element(i)));
      LieElement rhs = lie_scale(lam.pow(p), (*P.pmap)[i]);
      if (!(lhs == rhs))
        fail(PmapIssue::Category::Scaling,
             "(" + lam.str() + "*" + P.basis_names[i] + ")^[p] is not lambda^p * " + P.basis_names[i] + "^[p]");
    }
  rep.notes.push_back("scaling is derived from the table, so this check guards the engine, not the data");

  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      LieElement sum = lie_add(P.basis_element(i), P.basis_element(j));
      LieElement ext = Up.pmap_apply(sum);
      EnvElement lhs = U.embed_lie(lie_sub(lie_sub(ext, (*P.pmap)[i]), (*P.pmap)[j]));
      EnvElement rhs = env_sub(env_sub(U.power(U.embed_lie(sum), p), U.power(U.embed_lie(P.basis_element(i)), p)),
                               U.power(U.embed_lie(P.basis_element(j)), p));
      if (!(lhs == rhs))
        fail(PmapIssue::Category::Additivity,
             "(" + P.basis_names[i] + "+" + P.basis_names[j] + ")^[p] violates the enveloping-algebra additivity identity");
    }
  return rep;
}

}  // namespace qlie
