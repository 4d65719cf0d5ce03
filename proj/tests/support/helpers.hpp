#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qlie/envelope.hpp"
#include "qlie/freeprod.hpp"
#include "qlie/lie.hpp"

#ifndef QLIE_SOURCE_DIR
#define QLIE_SOURCE_DIR "."
#endif

namespace qlie::testing {

inline std::string presentation_path(const std::string& name) {
  return std::string(QLIE_SOURCE_DIR) + "/presentations/" + name;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(QLIE_SOURCE_DIR) + "/tests/fixtures/" + name;
}

// ---- programmatic presentations -------------------------------------------

inline LiePresentation sl2_q() {
  LiePresentation P;
  P.field = FieldSpec::rationals();
  P.name = "sl2_q";
  P.basis_names = {"e", "h", "f"};
  auto el = [&](std::initializer_list<int> v) {
    LieElement u = P.zero_element();
    std::size_t i = 0;
    for (int c : v) u.coeffs[i++] = Scalar::of_int(c, P.field);
    return u;
  };
  P.table[{0, 1}] = el({-2, 0, 0});  // [e,h] = -2e
  P.table[{0, 2}] = el({0, 1, 0});   // [e,f] = h
  P.table[{1, 2}] = el({0, 0, -2});  // [h,f] = -2f
  return P;
}

inline LiePresentation heisenberg_q() {
  LiePresentation P;
  P.field = FieldSpec::rationals();
  P.name = "heisenberg_q";
  P.basis_names = {"e", "f", "z"};
  LieElement z = P.zero_element();
  z.coeffs[2] = Scalar::one(P.field);
  P.table[{0, 1}] = z;  // [e,f] = z
  return P;
}

inline LiePresentation abelian_q(std::uint32_t n, const std::string& name) {
  LiePresentation P;
  P.field = FieldSpec::rationals();
  P.name = name;
  for (std::uint32_t i = 0; i < n; ++i) P.basis_names.push_back(std::string(1, static_cast<char>('a' + i)));
  return P;
}

inline LiePresentation solv2_q() {
  LiePresentation P;
  P.field = FieldSpec::rationals();
  P.name = "solv2_q";
  P.basis_names = {"h", "e"};
  LieElement e = P.zero_element();
  e.coeffs[1] = Scalar::one(P.field);
  P.table[{0, 1}] = e;  // [h,e] = e
  return P;
}

inline LiePresentation toral_f3() {
  LiePresentation P;
  P.field = FieldSpec::prime(3);
  P.name = "toral_f3";
  P.basis_names = {"t"};
  LieElement t = P.zero_element();
  t.coeffs[0] = Scalar::one(P.field);
  P.pmap = std::vector<LieElement>{t};  // t^[3] = t
  return P;
}

inline LiePresentation rest2_f2() {
  LiePresentation P;
  P.field = FieldSpec::prime(2);
  P.name = "rest2_f2";
  P.basis_names = {"h", "e"};
  LieElement e = P.zero_element(), h = P.zero_element();
  e.coeffs[1] = Scalar::one(P.field);
  h.coeffs[0] = Scalar::one(P.field);
  P.table[{0, 1}] = e;                               // [h,e] = e
  P.pmap = std::vector<LieElement>{h, P.zero_element()};  // h^[2]=h, e^[2]=0
  return P;
}

inline LiePresentation sl2_f5() {
  LiePresentation P;
  P.field = FieldSpec::prime(5);
  P.name = "sl2_f5";
  P.basis_names = {"e", "h", "f"};
  auto el = [&](std::initializer_list<int> v) {
    LieElement u = P.zero_element();
    std::size_t i = 0;
    for (int c : v) u.coeffs[i++] = Scalar::of_int(c, P.field);
    return u;
  };
  P.table[{0, 1}] = el({-2, 0, 0});
  P.table[{0, 2}] = el({0, 1, 0});
  P.table[{1, 2}] = el({0, 0, -2});
  LieElement h = P.zero_element();
  h.coeffs[1] = Scalar::one(P.field);
  P.pmap = std::vector<LieElement>{P.zero_element(), h, P.zero_element()};  // e,f nilpotent, h toral
  return P;
}

// ---- randomized elements ----------------------------------------------------

inline Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.kind == FieldKind::Prime) return Scalar::residue(static_cast<std::uint32_t>(rng() % f.p), f.p);
  std::int64_t num = static_cast<std::int64_t>(rng() % 9) - 4;
  std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;
  return Scalar::of_rational(BigRat(num, den));
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  for (;;) {
    Scalar s = random_scalar(rng, f);
    if (!s.is_zero()) return s;
  }
}

inline LieElement random_lie(std::mt19937_64& rng, const LiePresentation& P) {
  LieElement u = P.zero_element();
  for (auto& c : u.coeffs) c = random_scalar(rng, P.field);
  return u;
}

inline EnvElement random_env(std::mt19937_64& rng, const EnvAlgebra& U, std::uint32_t d,
                             std::uint32_t max_terms = 3) {
  auto basis = U.pbw_basis(d);
  EnvElement e;
  std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng() % max_terms);
  for (std::uint32_t t = 0; t < terms; ++t)
    env_add_term(e, basis[rng() % basis.size()], random_scalar(rng, U.field()));
  return e;
}

inline FPElement random_fp(std::mt19937_64& rng, const FreeProduct& A, std::uint32_t d,
                           std::uint32_t max_terms = 3) {
  auto basis = A.basis(d);
  FPElement e;
  std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng() % max_terms);
  for (std::uint32_t t = 0; t < terms; ++t)
    fp_add_term(e, basis[rng() % basis.size()], random_scalar(rng, A.field()));
  return e;
}

// ---- independent oracle: reduction in the free associative algebra ----------
//
// U(L) (or U_p(L)) is the free associative algebra on the generators modulo
// the two-sided ideal generated by e_j e_i - e_i e_j - [e_j, e_i] (and
// e_i^p - e_i^[p] in restricted mode). The oracle spans the ideal's filtered
// slice by all products word * generator * word of degree <= D, row-reduces
// that span, and compares canonical representatives in the quotient. This
// path shares no code with PBW straightening.

using AssocWord = std::vector<std::uint32_t>;

struct AssocWordLess {
  bool operator()(const AssocWord& a, const AssocWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using AssocVec = std::map<AssocWord, Scalar, AssocWordLess>;

inline void assoc_add(AssocVec& v, const AssocWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

class AssocQuotientOracle {
 public:
  AssocQuotientOracle(const LiePresentation& P, EnvMode mode, std::uint32_t max_degree)
      : pres_(P), degree_(max_degree) {
    std::vector<AssocVec> relations;
    const std::uint32_t n = P.dim();
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t i = 0; i < j; ++i) {
        AssocVec g;
        assoc_add(g, {j, i}, Scalar::one(P.field));
        assoc_add(g, {i, j}, -Scalar::one(P.field));
        LieElement br = P.bracket_basis(j, i);
        for (std::uint32_t k = 0; k < n; ++k) assoc_add(g, {k}, -br.coeffs[k]);
        relations.push_back(std::move(g));
      }
    if (mode == EnvMode::Restricted) {
      const std::uint32_t p = P.field.p;
      for (std::uint32_t i = 0; i < n; ++i) {
        AssocVec g;
        assoc_add(g, AssocWord(p, i), Scalar::one(P.field));
        for (std::uint32_t k = 0; k < n; ++k) assoc_add(g, {k}, -(*P.pmap)[i].coeffs[k]);
        relations.push_back(std::move(g));
      }
    }

    // every w1 * g * w2 of degree <= D
    std::vector<AssocWord> words = words_up_to(degree_);
    for (const auto& g : relations) {
      std::uint32_t dg = g.rbegin()->first.size();
      for (const auto& w1 : words) {
        if (w1.size() + dg > degree_) continue;
        for (const auto& w2 : words) {
          if (w1.size() + dg + w2.size() > degree_) continue;
          AssocVec row;
          for (const auto& [w, c] : g) {
            AssocWord full = w1;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), w2.begin(), w2.end());
            assoc_add(row, full, c);
          }
          insert_row(std::move(row));
        }
      }
    }
  }

  // canonical representative of an element of the quotient
  AssocVec normal_form(AssocVec v) const {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) continue;
        AssocWord lead = it->first;
        Scalar c = it->second;
        assoc_add(v, lead, -c);  // replace lead by -c * tail
        for (const auto& [w, rc] : row->second) assoc_add(v, w, -(c * rc));
        changed = true;
        break;
      }
    }
    return v;
  }

  AssocVec from_env(const EnvElement& a) const {
    AssocVec v;
    for (const auto& [m, c] : a.terms) assoc_add(v, m.expanded(), c);
    return v;
  }

 private:
  std::vector<AssocWord> words_up_to(std::uint32_t d) const {
    std::vector<AssocWord> out{{}};
    std::vector<AssocWord> layer{{}};
    for (std::uint32_t k = 1; k <= d; ++k) {
      std::vector<AssocWord> next;
      for (const auto& w : layer)
        for (std::uint32_t g = 0; g < pres_.dim(); ++g) {
          AssocWord w2 = w;
          w2.push_back(g);
          next.push_back(w2);
          out.push_back(std::move(w2));
        }
      layer = std::move(next);
    }
    return out;
  }

  // echelon rows keyed by leading (greatest) word; row maps lead -> tail such
  // that lead + tail = 0 in the quotient, with lead coefficient folded in
  void insert_row(AssocVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    AssocWord lead = row.rbegin()->first;
    Scalar inv = row.rbegin()->second.inverse();
    AssocVec tail;
    for (const auto& [w, c] : row)
      if (!(w == lead)) assoc_add(tail, w, c * inv);
    rows_[lead] = std::move(tail);
  }

  AssocVec reduce(AssocVec v) const { return normal_form(std::move(v)); }

  const LiePresentation& pres_;
  std::uint32_t degree_;
  std::map<AssocWord, AssocVec, AssocWordLess> rows_;
};

}  // namespace qlie::testing
