#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qlie/envelope.hpp"

namespace qlie {

// One letter of a free-product word: either a non-identity PBW monomial from
// Q(L) or a positive power of the formal variable x.
struct FPLetter {
  PBWMonomial mono;        // meaningful iff xexp == 0
  std::uint32_t xexp = 0;  // >= 1 for an x-letter

  static FPLetter env(PBWMonomial m) { return {std::move(m), 0}; }
  static FPLetter x(std::uint32_t e) { return {PBWMonomial{}, e}; }

  bool is_x() const { return xexp != 0; }
  std::uint32_t degree() const { return is_x() ? xexp : mono.degree(); }

  friend bool operator==(const FPLetter&, const FPLetter&) = default;
};

inline bool letter_less(const FPLetter& a, const FPLetter& b) {
  if (a.is_x() != b.is_x()) return !a.is_x();  // env-letters before x-letters
  if (a.is_x()) return a.xexp < b.xexp;
  return MonomialLess{}(a.mono, b.mono);
}

// Alternating word: env-letters and x-letters strictly alternate; the empty
// word is the identity.
using FPWord = std::vector<FPLetter>;

inline std::uint32_t word_degree(const FPWord& w) {
  std::uint32_t d = 0;
  for (const auto& l : w) d += l.degree();
  return d;
}

inline bool word_is_normal(const FPWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_x() && w[i].mono.is_identity()) return false;
    if (i + 1 < w.size() && w[i].is_x() == w[i + 1].is_x()) return false;
  }
  return true;
}

// Graded, then by length, then letterwise.
struct WordLess {
  bool operator()(const FPWord& a, const FPWord& b) const {
    std::uint32_t da = word_degree(a), db = word_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return letter_less(a[i], b[i]);
    }
    return false;
  }
};

struct FPElement {
  std::map<FPWord, Scalar, WordLess> terms;  // canonical: normal words, no zero coefficients

  bool is_zero() const { return terms.empty(); }

  std::uint32_t degree() const {
    return terms.empty() ? 0 : word_degree(terms.rbegin()->first);
  }

  friend bool operator==(const FPElement&, const FPElement&) = default;
};

inline void fp_add_term(FPElement& e, const FPWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.terms.erase(it);
  }
}

inline FPElement fp_add(const FPElement& a, const FPElement& b) {
  FPElement out = a;
  for (const auto& [w, c] : b.terms) fp_add_term(out, w, c);
  return out;
}

inline FPElement fp_sub(const FPElement& a, const FPElement& b) {
  FPElement out = a;
  for (const auto& [w, c] : b.terms) fp_add_term(out, w, -c);
  return out;
}

inline FPElement fp_scale(const Scalar& c, const FPElement& a) {
  FPElement out;
  for (const auto& [w, x] : a.terms) fp_add_term(out, w, c * x);
  return out;
}

// A = Q(L) * k[x], the free product realizing Q(<L,x>). Words multiply by
// concatenation followed by merging of adjacent same-factor letters:
// x-letters add exponents; env-letters multiply in Q(L), which can split a
// word into several (and delete letters through identity components, creating
// new adjacencies), so normalization runs to a fixed point. Each merge drops
// (degree, length) lexicographically, hence terminates.
class FreeProduct {
 public:
  FreeProduct(LiePresentation P, EnvMode mode) : env_(std::move(P), mode) {}

  const EnvAlgebra& env() const { return env_; }
  const FieldSpec& field() const { return env_.field(); }

  FPElement zero() const { return {}; }

  FPElement scalar(const Scalar& c) const {
    FPElement e;
    fp_add_term(e, {}, c);
    return e;
  }

  FPElement one() const { return scalar(Scalar::one(field())); }

  FPElement inject_env(const EnvElement& a) const {
    FPElement out;
    for (const auto& [m, c] : a.terms) {
      if (m.is_identity())
        fp_add_term(out, {}, c);
      else
        fp_add_term(out, {FPLetter::env(m)}, c);
    }
    return out;
  }

  FPElement x_gen() const {
    FPElement e;
    fp_add_term(e, {FPLetter::x(1)}, Scalar::one(field()));
    return e;
  }

  FPElement multiply_words(const FPWord& a, const FPWord& b, const Scalar& c) const {
    FPElement out;
    FPWord raw = a;
    raw.insert(raw.end(), b.begin(), b.end());
    normalize_into(std::move(raw), c, out);
    return out;
  }

  FPElement multiply(const FPElement& a, const FPElement& b) const {
    FPElement out;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) {
        FPWord raw = wa;
        raw.insert(raw.end(), wb.begin(), wb.end());
        normalize_into(raw, ca * cb, out);
      }
    return out;
  }

  FPElement power(const FPElement& a, std::uint32_t m) const {
    FPElement acc = one();
    for (std::uint32_t i = 0; i < m; ++i) acc = multiply(acc, a);
    return acc;
  }

  FPElement commutator(const FPElement& a, const FPElement& b) const {
    return fp_sub(multiply(a, b), multiply(b, a));
  }

  FPElement truncate(const FPElement& a, std::uint32_t d) const {
    FPElement out;
    for (const auto& [w, c] : a.terms)
      if (word_degree(w) <= d) fp_add_term(out, w, c);
    return out;
  }

  Scalar counit(const FPElement& a) const {
    auto it = a.terms.find(FPWord{});
    return it == a.terms.end() ? Scalar::zero(field()) : it->second;
  }

  // All normal-form words of degree <= d, in word order.
  std::vector<FPWord> basis(std::uint32_t d) const {
    std::vector<std::vector<PBWMonomial>> env_by_degree(d + 1);
    for (const auto& m : env_.pbw_basis(d))
      if (!m.is_identity()) env_by_degree[m.degree()].push_back(m);

    std::vector<FPWord> out;
    FPWord cur;
    enumerate_words(cur, 0, d, env_by_degree, out);
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
  }

 private:
  void enumerate_words(FPWord& cur, std::uint32_t used, std::uint32_t d,
                       const std::vector<std::vector<PBWMonomial>>& env_by_degree,
                       std::vector<FPWord>& out) const {
    out.push_back(cur);
    const bool last_x = !cur.empty() && cur.back().is_x();
    const bool last_env = !cur.empty() && !cur.back().is_x();
    for (std::uint32_t k = 1; k + used <= d; ++k) {
      if (!last_env)
        for (const auto& m : env_by_degree[k]) {
          cur.push_back(FPLetter::env(m));
          enumerate_words(cur, used + k, d, env_by_degree, out);
          cur.pop_back();
        }
      if (!last_x) {
        cur.push_back(FPLetter::x(k));
        enumerate_words(cur, used + k, d, env_by_degree, out);
        cur.pop_back();
      }
    }
  }

  void normalize_into(FPWord raw, const Scalar& coeff, FPElement& out) const {
    if (coeff.is_zero()) return;
    std::size_t k = 0;
    while (k + 1 < raw.size()) {
      if (raw[k].is_x() != raw[k + 1].is_x()) {
        ++k;
        continue;
      }
      if (raw[k].is_x()) {
        raw[k].xexp += raw[k + 1].xexp;
        raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        continue;  // re-examine the merged letter against its new neighbour
      }
      EnvElement prod = env_.multiply_monomials(raw[k].mono, raw[k + 1].mono, Scalar::one(field()));
      for (const auto& [m, c] : prod.terms) {
        FPWord next;
        next.reserve(raw.size());
        next.insert(next.end(), raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(k));
        if (!m.is_identity()) next.push_back(FPLetter::env(m));
        next.insert(next.end(), raw.begin() + static_cast<std::ptrdiff_t>(k) + 2, raw.end());
        normalize_into(std::move(next), coeff * c, out);
      }
      return;
    }
    assert(word_is_normal(raw));
    fp_add_term(out, raw, coeff);
  }

  EnvAlgebra env_;
};

}  // namespace qlie
