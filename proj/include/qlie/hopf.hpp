#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qlie/linalg.hpp"
#include "qlie/parallel.hpp"

namespace qlie {

using WordPair = std::pair<FPWord, FPWord>;

struct PairLess {
  bool operator()(const WordPair& a, const WordPair& b) const {
    WordLess wl;
    if (wl(a.first, b.first)) return true;
    if (wl(b.first, a.first)) return false;
    return wl(a.second, b.second);
  }
};

// Element of A (x) A, the carrier of coproducts and primitivity defects.
// Ungraded tensor product: no sign rule.
struct TensorElement {
  std::map<WordPair, Scalar, PairLess> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

inline void tensor_add_term(TensorElement& t, const WordPair& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.terms.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.terms.erase(it);
  }
}

inline TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (const auto& [k, c] : b.terms) tensor_add_term(out, k, c);
  return out;
}

inline TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (const auto& [k, c] : b.terms) tensor_add_term(out, k, -c);
  return out;
}

inline TensorElement tensor_scale(const Scalar& c, const TensorElement& a) {
  TensorElement out;
  for (const auto& [k, x] : a.terms) tensor_add_term(out, k, c * x);
  return out;
}

// (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
inline TensorElement tensor_multiply(const FreeProduct& A, const TensorElement& s, const TensorElement& t) {
  TensorElement out;
  for (const auto& [ks, cs] : s.terms)
    for (const auto& [kt, ct] : t.terms) {
      FPElement left = A.multiply_words(ks.first, kt.first, Scalar::one(A.field()));
      FPElement right = A.multiply_words(ks.second, kt.second, Scalar::one(A.field()));
      Scalar c = cs * ct;
      for (const auto& [wl, cl] : left.terms)
        for (const auto& [wr, cr] : right.terms) tensor_add_term(out, {wl, wr}, c * cl * cr);
    }
  return out;
}

namespace detail {

inline Scalar binomial_scalar(std::uint32_t n, std::uint32_t k, const FieldSpec& f) {
  BigInt num = 1, den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return Scalar::of_bigint(num / den, f);
}

// Delta(x^n) = sum_i C(n,i) x^i (x) x^{n-i}
inline TensorElement x_power_coproduct(const FreeProduct& A, std::uint32_t n) {
  TensorElement out;
  for (std::uint32_t i = 0; i <= n; ++i) {
    FPWord l = i == 0 ? FPWord{} : FPWord{FPLetter::x(i)};
    FPWord r = i == n ? FPWord{} : FPWord{FPLetter::x(n - i)};
    tensor_add_term(out, {l, r}, binomial_scalar(n, i, A.field()));
  }
  return out;
}

// Delta on an env-letter: the product over generators of
// (e_j (x) 1 + 1 (x) e_j)^{k_j}, multiplied out in A (x) A. One code path for
// full and restricted mode; multiplicativity of Delta is property-checked.
inline TensorElement monomial_coproduct(const FreeProduct& A, const PBWMonomial& m) {
  const std::uint32_t n = static_cast<std::uint32_t>(m.exps.size());
  TensorElement acc;
  tensor_add_term(acc, {FPWord{}, FPWord{}}, Scalar::one(A.field()));
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint32_t k = m.exps[j];
    if (k == 0) continue;
    TensorElement factor;
    for (std::uint32_t i = 0; i <= k; ++i) {
      PBWMonomial lm = PBWMonomial::identity(n), rm = PBWMonomial::identity(n);
      lm.exps[j] = i;
      rm.exps[j] = k - i;
      FPWord l = i == 0 ? FPWord{} : FPWord{FPLetter::env(lm)};
      FPWord r = i == k ? FPWord{} : FPWord{FPLetter::env(rm)};
      tensor_add_term(factor, {l, r}, binomial_scalar(k, i, A.field()));
    }
    acc = tensor_multiply(A, acc, factor);
  }
  return acc;
}

}  // namespace detail

// The unique algebra-morphism extension of Delta(g) = g (x) 1 + 1 (x) g on
// Lie generators and on x. Delta preserves filtration degree, so a degree cap
// that holds the input loses nothing.
inline TensorElement coproduct(const FreeProduct& A, const FPElement& a, std::uint32_t degree_cap) {
  if (a.degree() > degree_cap)
    throw input_error("coproduct: element degree " + std::to_string(a.degree()) +
                      " exceeds cap " + std::to_string(degree_cap));
  TensorElement out;
  std::map<FPWord, TensorElement, WordLess> letter_cache;
  for (const auto& [w, c] : a.terms) {
    TensorElement t;
    tensor_add_term(t, {FPWord{}, FPWord{}}, Scalar::one(A.field()));
    for (const auto& letter : w) {
      FPWord key{letter};
      auto it = letter_cache.find(key);
      if (it == letter_cache.end()) {
        TensorElement lt = letter.is_x() ? detail::x_power_coproduct(A, letter.xexp)
                                         : detail::monomial_coproduct(A, letter.mono);
        it = letter_cache.emplace(std::move(key), std::move(lt)).first;
      }
      t = tensor_multiply(A, t, it->second);
    }
    out = tensor_add(out, tensor_scale(c, t));
  }
  return out;
}

// Delta(a) - a (x) 1 - 1 (x) a; zero exactly on primitive elements.
inline TensorElement primitivity_defect(const FreeProduct& A, const FPElement& a) {
  TensorElement out = coproduct(A, a, a.degree());
  for (const auto& [w, c] : a.terms) {
    tensor_add_term(out, {w, FPWord{}}, -c);
    tensor_add_term(out, {FPWord{}, w}, -c);
  }
  return out;
}

struct PrimitivityCheck {
  bool primitive = false;
  std::optional<std::pair<WordPair, Scalar>> witness;  // first surviving defect term
};

inline PrimitivityCheck is_primitive(const FreeProduct& A, const FPElement& a) {
  TensorElement d = primitivity_defect(A, a);
  if (d.is_zero()) return {true, std::nullopt};
  return {false, std::make_pair(d.terms.begin()->first, d.terms.begin()->second)};
}

// Counit extension to A: empty word -> 1, every other word -> 0. Applying it
// to a tensor leg must return the element itself (counit law).
inline FPElement counit_left(const FreeProduct&, const TensorElement& t) {
  FPElement out;
  for (const auto& [k, c] : t.terms)
    if (k.first.empty()) fp_add_term(out, k.second, c);
  return out;
}

inline FPElement counit_right(const FreeProduct&, const TensorElement& t) {
  FPElement out;
  for (const auto& [k, c] : t.terms)
    if (k.second.empty()) fp_add_term(out, k.first, c);
  return out;
}

// Exact kernel of a linear map into A (x) A restricted to span(ambient).
// Columns are assembled independently (parallelizable); the matrix is then
// reduced by fraction-free elimination over Q or plain elimination mod p.
inline SubspaceBasis map_kernel(const FreeProduct& A, const std::vector<FPElement>& ambient,
                                const std::function<TensorElement(const FPElement&)>& map,
                                std::uint32_t workers = 1) {
  const std::size_t n = ambient.size();
  std::vector<TensorElement> cols(n);
  parallel_for(n, workers, [&](std::size_t j) { cols[j] = map(ambient[j]); });

  std::map<WordPair, std::size_t, PairLess> row_index;
  for (const auto& col : cols)
    for (const auto& [k, c] : col.terms) row_index.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, idx] : row_index) idx = r++;

  ScalarMatrix M(row_index.size(), std::vector<Scalar>(n, Scalar::zero(A.field())));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : cols[j].terms) M[row_index.at(k)][j] = c;

  std::vector<FPElement> kernel;
  for (const auto& v : nullspace(M, A.field(), n)) {
    FPElement e;
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) e = fp_add(e, fp_scale(v[j], ambient[j]));
    kernel.push_back(std::move(e));
  }
  return SubspaceBasis(kernel);
}

// Primitive elements within the span of the given words: the kernel of the
// primitivity defect. For the PBW ambient of Q(L) this recovers exactly
// embed_lie(L) in the supported modes.
inline SubspaceBasis primitive_subspace(const FreeProduct& A, const std::vector<FPWord>& ambient,
                                        std::uint32_t d, std::uint32_t workers = 1) {
  std::vector<FPElement> vecs;
  for (const auto& w : ambient) {
    if (word_degree(w) > d)
      throw input_error("primitive_subspace: ambient word exceeds the degree cap");
    FPElement e;
    fp_add_term(e, w, Scalar::one(A.field()));
    vecs.push_back(std::move(e));
  }
  return map_kernel(A, vecs, [&](const FPElement& v) { return primitivity_defect(A, v); }, workers);
}

}  // namespace qlie
