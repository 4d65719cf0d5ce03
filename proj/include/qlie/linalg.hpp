#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qlie/freeprod.hpp"

namespace qlie {

struct RrefResult {
  ScalarMatrix rows;                     // reduced row echelon form
  std::vector<std::uint32_t> pivot_cols; // one per nonzero row
};

namespace detail {

// Plain Gauss-Jordan; pivot = first nonzero entry in column order.
inline RrefResult rref_plain(ScalarMatrix M, const FieldSpec& f) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    Scalar inv = M[r][c].inverse();
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Scalar factor = M[i][c];
      for (std::size_t j = 0; j < cols; ++j) M[i][j] -= factor * M[r][j];
    }
    out.pivot_cols.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }
  M.resize(r, std::vector<Scalar>(cols, Scalar::zero(f)));
  out.rows = std::move(M);
  return out;
}

// Fraction-free (Bareiss) forward elimination over cleared-denominator
// integer rows, then a rational back-substitution pass. Keeps intermediate
// entries at determinant size instead of letting gcd-reduced fractions churn.
inline RrefResult rref_fraction_free(const ScalarMatrix& M, const FieldSpec& f) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();

  std::vector<std::vector<BigInt>> A(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = lcm(l, denominator(M[i][j].rational()));
    for (std::size_t j = 0; j < cols; ++j) {
      const BigRat& q = M[i][j].rational();
      A[i][j] = numerator(q) * (l / denominator(q));
    }
  }

  std::vector<std::uint32_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[r], A[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) / prev;
      }
      A[i][c] = 0;
    }
    prev = A[r][c];
    pivots.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }

  // back-substitute over Q and normalize pivots to 1
  ScalarMatrix R(r, std::vector<Scalar>(cols, Scalar::zero(f)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) R[i][j] = Scalar::of_rational(BigRat(A[i][j]));
  for (std::size_t i = r; i-- > 0;) {
    Scalar inv = R[i][pivots[i]].inverse();
    for (auto& x : R[i]) x *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      Scalar factor = R[k][pivots[i]];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) R[k][j] -= factor * R[i][j];
    }
  }
  return {std::move(R), std::move(pivots)};
}

}  // namespace detail

inline RrefResult rref(const ScalarMatrix& M, const FieldSpec& f) {
  if (f.kind == FieldKind::Rational) return detail::rref_fraction_free(M, f);
  return detail::rref_plain(M, f);
}

// Basis of { v : M v = 0 } for an ncols-column matrix (rows may be empty).
inline std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& M, const FieldSpec& f,
                                                  std::size_t ncols) {
  std::vector<std::vector<Scalar>> out;
  if (M.empty()) {
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<Scalar> v(ncols, Scalar::zero(f));
      v[j] = Scalar::one(f);
      out.push_back(std::move(v));
    }
    return out;
  }
  RrefResult R = rref(M, f);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : R.pivot_cols) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(f));
    v[fc] = Scalar::one(f);
    for (std::size_t r = 0; r < R.pivot_cols.size(); ++r) v[R.pivot_cols[r]] = -R.rows[r][fc];
    out.push_back(std::move(v));
  }
  return out;
}

// A filtered linear subspace of A, stored as a reduced echelon basis over the
// global word order with leading term = greatest word. Echelon over a graded
// order makes per-degree dimensions readable straight off the leading terms.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  explicit SubspaceBasis(const std::vector<FPElement>& generators) {
    for (const auto& g : generators) insert(g);
  }

  std::uint32_t dimension() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<FPElement>& rows() const { return rows_; }

  FPElement reduce(FPElement v) const {
    bool changed = true;
    while (changed && !v.is_zero()) {
      changed = false;
      for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
        const FPElement* row = row_with_leading(it->first);
        if (row == nullptr) continue;
        v = fp_sub(v, fp_scale(it->second, *row));
        changed = true;
        break;
      }
    }
    return v;
  }

  bool contains(const FPElement& v) const { return reduce(v).is_zero(); }

  bool insert(const FPElement& v) {
    FPElement w = reduce(v);
    if (w.is_zero()) return false;
    w = fp_scale(w.terms.rbegin()->second.inverse(), w);
    const FPWord lead = w.terms.rbegin()->first;
    for (auto& row : rows_) {
      auto it = row.terms.find(lead);
      if (it != row.terms.end()) row = fp_sub(row, fp_scale(it->second, w));
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead, [](const FPElement& r, const FPWord& l) {
      return WordLess{}(r.terms.rbegin()->first, l);
    });
    rows_.insert(pos, std::move(w));
    return true;
  }

  // dims[k] = dim(V intersect filtration_k) - dim(V intersect filtration_{k-1})
  std::vector<std::uint32_t> degree_dims(std::uint32_t max_d) const {
    std::vector<std::uint32_t> dims(max_d + 1, 0);
    for (const auto& row : rows_) {
      std::uint32_t d = word_degree(row.terms.rbegin()->first);
      if (d <= max_d) ++dims[d];
    }
    return dims;
  }

  // reduced echelon bases over a fixed total order are unique per subspace
  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.rows_ == b.rows_;
  }

 private:
  const FPElement* row_with_leading(const FPWord& w) const {
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), w, [](const FPElement& r, const FPWord& l) {
      return WordLess{}(r.terms.rbegin()->first, l);
    });
    if (pos == rows_.end()) return nullptr;
    return pos->terms.rbegin()->first == w ? &*pos : nullptr;
  }

  std::vector<FPElement> rows_;  // sorted by leading word
};

}  // namespace qlie
