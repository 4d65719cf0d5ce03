#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

// Element of a finite-dimensional Lie algebra, as a coefficient vector over
// the presentation's basis.
struct LieElement {
  std::vector<Scalar> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const LieElement&, const LieElement&) = default;
};

inline LieElement lie_add(const LieElement& u, const LieElement& v) {
  LieElement w = u;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] += v.coeffs[i];
  return w;
}

inline LieElement lie_sub(const LieElement& u, const LieElement& v) {
  LieElement w = u;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] -= v.coeffs[i];
  return w;
}

inline LieElement lie_scale(const Scalar& c, const LieElement& u) {
  LieElement w = u;
  for (auto& x : w.coeffs) x *= c;
  return w;
}

// A Lie algebra given by structure constants. Brackets are stored only for
// basis pairs i < j; the diagonal is zero and i > j follows by antisymmetry,
// so only the Jacobi identity is left to validate. For prime fields a p-map
// may be given on basis vectors (values on other elements are derived in the
// restricted enveloping algebra).
struct LiePresentation {
  FieldSpec field;
  std::vector<std::string> basis_names;
  std::map<std::pair<std::uint32_t, std::uint32_t>, LieElement> table;  // keys i < j
  std::optional<std::vector<LieElement>> pmap;
  std::string name = "L";

  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_names.size()); }

  LieElement zero_element() const {
    return {std::vector<Scalar>(dim(), Scalar::zero(field))};
  }

  LieElement basis_element(std::uint32_t i) const {
    LieElement u = zero_element();
    u.coeffs.at(i) = Scalar::one(field);
    return u;
  }

  // [e_i, e_j] for arbitrary i, j.
  LieElement bracket_basis(std::uint32_t i, std::uint32_t j) const {
    if (i == j) return zero_element();
    bool flip = i > j;
    auto it = table.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table.end()) return zero_element();
    return flip ? lie_scale(-Scalar::one(field), it->second) : it->second;
  }

  std::string summary() const {
    return name + " (dim " + std::to_string(dim()) + ", field " + field.str() + ")";
  }
};

inline LieElement bracket(const LiePresentation& P, const LieElement& u, const LieElement& v) {
  if (u.coeffs.size() != P.dim() || v.coeffs.size() != P.dim())
    throw input_error("bracket: element dimension does not match presentation");
  LieElement out = P.zero_element();
  for (std::uint32_t i = 0; i < P.dim(); ++i) {
    if (u.coeffs[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < P.dim(); ++j) {
      if (v.coeffs[j].is_zero() || i == j) continue;
      Scalar c = u.coeffs[i] * v.coeffs[j];
      out = lie_add(out, lie_scale(c, P.bracket_basis(i, j)));
    }
  }
  return out;
}

// Matrix of ad(u) in the presentation basis; column j is [u, e_j].
inline ScalarMatrix ad_matrix(const LiePresentation& P, const LieElement& u) {
  if (u.coeffs.size() != P.dim())
    throw input_error("ad_matrix: element dimension does not match presentation");
  const std::uint32_t n = P.dim();
  ScalarMatrix M(n, std::vector<Scalar>(n, Scalar::zero(P.field)));
  for (std::uint32_t j = 0; j < n; ++j) {
    LieElement col = bracket(P, u, P.basis_element(j));
    for (std::uint32_t r = 0; r < n; ++r) M[r][j] = col.coeffs[r];
  }
  return M;
}

inline ScalarMatrix mat_identity(std::uint32_t n, const FieldSpec& f) {
  ScalarMatrix M(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::uint32_t i = 0; i < n; ++i) M[i][i] = Scalar::one(f);
  return M;
}

inline ScalarMatrix mat_mul(const ScalarMatrix& A, const ScalarMatrix& B) {
  const std::size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
  ScalarMatrix C(n, std::vector<Scalar>(m, Scalar::zero(A[0][0].field())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (A[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

inline ScalarMatrix mat_pow(const ScalarMatrix& A, std::uint64_t e, const FieldSpec& f) {
  ScalarMatrix acc = mat_identity(static_cast<std::uint32_t>(A.size()), f);
  ScalarMatrix base = A;
  while (e != 0) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

struct PresentationIssue {
  enum class Kind { Malformed, Jacobi };
  Kind kind;
  std::array<std::uint32_t, 3> triple{0, 0, 0};  // basis indices, Jacobi only
  std::string detail;
};

struct PresentationReport {
  bool ok = true;
  std::vector<PresentationIssue> issues;
};

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

// Structural checks (malformed data) are reported separately from axiom
// failures; antisymmetry cannot be violated by construction, so the axiom
// surface is the Jacobi identity on basis triples.
inline PresentationReport validate_presentation(const LiePresentation& P) {
  PresentationReport rep;
  auto malformed = [&](std::string msg) {
    rep.ok = false;
    rep.issues.push_back({PresentationIssue::Kind::Malformed, {}, std::move(msg)});
  };

  const std::uint32_t n = P.dim();
  if (n == 0) malformed("empty basis");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!is_identifier(P.basis_names[i])) malformed("basis name '" + P.basis_names[i] + "' is not an identifier");
    if (P.basis_names[i] == "x") malformed("basis name 'x' is reserved for the formal variable");
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (P.basis_names[i] == P.basis_names[j]) malformed("duplicate basis name '" + P.basis_names[i] + "'");
  }
  for (const auto& [key, value] : P.table) {
    if (key.first >= key.second) malformed("bracket entry with indices not in increasing order");
    if (key.second >= n) malformed("bracket entry index out of range");
    if (value.coeffs.size() != n) malformed("bracket value has wrong dimension");
  }
  if (P.pmap) {
    if (P.field.kind != FieldKind::Prime) malformed("p-map given over a field of characteristic zero");
    if (P.pmap->size() != n) malformed("p-map table has wrong size");
    for (const auto& v : *P.pmap)
      if (v.coeffs.size() != n) malformed("p-map value has wrong dimension");
  }
  if (!rep.ok) return rep;  // axiom checks need well-formed data

  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) {
        LieElement jac = bracket(P, P.bracket_basis(i, j), P.basis_element(k));
        jac = lie_add(jac, bracket(P, P.bracket_basis(j, k), P.basis_element(i)));
        jac = lie_add(jac, bracket(P, P.bracket_basis(k, i), P.basis_element(j)));
        if (!jac.is_zero()) {
          rep.ok = false;
          rep.issues.push_back({PresentationIssue::Kind::Jacobi,
                                {i, j, k},
                                "Jacobi identity fails on (" + P.basis_names[i] + ", " + P.basis_names[j] +
                                    ", " + P.basis_names[k] + ")"});
        }
      }
  return rep;
}

}  // namespace qlie
