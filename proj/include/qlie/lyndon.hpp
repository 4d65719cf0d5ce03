#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlie/errors.hpp"

namespace qlie {

// Lyndon words with their standard bracketings. This is reference machinery:
// the per-degree counts give the graded dimensions of the free Lie algebra
// on `alphabet` generators, used to cross-check closure computations.
struct LyndonEntry {
  std::vector<std::uint32_t> word;  // letters in [0, alphabet)
  std::string bracketing;           // e.g. "[a,[a,b]]"
};

namespace detail {

inline bool is_lyndon(const std::vector<std::uint32_t>& w) {
  // strictly smaller than all proper suffixes
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::vector<std::uint32_t> suf(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    if (!(w < suf)) return false;
  }
  return true;
}

inline std::string letter_name(std::uint32_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

inline std::string standard_bracketing(const std::vector<std::uint32_t>& w) {
  if (w.size() == 1) return letter_name(w[0]);
  // right factor = lexicographically least proper suffix (it is Lyndon, and
  // the split is the standard factorization)
  std::size_t best = 1;
  for (std::size_t s = 2; s < w.size(); ++s) {
    std::vector<std::uint32_t> a(w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
    std::vector<std::uint32_t> b(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    if (b < a) best = s;
  }
  std::vector<std::uint32_t> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best));
  std::vector<std::uint32_t> right(w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
  return "[" + standard_bracketing(left) + "," + standard_bracketing(right) + "]";
}

}  // namespace detail

// All Lyndon words of degree 1..max_degree via Duval's algorithm, grouped by
// degree (index 0 holds degree 1).
inline std::vector<std::vector<LyndonEntry>> lyndon_basis(std::uint32_t alphabet,
                                                          std::uint32_t max_degree) {
  if (alphabet < 1 || max_degree < 1) throw input_error("lyndon_basis: alphabet and degree must be positive");
  std::vector<std::vector<LyndonEntry>> out(max_degree);
  std::vector<std::uint32_t> w{0};
  while (!w.empty()) {
    if (w.size() <= max_degree)
      out[w.size() - 1].push_back({w, detail::standard_bracketing(w)});
    // extend periodically to full length, then increment
    std::vector<std::uint32_t> t = w;
    while (t.size() < max_degree) t.push_back(t[t.size() - w.size()]);
    while (!t.empty() && t.back() == alphabet - 1) t.pop_back();
    if (!t.empty()) ++t.back();
    w = t;
  }
  return out;
}

// Necklace-counting dimension of the degree-d slice of the free Lie algebra
// on k generators: (1/d) sum_{e|d} mu(e) k^(d/e).
inline std::uint64_t witt_dimension(std::uint32_t k, std::uint32_t d) {
  auto mobius = [](std::uint32_t m) -> int {
    int mu = 1;
    for (std::uint32_t q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        m /= q;
        if (m % q == 0) return 0;
        mu = -mu;
      }
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  long long total = 0;
  for (std::uint32_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long pw = 1;
    for (std::uint32_t t = 0; t < d / e; ++t) pw *= k;
    total += mobius(e) * pw;
  }
  return static_cast<std::uint64_t>(total / d);
}

}  // namespace qlie
