#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qlie/errors.hpp"

namespace qlie {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline bool is_prime_u32(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

enum class FieldKind { Rational, Prime };

struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;  // modulus, meaningful iff kind == Prime

  static FieldSpec rationals() { return {FieldKind::Rational, 0}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31) || !is_prime_u32(p))
      throw input_error("field modulus must be a prime in [2, 2^31): got " + std::to_string(p));
    return {FieldKind::Prime, static_cast<std::uint32_t>(p)};
  }

  std::uint32_t characteristic() const { return kind == FieldKind::Prime ? p : 0; }

  std::string str() const {
    return kind == FieldKind::Rational ? "Q" : "F" + std::to_string(p);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// An exact field element: an arbitrary-precision rational in canonical
// reduced form, or a residue in [0, p). All arithmetic is exact; mixing
// scalars from different fields is a programming error.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& f) { return of_int(0, f); }
  static Scalar one(const FieldSpec& f) { return of_int(1, f); }

  static Scalar of_int(long long v, const FieldSpec& f) {
    if (f.kind == FieldKind::Rational) return of_rational(BigRat(v));
    long long r = v % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    return residue(static_cast<std::uint32_t>(r), f.p);
  }

  static Scalar of_bigint(const BigInt& v, const FieldSpec& f) {
    if (f.kind == FieldKind::Rational) return of_rational(BigRat(v));
    BigInt r = v % f.p;
    if (r < 0) r += f.p;
    return residue(r.convert_to<std::uint32_t>(), f.p);
  }

  static Scalar of_rational(BigRat q) {
    Scalar s;
    s.p_ = 0;
    s.q_ = std::move(q);
    return s;
  }

  static Scalar residue(std::uint32_t v, std::uint32_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = v % p;
    return s;
  }

  // Accepts "n", "-n" and "n/d" with decimal integers. Over a prime field the
  // value is reduced mod p (the denominator must be invertible).
  static Scalar parse(std::string_view text, const FieldSpec& f) {
    auto split = text.find('/');
    std::string num(text.substr(0, split));
    std::string den(split == std::string_view::npos ? "1" : text.substr(split + 1));
    if (num.empty() || den.empty()) throw input_error("empty scalar literal");
    BigInt n, d;
    try {
      n = BigInt(num);
      d = BigInt(den);
    } catch (const std::exception&) {
      throw input_error("bad scalar literal '" + std::string(text) + "'");
    }
    if (d == 0) throw input_error("scalar literal with zero denominator: '" + std::string(text) + "'");
    if (f.kind == FieldKind::Rational) return of_rational(BigRat(n, d));
    Scalar dd = of_bigint(d, f);
    if (dd.is_zero())
      throw input_error("scalar literal '" + std::string(text) + "' has denominator divisible by " + std::to_string(f.p));
    return of_bigint(n, f) * dd.inverse();
  }

  FieldSpec field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldKind::Prime, p_};
  }

  bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  // True for elements of the prime field k·1; used by callers that need
  // "integer" rationals too.
  bool is_integer() const { return p_ != 0 || denominator(q_) == 1; }

  const BigRat& rational() const { return q_; }
  std::uint32_t residue_value() const { return r_; }

  Scalar operator-() const {
    if (p_ == 0) return of_rational(-q_);
    return residue(r_ == 0 ? 0 : p_ - r_, p_);
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (p_ == 0)
      q_ += o.q_;
    else
      r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % p_);
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (p_ == 0)
      q_ *= o.q_;
    else
      r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) * o.r_) % p_);
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw input_error("division by zero scalar");
    if (p_ == 0) return of_rational(1 / q_);
    // extended Euclid on (r_, p_)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = r_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return residue(static_cast<std::uint32_t>(t), p_);
  }

  Scalar pow(std::uint64_t e) const {
    Scalar acc = one(field());
    Scalar base = *this;
    while (e != 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const { return p_ == 0 ? q_.str() : std::to_string(r_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && (a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_);
  }

 private:
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw std::logic_error("scalar arithmetic across distinct fields");
  }

  std::uint32_t p_ = 0;  // 0 = rational
  BigRat q_;
  std::uint32_t r_ = 0;
};

using ScalarMatrix = std::vector<std::vector<Scalar>>;

}  // namespace qlie
