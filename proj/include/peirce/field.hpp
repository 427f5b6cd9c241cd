#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "peirce/error.hpp"

namespace peirce {

using Int = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, stored gcd-reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rational, prime };

/// Ground field descriptor: the rationals, or a prime field F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;  // prime modulus, meaningful iff kind == prime

  static FieldSpec rationals() { return FieldSpec{FieldKind::rational, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;

  std::uint64_t characteristic() const { return kind == FieldKind::prime ? p : 0; }

  std::string to_string() const {
    return kind == FieldKind::rational ? std::string("Q") : "F" + std::to_string(p);
  }
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Residues are kept below 2^31 so products fit in 64 bits without __int128.
inline constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > detail::kMaxPrime) fail(errc::bad_input, "prime modulus too large");
  if (!detail::is_prime_u64(p)) fail(errc::bad_input, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::prime, p};
}

/// Exact scalar of a FieldSpec. Always stored in canonical form, so equal
/// scalars have identical representations.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& f) { return of_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return of_int(f, 1); }

  static Scalar of_int(const FieldSpec& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rational) {
      s.q_ = v;
    } else {
      long long m = v % static_cast<long long>(f.p);
      if (m < 0) m += static_cast<long long>(f.p);
      s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
  }

  static Scalar of_rational(Rational q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.q_ = std::move(q);
    return s;
  }

  static Scalar of_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.kind != FieldKind::prime) fail(errc::bad_input, "residue scalar needs a prime field");
    Scalar s;
    s.field_ = f;
    s.r_ = r % f.p;
    return s;
  }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return field_.kind == FieldKind::rational ? q_.is_zero() : r_ == 0; }
  bool is_one() const { return field_.kind == FieldKind::rational ? q_ == 1 : r_ == 1; }

  const Rational& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar s = a;
    if (a.field_.kind == FieldKind::rational)
      s.q_ += b.q_;
    else
      s.r_ = (a.r_ + b.r_) % a.field_.p;
    return s;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar s = a;
    if (a.field_.kind == FieldKind::rational)
      s.q_ -= b.q_;
    else
      s.r_ = (a.r_ + a.field_.p - b.r_) % a.field_.p;
    return s;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar s = a;
    if (a.field_.kind == FieldKind::rational)
      s.q_ *= b.q_;
    else
      s.r_ = a.r_ * b.r_ % a.field_.p;
    return s;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (b.is_zero()) fail(errc::division_by_zero, "scalar division by zero");
    Scalar s = a;
    if (a.field_.kind == FieldKind::rational)
      s.q_ /= b.q_;
    else
      s.r_ = a.r_ * detail::mod_pow(b.r_, a.field_.p - 2, a.field_.p) % a.field_.p;
    return s;
  }

  Scalar operator-() const {
    Scalar s = *this;
    if (field_.kind == FieldKind::rational)
      s.q_ = -q_;
    else if (r_ != 0)
      s.r_ = field_.p - r_;
    return s;
  }

  Scalar inverse() const { return one(field_) / *this; }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_);
  }

  std::string to_string() const {
    if (field_.kind == FieldKind::prime) return std::to_string(r_);
    if (boost::multiprecision::denominator(q_) == 1)
      return boost::multiprecision::numerator(q_).str();
    return boost::multiprecision::numerator(q_).str() + "/" +
           boost::multiprecision::denominator(q_).str();
  }

  /// Parses the canonical text form: "num" or "num/den" over Q, a decimal
  /// residue over F_p.
  static Scalar parse(const FieldSpec& f, const std::string& text) {
    try {
      if (f.kind == FieldKind::prime) {
        Int v(text);
        Int m = v % Int(f.p);
        if (m < 0) m += f.p;
        return of_residue(f, m.convert_to<std::uint64_t>());
      }
      auto slash = text.find('/');
      if (slash == std::string::npos) return of_rational(Rational(Int(text)));
      Int num(text.substr(0, slash));
      Int den(text.substr(slash + 1));
      if (den == 0) fail(errc::bad_input, "zero denominator in scalar '" + text + "'");
      if (den < 0) num = -num, den = -den;
      return of_rational(Rational(num, den));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::bad_input, "cannot parse scalar '" + text + "'");
    }
  }

 private:
  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
      fail(errc::field_mismatch,
           "scalars from " + a.field_.to_string() + " and " + b.field_.to_string());
  }

  FieldSpec field_ = FieldSpec::rationals();
  Rational q_ = 0;       // rational payload
  std::uint64_t r_ = 0;  // prime-field payload, in [0, p)
};

enum class ScalarOp { add, sub, mul, div };

/// Four-function field arithmetic with an explicit operation selector.
inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::div: return a / b;
  }
  fail(errc::bad_input, "unknown scalar op");
}

}  // namespace peirce
