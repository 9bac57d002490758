#pragma once

// Exact coefficient fields: the rationals and the cyclotomic field Q(w),
// w a primitive cube root of unity, stored in the basis {1, w} with
// w^2 = -1 - w.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tgr {

/// Raised on division by zero, inversion of zero and malformed literals.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  /// Accepts `p`, `-p`, `p/q`.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// `p/q`, or `p` when q = 1.
  std::string str() const;

 private:
  mpq_class value_;
};

/// Element a + b*w of Q(w). Products reduce through w^2 = -1 - w.
class Cyclo3 {
 public:
  Cyclo3() = default;
  Cyclo3(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Cyclo3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Cyclo3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclo3 omega() { return {Rational(0), Rational(1)}; }

  /// Accepts the output grammar of str(): sums of rational and
  /// rational*w terms, e.g. `-1 - w`, `1/2 + 3/4*w`, `w`.
  static Cyclo3 parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Cyclo3 operator-() const { return {-a_, -b_}; }
  Cyclo3& operator+=(const Cyclo3& other);
  Cyclo3& operator-=(const Cyclo3& other);
  Cyclo3& operator*=(const Cyclo3& other);
  Cyclo3& operator/=(const Cyclo3& other);

  friend Cyclo3 operator+(Cyclo3 x, const Cyclo3& y) { return x += y; }
  friend Cyclo3 operator-(Cyclo3 x, const Cyclo3& y) { return x -= y; }
  friend Cyclo3 operator*(Cyclo3 x, const Cyclo3& y) { return x *= y; }
  friend Cyclo3 operator/(Cyclo3 x, const Cyclo3& y) { return x /= y; }
  friend bool operator==(const Cyclo3& x, const Cyclo3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Galois conjugate a + b*w^2 = (a - b) - b*w.
  Cyclo3 conjugate() const { return {a_ - b_, -b_}; }
  /// N(a + b*w) = a^2 - a*b + b^2; zero only for zero.
  Rational norm() const;
  /// conj(x) / N(x); throws ArithmeticError for zero.
  Cyclo3 inverse() const;
  Cyclo3 pow(unsigned exponent) const;

  /// `a + b*w` with zero parts dropped, e.g. `-1 - w`, `w`, `2/3`.
  std::string str() const;
  /// str(), parenthesized when it has two parts.
  std::string str_as_factor() const;

 private:
  Rational a_;
  Rational b_;
};

/// Coefficient type used by every polynomial in the engine.
using Scalar = Cyclo3;

}  // namespace tgr
