#pragma once

#include <climits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgr/exactfield.hpp"
#include "tgr/ring.hpp"

namespace tgr {

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

/// Sparse polynomial: nonzero terms sorted by decreasing monomial in the
/// ring's order. Immutable in practice; every operation returns a new value.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  /// Combines like terms, drops zeros and sorts.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(const Ring& ring, const Scalar& c);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial term(const Ring& ring, const Monomial& m, const Scalar& c);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }
  /// Total degree; kMinusInfinity for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous_of_degree(unsigned d) const;
  /// Highest power of variable i that occurs.
  unsigned degree_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) != 0; }

  /// Leading data; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  Scalar coeff(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Scalar& c);
  friend Polynomial operator*(const Scalar& c, const Polynomial& f) { return f * c; }
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  /// this - c * m * g, the elementary reduction step.
  Polynomial sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial mul_monomial(const Monomial& m) const;
  Polynomial pow(unsigned exponent) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Everything but the leading term.
  Polynomial tail() const;

  Scalar evaluate(std::span<const Scalar> point) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::string_view var) const {
    return derivative(ring_.index_of(var));
  }
  /// Homogeneous component of degree d.
  Polynomial homogeneous_part(unsigned d) const;

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws RingMismatch if a variable in use is missing from `target`.
  Polynomial in_ring(const Ring& target) const;

  std::string str() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms, bool /*already_canonical*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

/// Ring homomorphism given by the images of all variables. `images[i]` is
/// the image of variable i; all images share one target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Simultaneous substitution of some variables by name; unassigned
/// variables map to themselves. Images must live in f's ring.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment);

/// Exact quotient f / g; throws std::domain_error if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Polynomial text grammar: sums of terms built from rationals, `w`,
/// variables, `*`, `^` with non-negative integer exponents, and parentheses.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// A polynomial divided by a monomial; returned by parse_laurent for
/// displays such as `1/y - x` or `-2*x/y + 1/(x^2*y)`.
struct LaurentPolynomial {
  Polynomial numerator;
  Monomial denominator;

  /// numerator * (m / denominator); m must be a multiple of the denominator.
  Polynomial times(const Monomial& m) const;
};

/// Like parse_polynomial, and additionally allows division by monomials.
LaurentPolynomial parse_laurent(std::string_view text, const Ring& ring);

}  // namespace tgr
