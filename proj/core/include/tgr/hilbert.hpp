#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tgr/exactfield.hpp"

namespace tgr {

/// Samples of a Hilbert function and the polynomial they stabilize to.
struct HilbertData {
  /// degree -> dim_k of the degree-d piece of the quotient ring.
  std::map<int, long> samples;
  /// First degree of the window on which the polynomial fits.
  int stable_from = 0;
  /// Coefficients in t, constant term first.
  std::vector<Rational> polynomial;

  /// Polynomial degree (the projective dimension); -1 for the zero polynomial.
  int dimension() const;
  Rational leading_coefficient() const;
  /// leading coefficient times dimension!, the degree of the variety.
  Rational variety_degree() const;
  Rational evaluate(long t) const;
  /// 1 - P(0) for a curve Hilbert polynomial deg*t + (1 - g).
  Rational arithmetic_genus() const;
};

/// Samples that no polynomial of bounded degree fits; names the degree.
class HilbertInconsistent : public std::domain_error {
 public:
  HilbertInconsistent(const std::string& what, int degree)
      : std::domain_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Interpolates the Hilbert polynomial from consecutive samples.
///
/// Finds the longest tail window of at least `max_dimension + 2` samples on
/// which the (max_dimension + 1)-th differences vanish, then interpolates by
/// Newton forward differences. With max_dimension = 2 the window is four
/// consecutive degrees with constant second difference.
HilbertData hilbert_polynomial(const std::map<int, long>& samples, int max_dimension = 2);

/// First differences P(d) - P(d - 1), keyed by d; needs consecutive keys.
std::map<int, long> first_differences(const std::map<int, long>& samples);

}  // namespace tgr
