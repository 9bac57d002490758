#pragma once

// Groebner bases and the ideal-theoretic decisions built on them.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgr/polynomial.hpp"

namespace tgr {

/// Buchberger ran out of its reduction-step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  std::size_t step_budget = 1'000'000;
  /// When set, S-pairs whose lcm has weighted degree above the bound are
  /// dropped. For a (weighted) homogeneous ideal the result is then a
  /// Groebner basis in all degrees up to the bound.
  std::optional<unsigned> degree_bound;
};

/// Generators in a common ring; zero generators are dropped.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);
  explicit Ideal(std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_homogeneous() const;
  /// Same generators viewed in another ring (names matched).
  Ideal in_ring(const Ring& target) const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

struct BuchbergerStats {
  std::size_t reduction_steps = 0;
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_criterion_skips = 0;
  std::size_t chain_criterion_skips = 0;
};

/// Reduced Groebner basis: monic, no term of any element divisible by the
/// leading monomial of another, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> basis, BuchbergerStats stats,
                std::optional<unsigned> truncated_at);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const BuchbergerStats& stats() const { return stats_; }
  /// Weighted degree bound when the run was truncated.
  std::optional<unsigned> truncated_at() const { return truncated_at_; }

  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

 private:
  Ring ring_;
  std::vector<Polynomial> basis_;
  BuchbergerStats stats_;
  std::optional<unsigned> truncated_at_;
};

/// Buchberger's algorithm with normal pair selection, the product
/// criterion and the chain criterion, followed by interreduction.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& options = {});

/// Full reduction of f modulo G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);
bool ideal_contains(const GroebnerBasis& g, const Polynomial& f);

/// S(f, g) = (L/lt(f)) f - (L/lt(g)) g with L = lcm of leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);
/// Every element is monic and fully reduced against the others.
bool is_reduced(const GroebnerBasis& g);

/// f in sqrt(I), decided by 1 in I + (1 - t f) with a fresh variable t.
bool radical_membership(const Polynomial& f, const Ideal& ideal,
                        const BuchbergerOptions& options = {});

/// I : f^infinity, by eliminating t from I + (1 - t f).
Ideal saturation(const Ideal& ideal, const Polynomial& f, const BuchbergerOptions& options = {});

/// I intersected with the subring in `keep`, computed under a block order
/// that eliminates the other variables. The result lives in a grevlex ring
/// on `keep` (in the original variable order).
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                        const BuchbergerOptions& options = {});

/// Thrown for Hilbert-function queries on non-homogeneous input.
class NotHomogeneousIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// dim_k (R/I)_d by counting standard monomials of the leading-term ideal.
std::size_t hilbert_function(const GroebnerBasis& g, unsigned degree);
std::size_t hilbert_function(const Ideal& ideal, unsigned degree);

/// Number of monomials of degree d outside the monomial ideal.
std::size_t standard_monomial_count(std::span<const Monomial> leading, std::size_t variables,
                                    unsigned degree);

struct EmptinessCertificate {
  bool empty = false;
  /// Smallest d with (R/I)_e = 0 for every e >= d.
  std::optional<unsigned> degree;
  /// Exponent of the pure power of each variable found among leading
  /// monomials (0 when there is none).
  std::vector<unsigned> pure_powers;
};

/// Decides whether a homogeneous ideal has no common zero in projective
/// space: the leading-term ideal must contain a pure power of every
/// variable, and the certificate degree is where the Hilbert function dies.
EmptinessCertificate projective_emptiness(const Ideal& ideal, const BuchbergerOptions& options = {});

}  // namespace tgr
