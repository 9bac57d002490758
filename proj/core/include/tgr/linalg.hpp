#pragma once

// Exact linear algebra over polynomial coefficient spaces: determinants of
// polynomial matrices, echelon spans, ranks and kernels.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tgr/polynomial.hpp"

namespace tgr {

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Laplace expansion along the first row.
Polynomial determinant_cofactor(const PolyMatrix& m);
/// Fraction-free Bareiss elimination with exact polynomial division.
Polynomial determinant_bareiss(const PolyMatrix& m);
/// Cofactor up to 3x3, Bareiss above. Throws std::invalid_argument when
/// the matrix is not square or empty.
Polynomial determinant(const PolyMatrix& m);

/// All k x k minors, rows and columns taken in lexicographic order.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

/// Sparse linear combination of inserted vectors: index -> coefficient.
using Combination = std::map<std::size_t, Scalar>;

/// Row-echelon basis of a subspace of a polynomial ring viewed as a vector
/// space over its coefficient field, keyed by leading monomial.
///
/// When constructed with `track_combinations`, every insert that reduces to
/// zero records the dependency among previously inserted vectors, so the
/// span doubles as a kernel finder.
class LinearSpan {
 public:
  explicit LinearSpan(Ring ring, bool track_combinations = false);

  /// Adds f; returns true when f was independent of the span so far.
  bool insert(const Polynomial& f);
  /// Remainder of f after echelon reduction; zero iff f is in the span.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  /// Dependencies found so far (only with track_combinations).
  const std::vector<Combination>& kernel() const { return kernel_; }

 private:
  struct Row {
    Polynomial vector;
    Combination combination;
  };

  Ring ring_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivots_;
  std::vector<Combination> kernel_;
};

/// Thrown when an input to a coefficient-matrix routine is not homogeneous
/// of the requested degree.
class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank of the coefficient matrix of `polys`, all homogeneous of `degree`.
std::size_t coeff_matrix_rank(std::span<const Polynomial> polys, unsigned degree);

/// Dimension of the degree-d piece of the ideal generated by homogeneous
/// `generators`: the rank of the Macaulay matrix of all monomial multiples.
std::size_t macaulay_rank(std::span<const Polynomial> generators, unsigned degree);

/// Basis of the linear relations sum c_i * polys[i] = 0.
std::vector<std::vector<Scalar>> linear_relations(std::span<const Polynomial> polys);

/// Rank of a dense scalar matrix.
std::size_t rank(ScalarMatrix rows);

/// Nonzero rows of the reduced row echelon form (pivots equal to 1).
ScalarMatrix reduced_row_echelon(ScalarMatrix rows);

}  // namespace tgr
