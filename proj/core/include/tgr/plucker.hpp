#pragma once

// The morphism P^2 -> Gr(2, 4) -> P^5 given by the six wedge cubics, and
// the checks run on it: Grassmannian containment, slice fibers, degree
// arithmetic, injectivity, immersion, line images and image Hilbert data.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgr/euler_sections.hpp"
#include "tgr/hilbert.hpp"
#include "tgr/ideal.hpp"
#include "tgr/linalg.hpp"
#include "tgr/polynomial.hpp"

namespace tgr {

/// Point of projective space over Q(w), stored with its first nonzero
/// coordinate scaled to 1.
class ProjectivePoint {
 public:
  /// Throws std::invalid_argument for the zero vector.
  explicit ProjectivePoint(std::vector<Scalar> coords);

  /// Comma-separated coordinates, optionally in parentheses, each a
  /// polynomial expression in `w` and the given symbols, e.g. `w^2, w, 1`.
  static ProjectivePoint parse(std::string_view text,
                               const std::map<std::string, Scalar>& symbols = {});

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  /// `(0 : -w : 1 : 0 : 0 : 0)`.
  std::string str() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Scalar> coords_;
};

/// Six homogeneous cubics in X, Y, Z indexed Z0..Z5 in the wedge order
/// (12), (13), (14), (23), (24), (34).
struct PluckerMap {
  std::array<Polynomial, 6> cubics;
};

/// The section set failed the generating test.
class NotGenerating : public std::invalid_argument {
 public:
  NotGenerating(const std::string& what, std::size_t rank, std::optional<unsigned> degree)
      : std::invalid_argument(what), rank_(rank), degree_(degree) {}
  std::size_t rank() const { return rank_; }
  /// Certificate degree of the wedge-cubic ideal when it was computed.
  std::optional<unsigned> witness_degree() const { return degree_; }

 private:
  std::size_t rank_;
  std::optional<unsigned> degree_;
};

/// A computation contradicted a fact that holds for every valid input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Slice system outside the shapes the structured solver handles.
class UnsupportedSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The fiber count exceeds m^2, which no factorization d * r = m^2 allows.
class DegreeInconsistency : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws NotGenerating unless generating_test(s) passes.
PluckerMap build_plucker_map(const OrderedSectionSet& s);

/// Canonical image of a point of P^2; throws InternalInconsistency when
/// all six cubics vanish there.
ProjectivePoint evaluate_map(const PluckerMap& map, const ProjectivePoint& p);

struct QuadricCheck {
  /// Signs of Z0*Z5, Z1*Z4, Z2*Z3, normalized so the first is +1.
  std::array<int, 3> signs{};
  Polynomial quadric{rings::plucker_space()};
  /// Pullback of Z0*Z5 + Z1*Z4 + Z2*Z3 (all signs +).
  Polynomial unsigned_pullback{rings::plane()};
};

/// Finds the sign pattern whose quadric pulls back to the zero polynomial.
/// Throws InternalInconsistency when no pattern does.
QuadricCheck quadric_check(const PluckerMap& map);

/// Z_i of a point of P^5 substituted into the quadric.
Scalar evaluate_quadric(const QuadricCheck& q, const ProjectivePoint& p);

struct FiberReport {
  std::vector<ProjectivePoint> preimage_points;
  /// Whether the Jacobian of the slice system has rank 2 at each point.
  std::vector<bool> transversal;
  std::vector<ProjectivePoint> image_points;
  std::size_t distinct_image_count = 0;
  /// Name of the coordinate that vanishes on each preimage point.
  std::vector<std::string> family;

  bool all_transversal() const;
};

/// Solves Z_a o M = Z_b o M = 0 in P^2 over Q(w) when one equation is a
/// monomial and each coordinate line it defines meets the other equation
/// in roots of t^n = c with n <= 3. Throws UnsupportedSystem otherwise.
FiberReport slice_fiber(const PluckerMap& map, std::size_t a, std::size_t b);

/// The slice W = {Z0 = Z5 = 0}.
FiberReport w_slice_fiber(const PluckerMap& map);

/// All roots in Q(w) of t^n = c, for n in {1, 2, 3}; throws
/// UnsupportedSystem when the roots leave Q(w).
std::vector<Scalar> roots_of_binomial(unsigned n, const Scalar& c);

struct DegreeArithmetic {
  int m = 0;
  /// Set when the fiber count pins down d = m^2 and r = 1.
  std::optional<int> d;
  std::optional<int> r;
  bool generically_injective = false;
  std::string verdict;
  /// Factorizations (d, r) of m^2 compatible with the count (d >= count).
  std::vector<std::pair<int, int>> divisor_table;
};

/// A generic codimension-2 slice of the image has d points and d * r = m^2
/// for pullback degree m and map degree r. A count of m^2 forces r = 1.
DegreeArithmetic slice_degree_argument(int m, int fiber_count);

struct ImageHilbertReport {
  /// Substitution-rank samples and their interpolation.
  HilbertData surface;
  /// First differences of the samples and their interpolation.
  HilbertData section;
  Rational degree;
  Rational sectional_genus;

  /// Quadrics in Z0..Z5 vanishing on the image.
  std::size_t quadric_kernel_dimension = 0;
  bool kernel_contains_quadric = false;

  /// Hilbert function of the eliminated image ideal at the sampled degrees.
  std::map<int, long> eliminated_samples;
  bool elimination_agrees = false;
  /// Hilbert function after adding a seeded random linear form.
  Polynomial hyperplane{rings::plucker_space()};
  std::map<int, long> hyperplane_samples;
  bool hyperplane_agrees = false;
  std::size_t image_generators = 0;
};

/// dim of the span of all degree-e monomials in the cubics, for e in
/// [lo, hi].
std::map<int, long> image_hilbert_samples(const PluckerMap& map, int lo, int hi);

/// Needs at least four consecutive degrees, all >= 3. Throws
/// HilbertInconsistent when the samples have not stabilized.
ImageHilbertReport image_hilbert(const PluckerMap& map, int lo, int hi, std::uint64_t seed);

/// Basis of the degree-e forms in Z0..Z5 that vanish after substituting
/// the cubics.
std::vector<Polynomial> image_ideal_in_degree(const PluckerMap& map, unsigned e);

/// The ideal of the image, computed by eliminating X, Y, Z from the graph
/// (Z_i - M_i) with a weighted degree bound of 3 * max_degree. Its Hilbert
/// function is exact up to max_degree.
Ideal image_ideal(const PluckerMap& map, unsigned max_degree);

struct CollapsedFiber {
  std::vector<ProjectivePoint> points;
  std::vector<ProjectivePoint> images;
  std::vector<Scalar> expected;
  /// Every point maps to `expected`.
  bool collapses = false;
};

struct SingletonFiber {
  ProjectivePoint point;
  ProjectivePoint image;
  bool singleton = false;
};

struct InjectivityReport {
  /// Cleared differences of the affine coordinates in x, y, x1, y1.
  Ideal doubling{rings::doubling(), {}};
  /// doubling : (Z0 on both copies)^infinity.
  Ideal saturated{rings::doubling(), {}};
  /// (x - x1)(xy - 1) and (y - y1)(xy - 1) lie in the radical.
  std::array<Polynomial, 2> certificates{Polynomial(rings::doubling()),
                                         Polynomial(rings::doubling())};
  std::array<bool, 2> certified{};
  CollapsedFiber collapsed_to_last;
  CollapsedFiber collapsed_to_first;
  std::vector<SingletonFiber> samples;
  bool verified = false;
  /// First certificate that did not hold.
  std::optional<std::string> failing;
};

/// Works on the chart Z = 1 with Z0 as denominator; Z0 must restrict to a
/// monomial there. Sample points are drawn with IntegerDraw(seed, bound)
/// off xy in {0, 1}.
InjectivityReport injectivity_locus(const PluckerMap& map, std::uint64_t seed,
                                    std::size_t samples = 10, int bound = 5);

/// Fiber over the image of q, as the ideal in X, Y, Z of the 2x2 minors of
/// [M(P); M(q)]. Singleton when every linear form through q is in its
/// radical.
bool fiber_is_singleton(const PluckerMap& map, const ProjectivePoint& q);

struct ImmersionReport {
  /// Rows d/dX, d/dY, d/dZ; columns Z0..Z5.
  PolyMatrix homogeneous_jacobian;
  /// X * row_X + Y * row_Y + Z * row_Z = 3 * cubics.
  bool euler_identity = false;
  std::size_t minor_count = 0;
  EmptinessCertificate minors;

  /// Affine coordinates Z_i/Z0 (i = 1..5) on the chart Z = 1 and their
  /// partial derivatives multiplied by x^2 y^2; rows d/dx, d/dy.
  std::vector<LaurentPolynomial> affine_map;
  PolyMatrix cleared_jacobian;
  std::vector<std::string> mismatches;
  bool matches_published = false;
  /// The 2x2 minors saturated by x*y generate the unit ideal.
  bool chart_immersion = false;

  bool immersion() const { return minors.empty && chart_immersion; }
};

ImmersionReport immersion_check(const PluckerMap& map);

/// Z_i / Z0 for i = 1..5 on the chart Z = 1 with the common monomial
/// factor cancelled. Throws std::invalid_argument unless Z0 restricts to a
/// monomial there.
std::vector<LaurentPolynomial> affine_coordinates(const PluckerMap& map);

struct LineImageReport {
  /// The coordinate vanishing on the line.
  std::string line;
  /// The six cubics restricted to the line.
  std::array<Polynomial, 6> parametrization{
      Polynomial(rings::plane()), Polynomial(rings::plane()), Polynomial(rings::plane()),
      Polynomial(rings::plane()), Polynomial(rings::plane()), Polynomial(rings::plane())};
  /// Linear forms in Z0..Z5 vanishing on the image, in reduced echelon form.
  std::vector<Polynomial> linear_relations;
  /// Coordinates of the plane spanned by the image.
  std::array<std::string, 3> plane_coordinates;
  /// Cubic in the plane coordinates, as a polynomial in Z0..Z5.
  Polynomial cubic{rings::plucker_space()};
  bool relations_hold = false;

  std::vector<ProjectivePoint> singular_points;
  std::size_t quadratic_rank = 0;
  bool nodal = false;

  bool linear_matches_published = false;
  bool cubic_matches_published = false;
  /// Published relations that fail on the parametrization.
  std::vector<std::string> findings;
};

/// One report per line X = 0, Y = 0, Z = 0.
std::array<LineImageReport, 3> line_images(const PluckerMap& map);

struct PlaneCubicSingularity {
  /// Length of the Jacobian scheme (points counted with multiplicity).
  long length = 0;
  /// Points at which the Jacobian scheme is reduced (a cusp is not listed).
  std::vector<ProjectivePoint> points;
  /// Rank of the quadratic part at the first listed point.
  std::size_t quadratic_rank = 0;
  bool nodal = false;
};

/// Singularities of a cubic in three variables of its ring.
PlaneCubicSingularity plane_cubic_singularity(const Polynomial& cubic);

struct PipelineVerdict {
  bool generically_injective = false;
  /// "generically injective" or the stage that failed.
  std::string verdict;
  GeneratingResult generating;
  /// Length of S / (L1 o M, L2 o M) for the random slice. A count of m^2
  /// together with a singleton fiber at the sample point gives m^2 image
  /// points on the slice.
  std::optional<long> slice_length;
  std::optional<FiberReport> special_fiber;
  std::optional<ProjectivePoint> sample_point;
  bool singleton_fiber = false;
  std::optional<DegreeArithmetic> arithmetic;
};

/// Generating test, map, slice length, a singleton fiber at a random
/// point, and the degree argument. Randomness comes from
/// IntegerDraw(derived_seed(seed), bound); the sample point is redrawn
/// while its image has a zero coordinate. For the reference section set the
/// special slice W is solved and supplies the point count.
PipelineVerdict generic_injectivity_pipeline(const OrderedSectionSet& s, std::uint64_t seed,
                                             int bound = 5);

}  // namespace tgr
