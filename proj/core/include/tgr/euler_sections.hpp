#pragma once

// Sections of the tangent bundle of the projective plane, handled through
// their lifts to O(1)^3 in the Euler sequence 0 -> O -> O(1)^3 -> T -> 0.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tgr/polynomial.hpp"

namespace tgr {

/// A section of O(1)^3: three linear forms (or zeros) in X, Y, Z.
class SectionTriple {
 public:
  /// Throws std::invalid_argument unless every component is a linear form
  /// or zero in rings::plane().
  explicit SectionTriple(std::array<Polynomial, 3> components);

  /// Parses `(X, 0, 0)` style tuples.
  static SectionTriple parse(std::string_view text);

  const std::array<Polynomial, 3>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  /// The nine coefficients (component-major, then X, Y, Z).
  std::array<Scalar, 9> coordinates() const;

  std::string str() const;

  friend bool operator==(const SectionTriple& a, const SectionTriple& b) {
    return a.components_ == b.components_;
  }

 private:
  std::array<Polynomial, 3> components_;
};

/// The Euler section (X, Y, Z) spanning the kernel of O(1)^3 -> T.
const SectionTriple& euler_section();

/// Four lifted sections; the Euler section is implicit and fixed.
struct OrderedSectionSet {
  std::array<SectionTriple, 4> sections;

  const SectionTriple& euler() const { return euler_section(); }

  /// Four section lines followed by the Euler line.
  std::string str() const;
  /// Accepts str() output; a trailing Euler line is optional but, if
  /// present, must be (X, Y, Z).
  static OrderedSectionSet parse(std::string_view text);
};

/// det(v_i, v_j, v) with 1 <= i < j <= 4; throws std::out_of_range otherwise.
Polynomial wedge_cubic(const OrderedSectionSet& s, int i, int j);

/// The six wedge cubics in the order (12), (13), (14), (23), (24), (34).
std::array<Polynomial, 6> wedge_cubics(const OrderedSectionSet& s);

/// Rank of {v1, v2, v3, v4, v} in the 9-dimensional space of triples.
std::size_t section_rank(const OrderedSectionSet& s);

/// The induced tangent-bundle sections are independent iff the rank is 5.
bool independence_test(const OrderedSectionSet& s);

struct GeneratingResult {
  bool generating = false;
  bool independent = false;
  std::size_t rank = 0;
  /// Degree from which the wedge-cubic ideal vanishes in the quotient.
  std::optional<unsigned> certificate_degree;
};

/// Independent, and the six wedge cubics have no common projective zero.
GeneratingResult generating_test(const OrderedSectionSet& s);

/// v1 = (X,0,0), v2 = (0,Y,0), v3 = (Y,Z,X), v4 = (Z,X,Y).
OrderedSectionSet reference_section_set();

/// Deterministic draw with integer coefficients in [-bound, bound]. The
/// generator is std::mt19937_64 seeded with `seed`; each coefficient is
/// taken by rejection sampling so the stream is platform independent.
OrderedSectionSet random_section_set(std::uint64_t seed, int bound);

/// Chern classes in Z[H]/(H^3) as coefficients of H and H^2.
struct ChernPair {
  long c1 = 0;
  long c2 = 0;
  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

/// Total Chern class 1 + c1 H + c2 H^2 truncated modulo H^3.
class TruncatedChernClass {
 public:
  TruncatedChernClass(long c1 = 0, long c2 = 0) : c1_(c1), c2_(c2) {}  // NOLINT
  /// c(O(a)) = 1 + a H.
  static TruncatedChernClass line_bundle(long degree) { return {degree, 0}; }

  TruncatedChernClass operator*(const TruncatedChernClass& o) const;
  TruncatedChernClass inverse() const;
  TruncatedChernClass pow(unsigned n) const;
  ChernPair pair() const { return {c1_, c2_}; }

 private:
  long c1_;
  long c2_;
};

/// c(T) = c(O(1))^3 / c(O) by the Whitney formula on the Euler sequence.
ChernPair chern_tangent();

/// Whether (c1, c2) appears in Tango's list of Chern pairs of pullbacks of
/// the universal quotient under embeddings P^2 -> Gr(2, 4).
bool tango_check(const ChernPair& c);

}  // namespace tgr
