#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tgr/euler_sections.hpp"
#include "tgr/reference.hpp"

using namespace tgr;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text, rings::plane()); }

OrderedSectionSet with(OrderedSectionSet s, std::size_t index, const SectionTriple& v) {
  s.sections[index] = v;
  return s;
}

std::vector<Polynomial> reduced_basis(const OrderedSectionSet& s) {
  const auto c = wedge_cubics(s);
  return buchberger(Ideal(rings::plane(), {c.begin(), c.end()})).basis();
}

}  // namespace

TEST_CASE("wedge cubics of the reference set") {
  const OrderedSectionSet s = reference_section_set();
  CHECK(wedge_cubic(s, 1, 2) == P("X*Y*Z"));
  CHECK(wedge_cubic(s, 3, 4) == P("3*X*Y*Z - (X^3 + Y^3 + Z^3)"));
  CHECK(wedge_cubic(s, 1, 3) == P("X*(Z^2 - X*Y)"));
  CHECK(wedge_cubic(s, 2, 3) == P("Y*(X^2 - Y*Z)"));
  const auto all = wedge_cubics(s);
  for (std::size_t k = 0; k < 6; ++k) CHECK(all[k] == P(reference::kWedgeCubics[k]));
  CHECK(wedge_cubic(with(s, 1, s.sections[0]), 1, 2).is_zero());
}

TEST_CASE("wedge indices out of range are rejected") {
  const OrderedSectionSet s = reference_section_set();
  CHECK_THROWS_AS(wedge_cubic(s, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(wedge_cubic(s, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(wedge_cubic(s, 3, 5), std::out_of_range);
  CHECK_THROWS_AS(wedge_cubic(s, 3, 1), std::out_of_range);
}

TEST_CASE("reference section set") {
  const OrderedSectionSet s = reference_section_set();
  CHECK(s.sections[0] == SectionTriple::parse("(X, 0, 0)"));
  CHECK(s.sections[1] == SectionTriple::parse("(0, Y, 0)"));
  CHECK(s.sections[2] == SectionTriple::parse("(Y, Z, X)"));
  CHECK(s.sections[3] == SectionTriple::parse("(Z, X, Y)"));
  CHECK(s.euler() == SectionTriple::parse("(X, Y, Z)"));
  CHECK(OrderedSectionSet::parse(s.str()).str() == s.str());
  CHECK_THROWS(SectionTriple::parse("(X^2, 0, 0)"));
  CHECK_THROWS(SectionTriple::parse("(X, 0)"));
  CHECK_THROWS(OrderedSectionSet::parse("(X, 0, 0)\n(0, Y, 0)\n(Y, Z, X)\n(Z, X, Y)\n(X, Z, Y)\n"));
}

TEST_CASE("independence") {
  const OrderedSectionSet s = reference_section_set();
  CHECK(independence_test(s));
  CHECK_FALSE(independence_test(with(s, 3, s.sections[2])));
  CHECK_FALSE(independence_test(with(s, 3, euler_section())));
}

TEST_CASE("generating test") {
  const GeneratingResult ref = generating_test(reference_section_set());
  CHECK(ref.generating);
  CHECK(ref.independent);
  CHECK(ref.rank == 5);
  CHECK(ref.certificate_degree == 4u);

  const SectionTriple v = euler_section();
  CHECK_FALSE(generating_test(OrderedSectionSet{{v, v, v, v}}).generating);

  const OrderedSectionSet divisible{{SectionTriple::parse("(X, 0, 0)"), SectionTriple::parse("(0, X, 0)"),
                                     SectionTriple::parse("(0, 0, X)"), SectionTriple::parse("(X, X, X)")}};
  CHECK_FALSE(generating_test(divisible).generating);
  // Every wedge is X^2 times a linear form, so the line X = 0 is common.
  oracle::Engine engine(4);
  for (int k = 0; k < 20; ++k) {
    const std::vector<Scalar> p{Scalar(0), oracle::random_scalar(engine), oracle::random_scalar(engine)};
    for (const auto& c : wedge_cubics(divisible)) CHECK(c.evaluate(p).is_zero());
  }
}

TEST_CASE("random section sets") {
  CHECK(random_section_set(42, 5).str() == random_section_set(42, 5).str());
  CHECK(random_section_set(42, 5).str() != random_section_set(43, 5).str());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& v : random_section_set(seed, 3).sections) {
      for (const auto& c : v.coordinates()) {
        CHECK(c.is_rational());
        CHECK(c.a().is_integer());
        CHECK(c.a().abs() <= Rational(3));
      }
    }
  }
  const OrderedSectionSet zero = random_section_set(7, 0);
  for (const auto& v : zero.sections) {
    for (const auto& c : v.components()) CHECK(c.is_zero());
  }
  CHECK_FALSE(generating_test(zero).generating);

  int generating = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) generating += generating_test(random_section_set(seed, 5)).generating;
  CHECK(generating >= 45);
}

TEST_CASE("Chern classes of the tangent bundle") {
  CHECK(chern_tangent() == ChernPair{3, 3});
  CHECK(TruncatedChernClass::line_bundle(1).pow(3).pair() == ChernPair{3, 3});
  const TruncatedChernClass trivial = TruncatedChernClass::line_bundle(0);
  const TruncatedChernClass tangent(3, 3);
  CHECK((trivial * tangent).pair() == TruncatedChernClass::line_bundle(1).pow(3).pair());
  CHECK((tangent * tangent.inverse()).pair() == ChernPair{0, 0});
  CHECK(TruncatedChernClass::line_bundle(2).pow(2).pair() == ChernPair{4, 4});
}

TEST_CASE("Tango's list") {
  CHECK_FALSE(tango_check({3, 3}));
  CHECK(tango_check({2, 3}));
  CHECK(tango_check({1, 0}));
  CHECK(tango_check({1, 1}));
  CHECK(tango_check({2, 1}));
  CHECK_FALSE(tango_check({0, 0}));
  CHECK_FALSE(tango_check({2, 2}));
}

TEST_CASE("wedge cubics are alternating and kill the Euler section") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const OrderedSectionSet s = random_section_set(seed, 4);
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        OrderedSectionSet swapped = s;
        std::swap(swapped.sections[i - 1], swapped.sections[j - 1]);
        CHECK(wedge_cubic(swapped, i, j) == -wedge_cubic(s, i, j));
        const Polynomial f = wedge_cubic(s, i, j);
        CHECK(f.is_homogeneous_of_degree(3));
        CHECK((f.is_zero() || f.degree() == 3));
      }
    }
    const OrderedSectionSet e = with(s, 2, euler_section());
    CHECK(wedge_cubic(e, 1, 3).is_zero());
    CHECK(wedge_cubic(e, 3, 4).is_zero());
  }
}

TEST_CASE("generating sets have no common zero at random points") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OrderedSectionSet s = random_section_set(seed, 5);
    if (!generating_test(s).generating) continue;
    const auto c = wedge_cubics(s);
    CHECK(oracle::never_all_zero(c, 1000, seed));
    ++checked;
  }
  CHECK(checked >= 4);
  const auto c = wedge_cubics(reference_section_set());
  CHECK(oracle::never_all_zero(c, 1000, 77));
}

TEST_CASE("the generating test ignores the order of the sections") {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const OrderedSectionSet s = random_section_set(seed, 3);
    const bool expected = generating_test(s).generating;
    const auto basis = reduced_basis(s);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
      OrderedSectionSet t = s;
      for (std::size_t k = 0; k < 4; ++k) t.sections[k] = s.sections[perm[k]];
      CHECK(generating_test(t).generating == expected);
      CHECK(reduced_basis(t) == basis);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
