#include <algorithm>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tgr/euler_sections.hpp"
#include "tgr/hilbert.hpp"
#include "tgr/ideal.hpp"
#include "tgr/plucker.hpp"

using namespace tgr;

namespace {

Polynomial P(const char* text, const Ring& ring = rings::plane()) { return parse_polynomial(text, ring); }

Ideal I(std::initializer_list<const char*> gens, const Ring& ring = rings::plane()) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(P(g, ring));
  return Ideal(ring, out);
}

/// Same ideal: mutual containment of generators.
bool same_ideal(const Ideal& a, const Ideal& b) {
  const GroebnerBasis ga = buchberger(a);
  const GroebnerBasis gb = buchberger(b.in_ring(a.ring()));
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const auto& f) { return ideal_contains(gb, f); }) &&
         std::all_of(gb.basis().begin(), gb.basis().end(), [&](const auto& f) { return ideal_contains(ga, f); });
}

Ideal wedge_ideal() {
  const auto c = wedge_cubics(reference_section_set());
  return Ideal(rings::plane(), {c.begin(), c.end()});
}

}  // namespace

TEST_CASE("Buchberger on small ideals") {
  const Ring lex = rings::plane().with_order(MonomialOrder::lex());
  const GroebnerBasis g = buchberger(I({"X - Y", "Y - Z"}, lex));
  CHECK(g.basis() == std::vector<Polynomial>{P("Y - Z", lex), P("X - Z", lex)});
  CHECK(buchberger(I({"X"})).basis() == std::vector<Polynomial>{P("X")});
  CHECK(buchberger(I({"2*X^2 + 4*X*Y"})).basis() == std::vector<Polynomial>{P("X^2 + 2*X*Y")});
  CHECK(buchberger(I({"X", "1 + X"})).is_unit());
}

TEST_CASE("the wedge-cubic basis contains pure powers of every variable") {
  const GroebnerBasis g = buchberger(wedge_ideal());
  for (std::size_t v = 0; v < 3; ++v) {
    const auto lm = g.leading_monomials();
    CHECK(std::any_of(lm.begin(), lm.end(), [&](const Monomial& m) { return m[v] == m.degree() && m.degree() > 0; }));
  }
  // Independent corroboration: the six cubics restricted to random lines
  // never share a root.
  const auto c = wedge_cubics(reference_section_set());
  const auto result = oracle::random_line_gcd(c, 100, 2024);
  CHECK(result.lines == 100);
  CHECK(result.trivial == 100);
}

TEST_CASE("the line oracle detects a common zero") {
  // All three forms vanish on the line X = 0, which meets every line.
  const std::vector<Polynomial> forms{P("X*Y^2"), P("X*Z^2"), P("X^3")};
  const auto result = oracle::random_line_gcd(forms, 20, 3);
  CHECK(result.trivial == 0);
  CHECK(oracle::univariate_gcd({mpq_class(-1), mpq_class(0), mpq_class(1)}, {mpq_class(1), mpq_class(1)}) ==
        oracle::Univariate{mpq_class(1), mpq_class(1)});
}

TEST_CASE("normal forms") {
  const GroebnerBasis x = buchberger(I({"X"}));
  CHECK(normal_form(P("X^2"), x).is_zero());
  CHECK(normal_form(P("Y"), x) == P("Y"));
  CHECK(normal_form(P("X*Y*Z"), buchberger(wedge_ideal())).is_zero());
  CHECK_FALSE(ideal_contains(buchberger(wedge_ideal()), P("X^2*Y")));
}

TEST_CASE("radical membership") {
  CHECK(radical_membership(P("X"), I({"X^2"})));
  CHECK_FALSE(radical_membership(P("X"), I({"Y"})));
  CHECK(radical_membership(P("X + Y"), I({"X^3", "Y^5"})));
  CHECK_FALSE(radical_membership(P("X*Y - 1"), I({"X - 1"})));
}

TEST_CASE("radical certificates on the saturated doubling ideal match solved fibers") {
  const PluckerMap map = build_plucker_map(reference_section_set());
  const InjectivityReport r = injectivity_locus(map, 0);
  CHECK(r.certified[0]);
  CHECK(r.certified[1]);
  CHECK(r.certificates[0] == P("(x - x1)*(x*y - 1)", rings::doubling()));
  CHECK(r.certificates[1] == P("(y - y1)*(x*y - 1)", rings::doubling()));

  const auto solved = oracle::solve_reference_fibers(map, 20, 99);
  CHECK(solved.points == 20);
  CHECK(solved.annihilated == 20);
  CHECK(solved.partners == 20);

  // Saturation contains the doubling ideal and is idempotent.
  const Polynomial z0 = P("x*y*x1*y1", rings::doubling());
  const GroebnerBasis sat = buchberger(r.saturated);
  for (const auto& f : r.doubling.generators()) CHECK(ideal_contains(sat, f));
  CHECK(same_ideal(saturation(r.saturated, z0), r.saturated));
}

TEST_CASE("saturation") {
  CHECK(same_ideal(saturation(I({"X*Y", "X*Z"}), P("X")), I({"Y", "Z"})));
  CHECK(buchberger(saturation(I({"X^2"}), P("X"))).is_unit());
  CHECK(same_ideal(saturation(I({"X*Y"}), P("Z")), I({"X*Y"})));
}

TEST_CASE("elimination") {
  const Ring xt({"X", "t"});
  CHECK(elimination_ideal(I({"1 - t*X"}, xt), {"X"}).generators().empty());
  const Ideal e = elimination_ideal(I({"X - Y", "Y - Z"}), {"X", "Z"});
  CHECK(e.ring().names() == std::vector<std::string>{"X", "Z"});
  CHECK(same_ideal(e, Ideal(e.ring(), {P("X - Z", e.ring())})));

  const PluckerMap map = build_plucker_map(reference_section_set());
  const GroebnerBasis image = buchberger(image_ideal(map, 2));
  CHECK(ideal_contains(image, quadric_check(map).quadric));
  CHECK(ideal_contains(image, P("Z0*Z5 - Z1*Z4 + Z2*Z3", rings::plucker_space())));
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(Ideal(rings::plane(), {}), 3) == 10);
  CHECK(hilbert_function(I({"X", "Y", "Z"}), 1) == 0);
  CHECK(hilbert_function(I({"X", "Y", "Z"}), 0) == 1);
  CHECK(hilbert_function(I({"X"}), 4) == 5);
  for (unsigned d = 4; d <= 12; ++d) CHECK(hilbert_function(wedge_ideal(), d) == 0);
  CHECK(hilbert_function(wedge_ideal(), 3) == 4);
  CHECK_THROWS_AS(hilbert_function(I({"X + 1"}), 2), NotHomogeneousIdeal);
}

TEST_CASE("projective emptiness") {
  const auto irrelevant = projective_emptiness(I({"X", "Y", "Z"}));
  CHECK(irrelevant.empty);
  CHECK(irrelevant.degree == 1u);
  CHECK_FALSE(projective_emptiness(I({"X"})).empty);
  const auto wedge = projective_emptiness(wedge_ideal());
  CHECK(wedge.empty);
  CHECK(wedge.degree == 4u);
  CHECK(std::all_of(wedge.pure_powers.begin(), wedge.pure_powers.end(), [](unsigned e) { return e > 0; }));
}

TEST_CASE("emptiness agrees with random-point evaluation") {
  for (const auto& named : oracle::reference_ideals()) {
    const auto cert = projective_emptiness(named.ideal);
    if (!cert.empty) continue;
    INFO(named.name);
    CHECK(oracle::never_all_zero(named.ideal.generators(), 1000, 7));
  }
}

TEST_CASE("Hilbert polynomial interpolation") {
  std::map<int, long> plane;
  for (int d = 0; d <= 6; ++d) plane[d] = (d + 1) * (d + 2) / 2;
  const HilbertData h = hilbert_polynomial(plane, 2);
  CHECK(h.polynomial == std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)});
  CHECK(h.variety_degree() == Rational(1));

  std::map<int, long> curve;
  for (int d = 3; d <= 7; ++d) curve[d] = 9 * d;
  const HilbertData c = hilbert_polynomial(curve, 1);
  CHECK(c.variety_degree() == Rational(9));
  CHECK(c.arithmetic_genus() == Rational(1));
  CHECK(first_differences({{2, 1}, {3, 4}, {4, 9}}) == std::map<int, long>{{3, 3}, {4, 5}});

  const std::map<int, long> wild{{1, 1}, {2, 2}, {3, 4}, {4, 8}, {5, 16}};
  try {
    hilbert_polynomial(wild, 2);
    FAIL("expected HilbertInconsistent");
  } catch (const HilbertInconsistent& e) {
    CHECK(e.degree() >= 1);
    CHECK(e.degree() <= 5);
  }
}

TEST_CASE("an exhausted step budget aborts loudly") {
  BuchbergerOptions tight;
  tight.step_budget = 5;
  CHECK_THROWS_AS(buchberger(wedge_ideal(), tight), BudgetExceeded);
}

TEST_CASE("every basis passes the Buchberger criterion re-check") {
  const Ring lex = rings::plane().with_order(MonomialOrder::lex());
  std::vector<oracle::NamedIdeal> ideals = oracle::reference_ideals();
  ideals.push_back({"linear, lex", I({"X - Y", "Y - Z"}, lex)});
  ideals.push_back({"monomial", I({"X*Y", "X*Z"})});
  ideals.push_back({"inhomogeneous", I({"X^2 - Y", "X*Y - 1"})});
  oracle::Engine engine(3);
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(oracle::random_polynomial(rings::plane(), engine, 3, 3));
    ideals.push_back({"random " + std::to_string(k), Ideal(rings::plane(), gens)});
  }
  std::uint64_t seed = 0;
  for (const auto& named : ideals) {
    INFO(named.name);
    const auto failure = oracle::check_groebner_basis(named.ideal, buchberger(named.ideal), ++seed);
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
}

TEST_CASE("Hilbert function agrees with Macaulay-matrix codimension") {
  for (const auto& named : oracle::reference_ideals()) {
    INFO(named.name);
    const unsigned hi = named.ideal.ring().size() > 3 ? 4 : 9;
    const auto failure = oracle::check_hilbert_vs_macaulay(named.ideal, 0, hi);
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
}
