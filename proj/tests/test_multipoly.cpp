#include <algorithm>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tgr/euler_sections.hpp"
#include "tgr/linalg.hpp"
#include "tgr/plucker.hpp"

using namespace tgr;

namespace {

Polynomial P(const char* text, const Ring& ring = rings::plane()) { return parse_polynomial(text, ring); }

std::vector<Scalar> point(std::initializer_list<Scalar> c) { return c; }

}  // namespace

TEST_CASE("ring operations") {
  CHECK(P("X + Y") * P("X - Y") == P("X^2 - Y^2"));
  CHECK((Polynomial(rings::plane()) * P("X^3 + Y")).is_zero());
  CHECK(P("1 + X").pow(3) == P("1 + 3*X + 3*X^2 + X^3"));
  CHECK(P("X*Y*Z").degree() == 3);
  CHECK(Polynomial(rings::plane()).degree() == kMinusInfinity);
  CHECK(P("2*X") * Scalar(Rational(1, 2)) == P("X"));
}

TEST_CASE("operands from different rings are rejected") {
  CHECK_THROWS_AS(P("X") + P("Z0", rings::plucker_space()), RingMismatch);
  CHECK_THROWS_AS(P("X") * P("x", rings::chart()), RingMismatch);
  CHECK_THROWS_AS(P("w*X"), std::exception);
}

TEST_CASE("evaluation of the wedge cubics") {
  const PluckerMap map = build_plucker_map(reference_section_set());
  const auto values_at = [&](const std::vector<Scalar>& p) {
    std::vector<Scalar> v;
    for (const auto& c : map.cubics) v.push_back(c.evaluate(p));
    return v;
  };
  CHECK(values_at(point({1, 1, 1})) == std::vector<Scalar>{1, 0, 0, 0, 0, 0});
  CHECK(values_at(point({1, 0, 0})) == std::vector<Scalar>{0, 0, 0, 0, 0, -1});
  const Scalar w = Cyclo3::omega();
  CHECK(P("X*Y*Z").evaluate(point({w, w * w, 1})) == Scalar(1));
  CHECK_THROWS(P("X").evaluate(point({1, 2})));
}

TEST_CASE("partial derivatives and the Euler identity") {
  CHECK(P("X*Y*Z").derivative("X") == P("Y*Z"));
  CHECK(P("3*X*Y*Z - X^3 - Y^3 - Z^3").derivative("X") == P("3*Y*Z - 3*X^2"));
  const Polynomial z1 = P("X*(Z^2 - X*Y)");
  const Polynomial euler = P("X") * z1.derivative("X") + P("Y") * z1.derivative("Y") + P("Z") * z1.derivative("Z");
  CHECK(euler == z1 * Scalar(3));

  oracle::Engine engine(11);
  for (int k = 0; k < 50; ++k) {
    const auto d = static_cast<unsigned>(oracle::uniform(engine, 0, 5));
    const Polynomial f = oracle::random_form(rings::plane(), engine, 6, d);
    Polynomial sum(rings::plane());
    for (std::size_t v = 0; v < 3; ++v) sum += Polynomial::variable(rings::plane(), v) * f.derivative(v);
    CHECK(sum == f * Scalar(static_cast<long>(d)));
  }
}

TEST_CASE("determinants") {
  const auto m = [](std::vector<std::vector<const char*>> rows) {
    PolyMatrix out;
    for (const auto& r : rows) {
      out.emplace_back();
      for (const char* e : r) out.back().push_back(P(e));
    }
    return out;
  };
  CHECK(determinant(m({{"X", "0", "0"}, {"0", "Y", "0"}, {"X", "Y", "Z"}})) == P("X*Y*Z"));
  CHECK(determinant(m({{"X", "0", "0"}, {"Y", "Z", "X"}, {"X", "Y", "Z"}})) == P("X*(Z^2 - X*Y)"));
  CHECK(determinant(m({{"X", "Y", "0"}, {"X", "Y", "0"}, {"Z", "1", "X"}})).is_zero());
  CHECK_THROWS_AS(determinant(m({{"X", "Y"}})), std::invalid_argument);
  CHECK_THROWS_AS(determinant(PolyMatrix{}), std::invalid_argument);
}

TEST_CASE("Bareiss and cofactor expansion agree on random matrices") {
  oracle::Engine engine(5);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int k = 0; k < 10; ++k) {
      PolyMatrix a(n);
      for (auto& row : a) {
        for (std::size_t j = 0; j < n; ++j) row.push_back(oracle::random_polynomial(rings::plane(), engine, 3, 2));
      }
      CHECK(determinant_bareiss(a) == determinant_cofactor(a));
      // Alternating: swapping two rows negates.
      PolyMatrix b = a;
      std::swap(b[0], b[1]);
      CHECK(determinant(b) == -determinant(a));
    }
  }
}

TEST_CASE("substitution") {
  CHECK(substitute(P("X*Y*Z"), {{"Z", P("1")}}) == P("X*Y"));
  CHECK(substitute(P("X*(Z^2 - X*Y)"), {{"Z", P("1")}}) == P("X - X^2*Y"));
  const Polynomial f = P("3*X*Y*Z - X^3 - Y^3 - Z^3");
  CHECK(substitute(f, std::map<std::string, Polynomial>{}) == f);
  const std::array<Polynomial, 3> identity{P("X"), P("Y"), P("Z")};
  CHECK(substitute(f, identity) == f);
  // Simultaneous, not sequential.
  CHECK(substitute(P("X + 2*Y"), {{"X", P("Y")}, {"Y", P("X")}}) == P("Y + 2*X"));
}

TEST_CASE("coefficient matrix ranks") {
  const auto cubics = wedge_cubics(reference_section_set());
  CHECK(coeff_matrix_rank(cubics, 3) == 6);
  CHECK(section_rank(reference_section_set()) == 5);
  const std::vector<Polynomial> twice{P("X"), P("X")};
  CHECK(coeff_matrix_rank(twice, 1) == 1);
  const std::vector<Polynomial> mixed{P("X"), P("X^2")};
  CHECK_THROWS_AS(coeff_matrix_rank(mixed, 1), NotHomogeneous);
}

TEST_CASE("linear relations and reduced echelon form") {
  const std::vector<Polynomial> v{P("X"), P("Y"), P("X + Y"), P("X - Y")};
  const auto rel = linear_relations(v);
  CHECK(rel.size() == 2);
  for (const auto& r : rel) {
    Polynomial sum(rings::plane());
    for (std::size_t i = 0; i < v.size(); ++i) sum += v[i] * r[i];
    CHECK(sum.is_zero());
  }
  const ScalarMatrix e = reduced_row_echelon({{2, 4, 6}, {1, 2, 4}, {3, 6, 10}});
  CHECK(e == ScalarMatrix{{1, 2, 0}, {0, 0, 1}});
}

TEST_CASE("polynomial text round trip") {
  CHECK(P("3*X*Y*Z - X^3 - Y^3 - Z^3").str() == "-X^3 - Y^3 + 3*X*Y*Z - Z^3");
  for (const char* text : {"-X^3 - Y^3 + 3*X*Y*Z - Z^3", "X^2 - Y^2", "-1/2*X + 7", "0"}) {
    CHECK(P(text).str() == text);
  }
  const Ring cyc = rings::plane().with_field(Field::cyclotomic);
  const Polynomial f = P("(1 + w)*X^2 - w*Y", cyc);
  CHECK(P(f.str().c_str(), cyc) == f);
  CHECK_THROWS(P("X +"));
  CHECK_THROWS(P("Q"));
}

TEST_CASE("monomial orders are total and multiplicative") {
  const Ring lex = rings::plane().with_order(MonomialOrder::lex());
  const Ring block = rings::plane().with_order(MonomialOrder::block({true, false, false}));
  const auto monos = [] {
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= 3; ++d) {
      for (const auto& m : monomials_of_degree(3, d)) out.push_back(m);
    }
    return out;
  }();
  for (const Ring& r : {rings::plane(), lex, block}) {
    for (const auto& a : monos) {
      for (const auto& b : monos) {
        const int c = r.compare(a, b);
        CHECK((c == 0) == (a == b));
        CHECK(r.compare(b, a) == -c);
        const Monomial m({1, 0, 2});
        CHECK(r.compare(a * m, b * m) == c);
      }
    }
  }
  // X beats any monomial free of X under the block order.
  CHECK(block.less(Monomial({0, 5, 5}), Monomial({1, 0, 0})));
  CHECK(rings::plane().less(Monomial({1, 0, 0}), Monomial({0, 1, 1})));
}

TEST_CASE("ring axioms on random polynomials") {
  const auto failure = oracle::check_ring_axioms(200, 17);
  CHECK_MESSAGE(!failure, failure.value_or(""));
}
