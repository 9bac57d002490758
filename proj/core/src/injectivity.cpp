#include <algorithm>

#include "tgr/plucker.hpp"
#include "tgr/random.hpp"
#include "tgr/reference.hpp"

namespace tgr {

namespace {

Monomial unit(std::size_t i, unsigned e = 1) {
  Monomial m;
  m.set(i, e);
  return m;
}

/// X, Y, Z -> x, y, 1 on the chart ring.
Polynomial to_chart(const Polynomial& f) {
  const Ring& c = rings::chart();
  const std::array<Polynomial, 3> images{Polynomial::variable(c, "x"), Polynomial::variable(c, "y"),
                                         Polynomial::constant(c, Scalar(1))};
  return substitute(f, images);
}

/// Chart polynomial in x, y moved to the copy (a, b) of the doubling ring.
Polynomial to_copy(const Polynomial& f, std::string_view a, std::string_view b) {
  const Ring& d = rings::doubling();
  const std::array<Polynomial, 2> images{Polynomial::variable(d, a), Polynomial::variable(d, b)};
  return substitute(f, images);
}

Polynomial monomial_poly(const Ring& ring, const Monomial& m) {
  return Polynomial::term(ring, m, Scalar(1));
}

/// d/d(var) of numerator / denominator, as a Laurent polynomial.
LaurentPolynomial laurent_derivative(const LaurentPolynomial& f, std::size_t var) {
  const unsigned a = f.denominator[var];
  Polynomial num = f.numerator.derivative(var).mul_monomial(unit(var)) -
                   f.numerator * Scalar(static_cast<long>(a));
  return {num, f.denominator * unit(var)};
}

CollapsedFiber collapse(const PluckerMap& map, const std::array<std::string_view, 3>& points,
                        std::string_view expected) {
  CollapsedFiber out;
  const ProjectivePoint target = ProjectivePoint::parse(expected);
  out.expected = target.coords();
  out.collapses = true;
  for (auto text : points) {
    ProjectivePoint p = ProjectivePoint::parse(text);
    ProjectivePoint image = evaluate_map(map, p);
    out.collapses = out.collapses && image == target;
    out.points.push_back(std::move(p));
    out.images.push_back(std::move(image));
  }
  return out;
}

}  // namespace

std::vector<LaurentPolynomial> affine_coordinates(const PluckerMap& map) {
  const Ring& c = rings::chart();
  const Polynomial z0 = to_chart(map.cubics[0]);
  if (z0.size() != 1 || !z0.leading_coeff().is_one()) {
    throw std::invalid_argument("Z0 does not restrict to a monic monomial on the chart Z = 1");
  }
  const Monomial d0 = z0.leading_monomial();
  std::vector<LaurentPolynomial> out;
  for (std::size_t i = 1; i < 6; ++i) {
    const Polynomial n = to_chart(map.cubics[i]);
    Monomial g = d0;
    for (const auto& t : n.terms()) {
      for (std::size_t v = 0; v < 2; ++v) g.set(v, std::min(g[v], t.monomial[v]));
    }
    out.push_back({exact_divide(n, monomial_poly(c, g)), d0 / g});
  }
  return out;
}

InjectivityReport injectivity_locus(const PluckerMap& map, std::uint64_t seed,
                                    std::size_t samples, int bound) {
  const Ring& d = rings::doubling();
  const Ring& c = rings::chart();
  const auto affine = affine_coordinates(map);
  const Monomial d0 = to_chart(map.cubics[0]).leading_monomial();

  InjectivityReport out;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 4; ++i) {
    const Polynomial n = affine[i].numerator;
    const Polynomial den = monomial_poly(c, affine[i].denominator);
    gens.push_back(to_copy(n, "x", "y") * to_copy(den, "x1", "y1") -
                   to_copy(n, "x1", "y1") * to_copy(den, "x", "y"));
  }
  out.doubling = Ideal(d, gens);
  const Polynomial z0 = monomial_poly(c, d0);
  out.saturated = saturation(out.doubling, to_copy(z0, "x", "y") * to_copy(z0, "x1", "y1"));

  out.certificates = {parse_polynomial("(x - x1)*(x*y - 1)", d),
                      parse_polynomial("(y - y1)*(x*y - 1)", d)};
  for (std::size_t i = 0; i < 2; ++i) {
    out.certified[i] = radical_membership(out.certificates[i], out.saturated);
    if (!out.certified[i] && !out.failing) {
      out.failing = out.certificates[i].str() + " is not in the radical of the saturated ideal";
    }
  }

  out.collapsed_to_last = collapse(map, reference::kCollapsedToLast, reference::kLastImage);
  out.collapsed_to_first = collapse(map, reference::kCollapsedToFirst, reference::kFirstImage);
  if (!out.collapsed_to_last.collapses && !out.failing) {
    out.failing = "coordinate points do not share the image " + std::string(reference::kLastImage);
  }
  if (!out.collapsed_to_first.collapses && !out.failing) {
    out.failing = "points with XYZ = 1 do not share the image " + std::string(reference::kFirstImage);
  }

  IntegerDraw draw(seed, std::max(bound, 2));
  const Polynomial x = Polynomial::variable(c, "x");
  const Polynomial y = Polynomial::variable(c, "y");
  while (out.samples.size() < samples) {
    const long qx = draw.nonzero();
    const long qy = draw.nonzero();
    if (qx * qy == 1) continue;
    const std::vector<Scalar> q{Scalar(qx), Scalar(qy)};
    std::vector<Polynomial> fiber;
    for (const auto& f : affine) {
      const Polynomial den = monomial_poly(c, f.denominator);
      fiber.push_back(f.numerator * den.evaluate(q) - den * f.numerator.evaluate(q));
    }
    const Ideal sat = saturation(Ideal(c, fiber), z0);
    const bool singleton = radical_membership(x - Polynomial::constant(c, Scalar(qx)), sat) &&
                           radical_membership(y - Polynomial::constant(c, Scalar(qy)), sat);
    ProjectivePoint p({Scalar(qx), Scalar(qy), Scalar(1)});
    ProjectivePoint image = evaluate_map(map, p);
    if (!singleton && !out.failing) out.failing = "fiber over the image of " + p.str() + " is not {q}";
    out.samples.push_back({std::move(p), std::move(image), singleton});
  }

  out.verified = !out.failing.has_value();
  return out;
}

ImmersionReport immersion_check(const PluckerMap& map) {
  ImmersionReport out;
  const Ring& plane = rings::plane();
  out.homogeneous_jacobian.assign(3, {});
  for (std::size_t v = 0; v < 3; ++v) {
    for (const auto& f : map.cubics) out.homogeneous_jacobian[v].push_back(f.derivative(v));
  }
  out.euler_identity = true;
  for (std::size_t i = 0; i < 6; ++i) {
    Polynomial lhs(plane);
    for (std::size_t v = 0; v < 3; ++v) {
      lhs += Polynomial::variable(plane, v) * out.homogeneous_jacobian[v][i];
    }
    const long deg = map.cubics[i].degree();
    out.euler_identity = out.euler_identity && lhs == map.cubics[i] * Scalar(deg);
  }
  const auto m3 = minors(out.homogeneous_jacobian, 3);
  out.minor_count = m3.size();
  const Ideal minor_ideal(plane, m3);
  if (!minor_ideal.generators().empty()) out.minors = projective_emptiness(minor_ideal);

  const Ring& c = rings::chart();
  out.affine_map = affine_coordinates(map);
  const Monomial clear = Monomial({2, 2});
  out.cleared_jacobian.assign(2, {});
  for (std::size_t v = 0; v < 2; ++v) {
    for (std::size_t i = 0; i < out.affine_map.size(); ++i) {
      const LaurentPolynomial der = laurent_derivative(out.affine_map[i], v);
      try {
        out.cleared_jacobian[v].push_back(der.times(clear));
      } catch (const std::domain_error&) {
        out.mismatches.push_back("entry (" + c.name(v) + ", Z" + std::to_string(i + 1) +
                                 ") has a denominator not dividing x^2*y^2");
        out.cleared_jacobian[v].push_back(Polynomial(c));
      }
    }
  }
  for (std::size_t v = 0; v < 2; ++v) {
    for (std::size_t i = 0; i < reference::kAffineJacobian[v].size(); ++i) {
      const Polynomial published = parse_laurent(reference::kAffineJacobian[v][i], c).times(clear);
      const Polynomial& derived = out.cleared_jacobian[v][i];
      if (!(published == derived)) {
        out.mismatches.push_back("entry (d/d" + c.name(v) + ", Z" + std::to_string(i + 1) +
                                 "/Z0): published*x^2*y^2 = " + published.str() +
                                 ", derived = " + derived.str());
      }
    }
  }
  out.matches_published = out.mismatches.empty();

  const Ideal chart_minors(c, minors(out.cleared_jacobian, 2));
  const Ideal sat = saturation(chart_minors, parse_polynomial("x*y", c));
  out.chart_immersion = buchberger(sat).is_unit();
  return out;
}

}  // namespace tgr
