#include <algorithm>

#include "tgr/plucker.hpp"
#include "tgr/reference.hpp"

namespace tgr {

namespace {

Polynomial product_of(std::span<const Polynomial> factors, const Monomial& m, const Ring& ring) {
  Polynomial p = Polynomial::constant(ring, Scalar(1));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (m[i] > 0) p *= factors[i].pow(m[i]);
  }
  return p;
}

bool vanishes_on(const Polynomial& f, std::span<const Polynomial> parametrization) {
  return substitute(f, parametrization).is_zero();
}

std::string join(const std::vector<Polynomial>& polys) {
  std::string out;
  for (const auto& p : polys) out += (out.empty() ? "" : ", ") + p.str();
  return out;
}

/// Point of the chart where variable `j` is 1, read off a Groebner basis
/// of the form {u - a, v - b}.
std::optional<ProjectivePoint> chart_point(const GroebnerBasis& g, std::size_t j) {
  if (g.is_unit() || g.basis().size() != 2) return std::nullopt;
  std::vector<Scalar> local(2);
  for (const auto& f : g.basis()) {
    if (f.degree() != 1 || f.size() > 2) return std::nullopt;
    const Monomial& lm = f.leading_monomial();
    const std::size_t v = lm[0] == 1 ? 0 : 1;
    local[v] = -f.coeff(Monomial());
  }
  std::vector<Scalar> coords;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) coords.push_back(i == j ? Scalar(1) : local[k++]);
  return ProjectivePoint(std::move(coords));
}

}  // namespace

PlaneCubicSingularity plane_cubic_singularity(const Polynomial& cubic) {
  const Ring& ring = cubic.ring();
  if (ring.size() != 3 || !cubic.is_homogeneous_of_degree(3)) {
    throw std::invalid_argument("expected a cubic form in three variables");
  }
  PlaneCubicSingularity out;
  std::vector<Polynomial> gens{cubic};
  for (std::size_t v = 0; v < 3; ++v) gens.push_back(cubic.derivative(v));
  const GroebnerBasis gb = buchberger(Ideal(ring, gens));
  std::map<int, long> samples;
  for (int e = 1; e <= 8; ++e) {
    samples[e] = static_cast<long>(hilbert_function(gb, static_cast<unsigned>(e)));
  }
  const HilbertData h = hilbert_polynomial(samples, 1);
  if (h.dimension() > 0) {
    out.length = -1;
    return out;
  }
  out.length = h.dimension() < 0 ? 0 : h.polynomial[0].value().get_num().get_si();

  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != j) names.push_back(ring.name(i));
    }
    const Ring local(names, MonomialOrder::lex(), ring.field());
    std::array<Polynomial, 3> images{Polynomial(local), Polynomial(local), Polynomial(local)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      images[i] = i == j ? Polynomial::constant(local, Scalar(1)) : Polynomial::variable(local, k++);
    }
    std::vector<Polynomial> local_gens;
    for (const auto& g : gens) local_gens.push_back(substitute(g, images));
    const auto point = chart_point(buchberger(Ideal(local, local_gens)), j);
    if (!point || std::find(out.points.begin(), out.points.end(), *point) != out.points.end()) {
      continue;
    }
    out.points.push_back(*point);
    if (out.points.size() == 1) {
      // Translate the singular point to the origin of the chart.
      std::array<Polynomial, 3> shifted = images;
      std::size_t kk = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i == j) continue;
        shifted[i] = Polynomial::variable(local, kk++) + Polynomial::constant(local, (*point)[i]);
      }
      const Polynomial f = substitute(cubic, shifted);
      const Polynomial q = f.homogeneous_part(2);
      const Scalar a = q.coeff(Monomial({2, 0}));
      const Scalar b = q.coeff(Monomial({1, 1}));
      const Scalar c = q.coeff(Monomial({0, 2}));
      if (f.homogeneous_part(0).is_zero() && f.homogeneous_part(1).is_zero()) {
        out.quadratic_rank = rank({{a * Scalar(2), b}, {b, c * Scalar(2)}});
      }
    }
  }
  out.nodal = out.length == 1 && out.points.size() == 1 && out.quadratic_rank == 2;
  return out;
}

std::array<LineImageReport, 3> line_images(const PluckerMap& map) {
  const Ring& plane = rings::plane();
  const Ring& z = rings::plucker_space();
  std::array<LineImageReport, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    LineImageReport& r = out[k];
    r.line = plane.name(k);
    for (std::size_t i = 0; i < 6; ++i) {
      r.parametrization[i] = substitute(map.cubics[i], {{plane.name(k), Polynomial(plane)}});
    }
    const std::span<const Polynomial> param(r.parametrization);

    ScalarMatrix relations = reduced_row_echelon(linear_relations(param));
    for (const auto& row : relations) {
      Polynomial f(z);
      for (std::size_t i = 0; i < 6; ++i) f += Polynomial::variable(z, i) * row[i];
      r.linear_relations.push_back(f);
    }

    LinearSpan span(plane);
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < 6; ++i) {
      if (span.insert(r.parametrization[i])) coords.push_back(i);
    }
    if (coords.size() != 3) {
      throw InternalInconsistency("image of " + r.line + " = 0 spans " +
                                  std::to_string(coords.size()) + " coordinates, expected 3");
    }
    std::array<Polynomial, 3> sub{r.parametrization[coords[0]], r.parametrization[coords[1]],
                                  r.parametrization[coords[2]]};
    for (std::size_t j = 0; j < 3; ++j) r.plane_coordinates[j] = z.name(coords[j]);

    const auto monomials = monomials_of_degree(3, 3);
    std::vector<Polynomial> products;
    for (const auto& m : monomials) products.push_back(product_of(sub, m, plane));
    const auto cubic_relations = linear_relations(products);
    if (cubic_relations.size() != 1) {
      throw InternalInconsistency("image of " + r.line + " = 0 satisfies " +
                                  std::to_string(cubic_relations.size()) + " cubic relations");
    }
    Polynomial cubic(z);
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      Monomial zm;
      for (std::size_t j = 0; j < 3; ++j) zm.set(coords[j], monomials[i][j]);
      cubic += Polynomial::term(z, zm, cubic_relations[0][i]);
    }
    r.cubic = cubic.monic();

    r.relations_hold = vanishes_on(r.cubic, param);
    for (const auto& f : r.linear_relations) r.relations_hold = r.relations_hold && vanishes_on(f, param);

    const Ring abc({"A", "B", "C"});
    std::array<Polynomial, 6> to_abc{Polynomial(abc), Polynomial(abc), Polynomial(abc),
                                     Polynomial(abc), Polynomial(abc), Polynomial(abc)};
    for (std::size_t j = 0; j < 3; ++j) to_abc[coords[j]] = Polynomial::variable(abc, j);
    const PlaneCubicSingularity sing = plane_cubic_singularity(substitute(r.cubic, to_abc));
    r.singular_points = sing.points;
    r.quadratic_rank = sing.quadratic_rank;
    r.nodal = sing.nodal;

    const auto& published = reference::kLineImages[k];
    std::vector<Polynomial> published_linear;
    for (auto text : published.linear) published_linear.push_back(parse_polynomial(text, z));
    r.linear_matches_published = true;
    for (const auto& f : published_linear) {
      if (!vanishes_on(f, param)) {
        r.linear_matches_published = false;
        r.findings.push_back("published relation " + f.str() + " = 0 fails on the image of " +
                             r.line + " = 0; derived relations are " + join(r.linear_relations));
      }
    }
    const Polynomial published_cubic = parse_polynomial(published.cubic, z);
    r.cubic_matches_published = vanishes_on(published_cubic, param);
    if (!r.cubic_matches_published) {
      r.findings.push_back("published cubic " + published_cubic.str() + " = 0 fails on the image of " +
                           r.line + " = 0; derived cubic is " + r.cubic.str());
    }
  }
  return out;
}

}  // namespace tgr
