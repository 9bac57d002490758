#include "tgr/plucker.hpp"

#include <algorithm>
#include <cctype>
#include <gmp.h>

#include "tgr/random.hpp"

namespace tgr {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

std::optional<mpz_class> exact_root(const mpz_class& n, unsigned k) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

/// r with r^k = q, if one exists in Q (k odd allows negative q).
std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  const mpq_class& v = q.value();
  const bool negative = sgn(v) < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  mpz_class num = abs(v.get_num());
  auto rn = exact_root(num, k);
  auto rd = exact_root(v.get_den(), k);
  if (!rn || !rd) return std::nullopt;
  Rational r(*rn, *rd);
  return negative ? -r : r;
}

bool is_rank_two(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return true;
    }
  }
  return false;
}

Monomial unit(std::size_t i) {
  Monomial m;
  m.set(i, 1);
  return m;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  auto first = std::find_if(coords_.begin(), coords_.end(),
                            [](const Scalar& c) { return !c.is_zero(); });
  if (first == coords_.end()) throw std::invalid_argument("projective point with all coordinates 0");
  const Scalar inv = first->inverse();
  for (auto& c : coords_) c *= inv;
}

ProjectivePoint ProjectivePoint::parse(std::string_view text,
                                       const std::map<std::string, Scalar>& symbols) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  for (auto& c : s) {
    if (c == ':') c = ',';
  }
  std::vector<std::string> names;
  std::vector<Scalar> values;
  for (const auto& [name, value] : symbols) {
    names.push_back(name);
    values.push_back(value);
  }
  if (names.empty()) {
    names.push_back("t");
    values.push_back(Scalar(0));
  }
  const Ring ring(names, MonomialOrder::grevlex(), Field::cyclotomic);
  std::vector<Scalar> coords;
  for (const auto& part : split_top_level(s)) {
    if (part.empty()) throw std::invalid_argument("empty coordinate in '" + std::string(text) + "'");
    coords.push_back(parse_polynomial(part, ring).evaluate(values));
  }
  return ProjectivePoint(std::move(coords));
}

std::string ProjectivePoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += " : ";
    out += coords_[i].str();
  }
  return out + ")";
}

PluckerMap build_plucker_map(const OrderedSectionSet& s) {
  GeneratingResult g = generating_test(s);
  if (!g.generating) {
    std::string why = g.independent ? "the wedge cubics have a common zero"
                                    : "sections are dependent (rank " + std::to_string(g.rank) + ")";
    throw NotGenerating("section set is not generating: " + why, g.rank, g.certificate_degree);
  }
  return {wedge_cubics(s)};
}

ProjectivePoint evaluate_map(const PluckerMap& map, const ProjectivePoint& p) {
  if (p.size() != 3) throw std::invalid_argument("evaluate_map needs a point of P^2");
  std::vector<Scalar> image;
  for (const auto& f : map.cubics) image.push_back(f.evaluate(p.coords()));
  if (std::all_of(image.begin(), image.end(), [](const Scalar& c) { return c.is_zero(); })) {
    throw InternalInconsistency("all six cubics vanish at " + p.str());
  }
  return ProjectivePoint(std::move(image));
}

QuadricCheck quadric_check(const PluckerMap& map) {
  const auto& f = map.cubics;
  const std::array<Polynomial, 3> products{f[0] * f[5], f[1] * f[4], f[2] * f[3]};
  const Ring& z = rings::plucker_space();
  const std::array<Polynomial, 3> monomials{
      parse_polynomial("Z0*Z5", z), parse_polynomial("Z1*Z4", z), parse_polynomial("Z2*Z3", z)};

  QuadricCheck out;
  out.unsigned_pullback = products[0] + products[1] + products[2];
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      Polynomial pullback = products[0] + products[1] * Scalar(s1) + products[2] * Scalar(s2);
      if (!pullback.is_zero()) continue;
      out.signs = {1, s1, s2};
      out.quadric = monomials[0] + monomials[1] * Scalar(s1) + monomials[2] * Scalar(s2);
      return out;
    }
  }
  throw InternalInconsistency("no sign pattern of Z0*Z5, Z1*Z4, Z2*Z3 pulls back to zero");
}

Scalar evaluate_quadric(const QuadricCheck& q, const ProjectivePoint& p) {
  return q.quadric.evaluate(p.coords());
}

bool FiberReport::all_transversal() const {
  return std::all_of(transversal.begin(), transversal.end(), [](bool b) { return b; });
}

std::vector<Scalar> roots_of_binomial(unsigned n, const Scalar& c) {
  if (c.is_zero()) return {Scalar(0)};
  if (n == 1) return {c};
  if (!c.is_rational()) {
    throw UnsupportedSystem("needs general solver: t^" + std::to_string(n) + " = " + c.str() +
                            " with irrational right-hand side");
  }
  const Rational& q = c.a();
  if (n == 2) {
    if (auto r = rational_root(q, 2)) return {Scalar(*r), Scalar(-*r)};
    // (1 + 2w)^2 = -3
    if (auto r = rational_root(q / Rational(-3), 2)) {
      Scalar s = Scalar(*r) * Scalar(Rational(1), Rational(2));
      return {s, -s};
    }
  } else if (n == 3) {
    if (auto r = rational_root(q, 3)) {
      const Scalar w = Scalar::omega();
      return {Scalar(*r), Scalar(*r) * w, Scalar(*r) * w * w};
    }
  } else {
    throw UnsupportedSystem("needs general solver: binomial of degree " + std::to_string(n));
  }
  throw UnsupportedSystem("needs general solver: roots of t^" + std::to_string(n) + " = " +
                          c.str() + " are not in Q(w)");
}

FiberReport slice_fiber(const PluckerMap& map, std::size_t a, std::size_t b) {
  if (a >= 6 || b >= 6 || a == b) throw std::out_of_range("slice needs two distinct indices < 6");
  const Polynomial* mono = &map.cubics[a];
  const Polynomial* other = &map.cubics[b];
  if (mono->size() != 1) std::swap(mono, other);
  if (mono->size() != 1) {
    throw UnsupportedSystem("needs general solver: neither slice equation is a monomial");
  }
  const Ring& ring = mono->ring();
  const Monomial& lead = mono->leading_monomial();

  std::vector<ProjectivePoint> points;
  std::vector<std::string> family;
  auto add = [&](std::vector<Scalar> coords, std::size_t k) {
    ProjectivePoint p(std::move(coords));
    if (std::find(points.begin(), points.end(), p) == points.end()) {
      points.push_back(std::move(p));
      family.push_back(ring.name(k));
    }
  };

  for (std::size_t k = 0; k < 3; ++k) {
    if (lead[k] == 0) continue;
    const Polynomial h = substitute(*other, {{ring.name(k), Polynomial(ring)}});
    if (h.is_zero()) {
      throw UnsupportedSystem("needs general solver: slice contains the line " + ring.name(k) +
                              " = 0");
    }
    const std::size_t u = k == 0 ? 1 : 0;
    const std::size_t v = k == 2 ? 1 : 2;
    unsigned alpha = h.degree_in(u);
    unsigned beta = h.degree_in(v);
    for (const auto& t : h.terms()) {
      alpha = std::min(alpha, t.monomial[u]);
      beta = std::min(beta, t.monomial[v]);
    }
    auto point = [&](const Scalar& cu, const Scalar& cv) {
      std::vector<Scalar> c(3, Scalar(0));
      c[u] = cu;
      c[v] = cv;
      return c;
    };
    if (alpha > 0) add(point(Scalar(0), Scalar(1)), k);
    if (beta > 0) add(point(Scalar(1), Scalar(0)), k);

    std::vector<Term> rest;
    for (const auto& t : h.terms()) {
      Monomial m = t.monomial;
      m.set(u, m[u] - alpha);
      m.set(v, m[v] - beta);
      rest.push_back({m, t.coeff});
    }
    if (rest.size() == 1) continue;
    // a u^n + b v^n: points (t : 1) with t^n = -b/a.
    const Term* pu = nullptr;
    const Term* pv = nullptr;
    for (const auto& t : rest) {
      if (t.monomial[v] == 0) pu = &t;
      if (t.monomial[u] == 0) pv = &t;
    }
    if (rest.size() != 2 || pu == nullptr || pv == nullptr ||
        pu->monomial.degree() != pv->monomial.degree()) {
      throw UnsupportedSystem("needs general solver: restriction to " + ring.name(k) +
                              " = 0 is not a binomial a*u^n + b*v^n");
    }
    for (const auto& root : roots_of_binomial(pu->monomial.degree(), -(pv->coeff / pu->coeff))) {
      add(point(root, Scalar(1)), k);
    }
  }

  FiberReport report;
  std::array<Polynomial, 3> g1{mono->derivative(0), mono->derivative(1), mono->derivative(2)};
  std::array<Polynomial, 3> g2{other->derivative(0), other->derivative(1), other->derivative(2)};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    std::array<Scalar, 3> u;
    std::array<Scalar, 3> v;
    for (std::size_t j = 0; j < 3; ++j) {
      u[j] = g1[j].evaluate(p.coords());
      v[j] = g2[j].evaluate(p.coords());
    }
    report.preimage_points.push_back(p);
    report.transversal.push_back(is_rank_two(u, v));
    report.image_points.push_back(evaluate_map(map, p));
    report.family.push_back(family[i]);
  }
  std::vector<ProjectivePoint> distinct;
  for (const auto& q : report.image_points) {
    if (std::find(distinct.begin(), distinct.end(), q) == distinct.end()) distinct.push_back(q);
  }
  report.distinct_image_count = distinct.size();
  return report;
}

FiberReport w_slice_fiber(const PluckerMap& map) { return slice_fiber(map, 0, 5); }

DegreeArithmetic slice_degree_argument(int m, int fiber_count) {
  if (m < 1) throw std::invalid_argument("pullback degree m must be >= 1");
  if (fiber_count < 1) throw std::invalid_argument("fiber count must be >= 1");
  const int square = m * m;
  if (fiber_count > square) {
    throw DegreeInconsistency("fiber count " + std::to_string(fiber_count) + " exceeds m^2 = " +
                              std::to_string(square));
  }
  DegreeArithmetic out;
  out.m = m;
  for (int d = square; d >= fiber_count; --d) {
    if (square % d == 0) out.divisor_table.emplace_back(d, square / d);
  }
  if (fiber_count == square) {
    out.d = square;
    out.r = 1;
    out.generically_injective = true;
    out.verdict = "generically injective";
  } else {
    out.verdict = "inconclusive";
  }
  return out;
}

bool fiber_is_singleton(const PluckerMap& map, const ProjectivePoint& q) {
  if (q.size() != 3) throw std::invalid_argument("fiber_is_singleton needs a point of P^2");
  const bool rational = std::all_of(q.coords().begin(), q.coords().end(),
                                    [](const Scalar& c) { return c.is_rational(); });
  const Ring ring = rational ? rings::plane() : rings::plane().with_field(Field::cyclotomic);
  std::vector<Polynomial> f;
  std::vector<Scalar> v;
  for (const auto& c : map.cubics) {
    f.push_back(c.in_ring(ring));
    v.push_back(c.evaluate(q.coords()));
  }
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) gens.push_back(f[i] * v[j] - f[j] * v[i]);
  }
  const Ideal fiber(ring, gens);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      Polynomial line = Polynomial::term(ring, unit(i), q[j]) - Polynomial::term(ring, unit(j), q[i]);
      if (line.is_zero()) continue;
      if (!radical_membership(line, fiber)) return false;
    }
  }
  return true;
}

PipelineVerdict generic_injectivity_pipeline(const OrderedSectionSet& s, std::uint64_t seed,
                                             int bound) {
  PipelineVerdict out;
  out.generating = generating_test(s);
  if (!out.generating.generating) {
    out.verdict = "not generating";
    return out;
  }
  const PluckerMap map{wedge_cubics(s)};
  const int m = map.cubics[0].degree();
  IntegerDraw draw(derived_seed(seed), std::max(bound, 1));

  const Ring& plane = rings::plane();
  std::array<Polynomial, 2> slice{Polynomial(plane), Polynomial(plane)};
  for (auto& g : slice) {
    while (g.is_zero()) {
      for (const auto& f : map.cubics) g += f * Scalar(draw());
    }
  }
  std::map<int, long> samples;
  for (int e = 2; e <= 2 * m + 2; ++e) {
    const long dim = static_cast<long>((e + 1) * (e + 2) / 2);
    samples[e] = dim - static_cast<long>(macaulay_rank(slice, static_cast<unsigned>(e)));
  }
  try {
    HilbertData h = hilbert_polynomial(samples, 0);
    if (h.dimension() != 0) {
      out.verdict = "slice not finite";
      return out;
    }
    out.slice_length = h.polynomial[0].value().get_num().get_si();
  } catch (const HilbertInconsistent&) {
    out.verdict = "slice not finite";
    return out;
  }

  for (;;) {
    std::vector<Scalar> q{Scalar(draw()), Scalar(draw()), Scalar(draw())};
    if (std::all_of(q.begin(), q.end(), [](const Scalar& c) { return c.is_zero(); })) continue;
    bool generic = true;
    for (const auto& f : map.cubics) generic = generic && !f.evaluate(q).is_zero();
    if (!generic) continue;
    out.sample_point = ProjectivePoint(std::move(q));
    break;
  }
  out.singleton_fiber = fiber_is_singleton(map, *out.sample_point);

  int count = 0;
  if (s.sections == reference_section_set().sections) {
    out.special_fiber = w_slice_fiber(map);
    if (out.special_fiber->all_transversal()) {
      count = static_cast<int>(out.special_fiber->distinct_image_count);
    }
  } else if (out.singleton_fiber) {
    count = static_cast<int>(*out.slice_length);
  }
  if (count == 0) {
    out.verdict = out.special_fiber ? "special slice not transversal" : "sample fiber not a singleton";
    return out;
  }
  try {
    out.arithmetic = slice_degree_argument(m, count);
  } catch (const DegreeInconsistency& e) {
    out.verdict = std::string("degree inconsistency: ") + e.what();
    return out;
  }
  out.generically_injective = out.arithmetic->generically_injective;
  out.verdict = out.arithmetic->verdict;
  return out;
}

}  // namespace tgr
