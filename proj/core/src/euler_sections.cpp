#include "tgr/euler_sections.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tgr/ideal.hpp"
#include "tgr/linalg.hpp"
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

Monomial unit(std::size_t i) {
  Monomial m;
  m.set(i, 1);
  return m;
}

}  // namespace

SectionTriple::SectionTriple(std::array<Polynomial, 3> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!(c.ring() == rings::plane())) {
      throw std::invalid_argument("section components must live in Q[X, Y, Z]");
    }
    if (!c.is_homogeneous_of_degree(1)) {
      throw std::invalid_argument("section component " + c.str() + " is not a linear form");
    }
  }
}

SectionTriple SectionTriple::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("section must be written as (f, g, h): '" + s + "'");
  }
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) throw std::invalid_argument("section needs three components: '" + s + "'");
  return SectionTriple({parse_polynomial(parts[0], rings::plane()),
                        parse_polynomial(parts[1], rings::plane()),
                        parse_polynomial(parts[2], rings::plane())});
}

std::array<Scalar, 9> SectionTriple::coordinates() const {
  std::array<Scalar, 9> out;
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t v = 0; v < 3; ++v) out[3 * c + v] = components_[c].coeff(unit(v));
  }
  return out;
}

std::string SectionTriple::str() const {
  return "(" + components_[0].str() + ", " + components_[1].str() + ", " +
         components_[2].str() + ")";
}

const SectionTriple& euler_section() {
  static const SectionTriple v({Polynomial::variable(rings::plane(), "X"),
                                Polynomial::variable(rings::plane(), "Y"),
                                Polynomial::variable(rings::plane(), "Z")});
  return v;
}

std::string OrderedSectionSet::str() const {
  std::string out;
  for (const auto& s : sections) out += s.str() + "\n";
  out += euler().str() + "\n";
  return out;
}

OrderedSectionSet OrderedSectionSet::parse(std::string_view text) {
  std::vector<SectionTriple> parsed;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    parsed.push_back(SectionTriple::parse(line));
  }
  if (parsed.size() == 5) {
    if (!(parsed[4] == euler_section())) {
      throw std::invalid_argument("fifth line must be the Euler section (X, Y, Z)");
    }
    parsed.pop_back();
  }
  if (parsed.size() != 4) throw std::invalid_argument("expected four section lines");
  return {{parsed[0], parsed[1], parsed[2], parsed[3]}};
}

Polynomial wedge_cubic(const OrderedSectionSet& s, int i, int j) {
  if (i < 1 || j > 4 || i >= j) {
    throw std::out_of_range("wedge indices must satisfy 1 <= i < j <= 4");
  }
  const auto& a = s.sections[static_cast<std::size_t>(i - 1)].components();
  const auto& b = s.sections[static_cast<std::size_t>(j - 1)].components();
  const auto& v = s.euler().components();
  PolyMatrix m{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {v[0], v[1], v[2]}};
  return determinant(m);
}

std::array<Polynomial, 6> wedge_cubics(const OrderedSectionSet& s) {
  return {wedge_cubic(s, 1, 2), wedge_cubic(s, 1, 3), wedge_cubic(s, 1, 4),
          wedge_cubic(s, 2, 3), wedge_cubic(s, 2, 4), wedge_cubic(s, 3, 4)};
}

std::size_t section_rank(const OrderedSectionSet& s) {
  ScalarMatrix rows;
  for (const auto& v : s.sections) {
    auto c = v.coordinates();
    rows.emplace_back(c.begin(), c.end());
  }
  auto e = s.euler().coordinates();
  rows.emplace_back(e.begin(), e.end());
  return rank(std::move(rows));
}

bool independence_test(const OrderedSectionSet& s) { return section_rank(s) == 5; }

GeneratingResult generating_test(const OrderedSectionSet& s) {
  GeneratingResult result;
  result.rank = section_rank(s);
  result.independent = result.rank == 5;
  auto cubics = wedge_cubics(s);
  Ideal ideal(rings::plane(), {cubics.begin(), cubics.end()});
  if (ideal.generators().empty()) return result;
  EmptinessCertificate cert = projective_emptiness(ideal);
  result.certificate_degree = cert.degree;
  result.generating = result.independent && cert.empty;
  return result;
}

OrderedSectionSet reference_section_set() {
  return OrderedSectionSet::parse("(X, 0, 0)\n(0, Y, 0)\n(Y, Z, X)\n(Z, X, Y)\n");
}

OrderedSectionSet random_section_set(std::uint64_t seed, int bound) {
  IntegerDraw draw(seed, bound);
  const Ring& ring = rings::plane();
  std::array<SectionTriple, 4> sections{euler_section(), euler_section(), euler_section(),
                                        euler_section()};
  for (auto& section : sections) {
    std::array<Polynomial, 3> comps{Polynomial(ring), Polynomial(ring), Polynomial(ring)};
    for (auto& comp : comps) {
      for (std::size_t v = 0; v < 3; ++v) {
        comp += Polynomial::term(ring, unit(v), Scalar(draw()));
      }
    }
    section = SectionTriple(std::move(comps));
  }
  return {sections};
}

TruncatedChernClass TruncatedChernClass::operator*(const TruncatedChernClass& o) const {
  return {c1_ + o.c1_, c2_ + o.c2_ + c1_ * o.c1_};
}

TruncatedChernClass TruncatedChernClass::inverse() const {
  // (1 + a H + b H^2)^{-1} = 1 - a H + (a^2 - b) H^2 mod H^3
  return {-c1_, c1_ * c1_ - c2_};
}

TruncatedChernClass TruncatedChernClass::pow(unsigned n) const {
  TruncatedChernClass r;
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

ChernPair chern_tangent() {
  TruncatedChernClass middle = TruncatedChernClass::line_bundle(1).pow(3);
  TruncatedChernClass sub = TruncatedChernClass::line_bundle(0);
  return (middle * sub.inverse()).pair();
}

bool tango_check(const ChernPair& c) {
  static constexpr std::array<ChernPair, 4> kEmbeddable{
      ChernPair{1, 0}, ChernPair{1, 1}, ChernPair{2, 1}, ChernPair{2, 3}};
  return std::find(kEmbeddable.begin(), kEmbeddable.end(), c) != kEmbeddable.end();
}

}  // namespace tgr
