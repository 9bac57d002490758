#include "tgr/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace tgr {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) {
    throw RingMismatch("ring mismatch: " + a.describe() + " vs " + b.describe());
  }
}

void require_field(const Ring& ring, const Scalar& c) {
  if (ring.field() == Field::rational && !c.is_rational()) {
    throw RingMismatch("coefficient " + c.str() + " is not rational in " + ring.describe());
  }
}

std::string monomial_str(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Ring& r = ring_;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.monomial, b.monomial) > 0;
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    require_field(r, t.coeff);
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
    } else {
      if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
}

Polynomial Polynomial::constant(const Ring& ring, const Scalar& c) {
  return term(ring, Monomial(), c);
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  return variable(ring, ring.index_of(name));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.size()) throw RingMismatch("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return term(ring, m, Scalar(1));
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Scalar& c) {
  require_field(ring, c);
  if (c.is_zero()) return Polynomial(ring);
  return Polynomial(ring, std::vector<Term>{{m, c}}, true);
}

int Polynomial::degree() const {
  if (terms_.empty()) return kMinusInfinity;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return static_cast<int>(d);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return is_homogeneous_of_degree(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous_of_degree(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

unsigned Polynomial::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
  return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return Scalar();
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  return f.sub_mul(Scalar(-1), Monomial(), g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  return f.sub_mul(Scalar(1), Monomial(), g);
}

Polynomial Polynomial::sub_mul(const Scalar& c, const Monomial& m,
                               const Polynomial& g) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  const Ring& r = ring_;
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      out.push_back(*it++);
      continue;
    }
    Monomial gm = jt->monomial * m;
    int cmp = it == terms_.end() ? -1 : r.compare(it->monomial, gm);
    if (cmp > 0) {
      out.push_back(*it++);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * jt->coeff)});
      ++jt;
    } else {
      Scalar s = it->coeff - c * jt->coeff;
      if (!s.is_zero()) out.push_back({gm, std::move(s)});
      ++it;
      ++jt;
    }
  }
  return Polynomial(ring_, std::move(out), true);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  if (g.size() == 1) return f.mul_monomial(g.leading_monomial()) * g.leading_coeff();
  if (f.size() == 1) return g.mul_monomial(f.leading_monomial()) * f.leading_coeff();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      acc[a.monomial * b.monomial] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  const Ring& r = f.ring_;
  std::sort(out.begin(), out.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.monomial, b.monomial) > 0;
  });
  return Polynomial(f.ring_, std::move(out), true);
}

Polynomial operator*(const Polynomial& f, const Scalar& c) {
  require_field(f.ring_, c);
  if (c.is_zero()) return Polynomial(f.ring_);
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff *= c;
  return Polynomial(f.ring_, std::move(out), true);
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.monomial = t.monomial * m;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  Scalar inv = terms_.front().coeff.inverse();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= inv;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), true);
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_.size()) {
    throw RingMismatch("evaluation point has " + std::to_string(point.size()) +
                       " coordinates, ring has " + std::to_string(ring_.size()));
  }
  std::vector<std::vector<Scalar>> powers(point.size());
  auto power = [&](std::size_t i, unsigned e) -> const Scalar& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Scalar(1));
    while (p.size() <= e) p.push_back(p.back() * point[i]);
    return p[e];
  };
  Scalar sum;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.monomial[i] != 0) v *= power(i, t.monomial[i]);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_.size()) throw RingMismatch("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * Scalar(static_cast<long>(e))});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (target == ring_) return *this;
  std::vector<std::size_t> map(ring_.size(), kMaxVariables);
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    if (target.has(ring_.name(i))) map[i] = target.index_of(ring_.name(i));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] == kMaxVariables) {
        throw RingMismatch("variable '" + ring_.name(i) + "' not in " + target.describe());
      }
      m.set(map[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono = monomial_str(ring_, t.monomial);
    Scalar c = t.coeff;
    bool negative = false;
    if (c.is_rational() && c.a().sign() < 0) {
      negative = true;
      c = -c;
    } else if (!c.is_rational() && c.a().is_zero() && c.b().sign() < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      s += c.str_as_factor();
    } else if (c.is_one()) {
      s += mono;
    } else {
      s += c.str_as_factor() + "*" + mono;
    }
  }
  return s;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring_ == g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (!(f.terms_[i].monomial == g.terms_[i].monomial) ||
        !(f.terms_[i].coeff == g.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const Ring& source = f.ring();
  if (images.size() != source.size()) {
    throw RingMismatch("substitution needs one image per variable");
  }
  if (images.empty()) return f;
  const Ring& target = images.front().ring();
  for (const auto& g : images) require_same_ring(g.ring(), target);

  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Polynomial::constant(target, Scalar(1)));
    while (p.size() <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial v = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (t.monomial[i] != 0) v = v * power(i, t.monomial[i]);
    }
    result += v;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment) {
  const Ring& ring = f.ring();
  std::vector<Polynomial> images;
  images.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) images.push_back(Polynomial::variable(ring, i));
  for (const auto& [name, image] : assignment) {
    require_same_ring(image.ring(), ring);
    images[ring.index_of(name)] = image;
  }
  return substitute(f, images);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw ArithmeticError("division by zero polynomial");
  Polynomial quotient(f.ring());
  Polynomial rest = f;
  const Scalar lc_inv = g.leading_coeff().inverse();
  while (!rest.is_zero()) {
    if (!g.leading_monomial().divides(rest.leading_monomial())) {
      throw std::domain_error("exact_divide: " + g.str() + " does not divide " + f.str());
    }
    Monomial m = rest.leading_monomial() / g.leading_monomial();
    Scalar c = rest.leading_coeff() * lc_inv;
    quotient += Polynomial::term(f.ring(), m, c);
    rest = rest.sub_mul(c, m, g);
  }
  return quotient;
}

Polynomial LaurentPolynomial::times(const Monomial& m) const {
  if (!denominator.divides(m)) {
    throw std::domain_error("clearing monomial is not a multiple of the denominator");
  }
  return numerator.mul_monomial(m / denominator);
}

}  // namespace tgr
