#include "tgr/ring.hpp"

#include <algorithm>

namespace tgr {

Monomial::Monomial(std::initializer_list<unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw RingMismatch("too many variables");
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFFU) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > 0xFFFFU) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

Ring::Ring(std::vector<std::string> names, MonomialOrder order, Field field,
           std::vector<unsigned> weights) {
  if (names.size() > kMaxVariables) {
    throw RingMismatch("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty() || names[i] == "w") {
      throw RingMismatch("invalid variable name '" + names[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw RingMismatch("duplicate variable '" + names[i] + "'");
    }
  }
  if (order.kind == OrderKind::block) {
    order.eliminate.resize(names.size(), false);
  } else {
    order.eliminate.clear();
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw RingMismatch("weight vector has wrong length");
  data_ = std::make_shared<const Data>(
      Data{std::move(names), std::move(order), field, std::move(weights)});
}

std::size_t Ring::index_of(std::string_view name) const {
  const auto& n = data_->names;
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw RingMismatch("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - n.begin());
}

bool Ring::has(std::string_view name) const {
  const auto& n = data_->names;
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

// grevlex restricted to the variables with mask[i] == want (all if mask empty).
int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t n,
                    const std::vector<bool>& mask, bool want) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask.empty() && mask[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    if (!mask.empty() && mask[i] != want) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = size();
  switch (data_->order.kind) {
    case OrderKind::grevlex:
      return grevlex_compare(a, b, n, {}, true);
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::block: {
      const auto& mask = data_->order.eliminate;
      int c = grevlex_compare(a, b, n, mask, true);
      if (c != 0) return c;
      return grevlex_compare(a, b, n, mask, false);
    }
  }
  return 0;
}

unsigned Ring::weighted_degree(const Monomial& m) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < size(); ++i) d += m[i] * data_->weights[i];
  return d;
}

Ring Ring::with_order(MonomialOrder order) const {
  return Ring(data_->names, std::move(order), data_->field, data_->weights);
}

Ring Ring::with_field(Field field) const {
  return Ring(data_->names, data_->order, field, data_->weights);
}

Ring Ring::with_weights(std::vector<unsigned> weights) const {
  return Ring(data_->names, data_->order, data_->field, std::move(weights));
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  auto names = data_->names;
  names.insert(names.end(), extra.begin(), extra.end());
  auto weights = data_->weights;
  weights.resize(names.size(), 1);
  return Ring(std::move(names), MonomialOrder::grevlex(), data_->field, std::move(weights));
}

std::string Ring::describe() const {
  std::string s;
  switch (data_->order.kind) {
    case OrderKind::grevlex: s = "grevlex"; break;
    case OrderKind::lex: s = "lex"; break;
    case OrderKind::block: s = "block"; break;
  }
  s += "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != 0) s += ", ";
    s += data_->names[i];
    if (data_->order.kind == OrderKind::block && data_->order.eliminate[i]) s += "*";
  }
  s += ")";
  if (data_->field == Field::cyclotomic) s += " over Q(w)";
  return s;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->names == b.data_->names && a.data_->order == b.data_->order &&
         a.data_->field == b.data_->field && a.data_->weights == b.data_->weights;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // Recursive fill: variable i gets e, the rest distribute d - e.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      fill(i + 1, left - e);
    }
    m.set(i, 0);
  };
  fill(0, d);
  return out;
}

namespace rings {

const Ring& plane() {
  static const Ring r({"X", "Y", "Z"});
  return r;
}

const Ring& plucker_space() {
  static const Ring r({"Z0", "Z1", "Z2", "Z3", "Z4", "Z5"});
  return r;
}

const Ring& doubling() {
  static const Ring r({"x", "y", "x1", "y1"});
  return r;
}

const Ring& chart() {
  static const Ring r({"x", "y"});
  return r;
}

}  // namespace rings

}  // namespace tgr
