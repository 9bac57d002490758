#include <algorithm>
#include <set>
#include <utility>

#include "tgr/ideal.hpp"

namespace tgr {

namespace {

struct Reducer {
  const std::vector<Polynomial>& basis;
  std::size_t& steps;
  std::size_t budget;

  const Polynomial* divisor_of(const Monomial& m) const {
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(m)) return &g;
    }
    return nullptr;
  }

  void count_step() const {
    if (++steps > budget) {
      throw BudgetExceeded("Groebner computation exceeded its budget of " +
                           std::to_string(budget) + " reduction steps");
    }
  }

  // Full reduction; basis elements are monic.
  Polynomial operator()(Polynomial h) const {
    const Ring ring = h.ring();
    std::vector<Term> remainder;
    while (!h.is_zero()) {
      const Polynomial* g = divisor_of(h.leading_monomial());
      if (g == nullptr) {
        remainder.push_back(h.leading_term());
        h = h.tail();
        continue;
      }
      count_step();
      h = h.sub_mul(h.leading_coeff(), h.leading_monomial() / g->leading_monomial(), *g);
    }
    return Polynomial(ring, std::move(remainder));
  }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned degree;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> g, std::size_t& steps,
                                    std::size_t budget) {
  // Drop elements whose leading monomial is a multiple of another's.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& ma = g[a].leading_monomial();
      const auto& mb = g[b].leading_monomial();
      if (mb.divides(ma) && (!(ma == mb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    Reducer reduce{others, steps, budget};
    const auto& f = minimal[a];
    Polynomial lead = Polynomial::term(f.ring(), f.leading_monomial(), f.leading_coeff());
    reduced.push_back(lead + reduce(f.tail()));
  }
  if (reduced.empty()) return reduced;
  const Ring ring = reduced.front().ring();
  std::sort(reduced.begin(), reduced.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_monomial(l / f.leading_monomial()) * f.leading_coeff().inverse();
  return a.sub_mul(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& options) {
  const Ring& ring = ideal.ring();
  BuchbergerStats stats;
  std::vector<Polynomial> g;
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Polynomial h) {
    h = h.monic();
    const std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(g[i].leading_monomial(), h.leading_monomial());
      unsigned d = ring.weighted_degree(l);
      if (options.degree_bound && d > *options.degree_bound) continue;
      queue.push_back({i, k, l, d});
      pending.insert({i, k});
    }
    g.push_back(std::move(h));
  };

  for (const auto& f : ideal.generators()) {
    if (f.is_constant()) {
      std::vector<Polynomial> one{Polynomial::constant(ring, Scalar(1))};
      return GroebnerBasis(ring, std::move(one), stats, options.degree_bound);
    }
    add(f);
  }

  Reducer reduce{g, stats.reduction_steps, options.step_budget};
  while (!queue.empty()) {
    auto best = queue.begin();
    for (auto it = queue.begin() + 1; it != queue.end(); ++it) {
      if (it->degree < best->degree ||
          (it->degree == best->degree && ring.less(it->lcm, best->lcm))) {
        best = it;
      }
    }
    Pair p = *best;
    *best = queue.back();
    queue.pop_back();
    pending.erase({p.i, p.j});
    ++stats.pairs_considered;

    if (g[p.i].leading_monomial().coprime(g[p.j].leading_monomial())) {
      ++stats.product_criterion_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!g[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (!pending.contains(key(p.i, k)) && !pending.contains(key(p.j, k))) chain = true;
    }
    if (chain) {
      ++stats.chain_criterion_skips;
      continue;
    }
    ++stats.pairs_reduced;
    Polynomial h = reduce(s_polynomial(g[p.i], g[p.j]));
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      std::vector<Polynomial> one{Polynomial::constant(ring, Scalar(1))};
      return GroebnerBasis(ring, std::move(one), stats, options.degree_bound);
    }
    add(std::move(h));
  }

  auto basis = interreduce(std::move(g), stats.reduction_steps, options.step_budget);
  return GroebnerBasis(ring, std::move(basis), stats, options.degree_bound);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  std::size_t steps = 0;
  Reducer reduce{g.basis(), steps, static_cast<std::size_t>(-1)};
  return reduce(f.in_ring(g.ring()));
}

bool ideal_contains(const GroebnerBasis& g, const Polynomial& f) {
  return normal_form(f, g).is_zero();
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!normal_form(s_polynomial(b[i], b[j]), g).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& g) {
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].leading_coeff().is_one()) return false;
    for (const auto& t : b[i].terms()) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (j != i && b[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> basis, BuchbergerStats stats,
                             std::optional<unsigned> truncated_at)
    : ring_(std::move(ring)),
      basis_(std::move(basis)),
      stats_(stats),
      truncated_at_(truncated_at) {}

bool GroebnerBasis::is_unit() const {
  return std::any_of(basis_.begin(), basis_.end(),
                     [](const Polynomial& f) { return !f.is_zero() && f.is_constant(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& f : basis_) out.push_back(f.leading_monomial());
  return out;
}

}  // namespace tgr
