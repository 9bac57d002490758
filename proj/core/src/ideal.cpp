#include <algorithm>

#include "tgr/ideal.hpp"

namespace tgr {

namespace {

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.has(base)) base += "_";
  return base;
}

// Ring with one more variable t (block-eliminated when requested) and the
// polynomial 1 - t*f in it.
struct Rabinowitsch {
  Ring ring;
  Polynomial relation;
};

Rabinowitsch rabinowitsch(const Ring& base, const Polynomial& f, bool eliminate_t) {
  std::string t = fresh_name(base, "t");
  Ring ring = base.extended({t});
  auto weights = base.weights();
  weights.push_back(1);
  ring = ring.with_weights(weights);
  if (eliminate_t) {
    std::vector<bool> mask(ring.size(), false);
    mask.back() = true;
    ring = ring.with_order(MonomialOrder::block(mask));
  } else {
    ring = ring.with_order(base.order());
    if (base.order().kind == OrderKind::block) {
      auto mask = base.order().eliminate;
      mask.push_back(false);
      ring = ring.with_order(MonomialOrder::block(mask));
    }
  }
  Polynomial one = Polynomial::constant(ring, Scalar(1));
  Polynomial relation = one - Polynomial::variable(ring, t) * f.in_ring(ring);
  return {ring, relation};
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    Polynomial h = g.in_ring(ring_);
    if (!h.is_zero()) generators_.push_back(std::move(h));
  }
}

Ideal::Ideal(std::vector<Polynomial> generators)
    : Ideal(generators.empty() ? throw std::invalid_argument("ideal needs a ring")
                               : generators.front().ring(),
            generators) {}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::in_ring(const Ring& target) const { return Ideal(target, generators_); }

bool radical_membership(const Polynomial& f, const Ideal& ideal, const BuchbergerOptions& options) {
  if (f.is_zero()) return true;
  Rabinowitsch r = rabinowitsch(ideal.ring(), f, false);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(r.ring));
  gens.push_back(r.relation);
  return buchberger(Ideal(r.ring, std::move(gens)), options).is_unit();
}

Ideal saturation(const Ideal& ideal, const Polynomial& f, const BuchbergerOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  Rabinowitsch r = rabinowitsch(ideal.ring(), f, true);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(r.ring));
  gens.push_back(r.relation);
  GroebnerBasis gb = buchberger(Ideal(r.ring, std::move(gens)), options);
  std::vector<Polynomial> kept;
  const std::size_t t = r.ring.size() - 1;
  for (const auto& g : gb.basis()) {
    if (!g.involves(t)) kept.push_back(g.in_ring(ideal.ring()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                        const BuchbergerOptions& options) {
  const Ring& ring = ideal.ring();
  std::vector<bool> mask(ring.size(), true);
  for (const auto& name : keep) mask[ring.index_of(name)] = false;
  Ring block = ring.with_order(MonomialOrder::block(mask));
  GroebnerBasis gb = buchberger(ideal.in_ring(block), options);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!mask[i]) names.push_back(ring.name(i));
  }
  Ring sub(names, MonomialOrder::grevlex(), ring.field());
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis()) {
    bool inside = true;
    for (std::size_t i = 0; i < ring.size() && inside; ++i) {
      if (mask[i] && g.involves(i)) inside = false;
    }
    if (inside) kept.push_back(g.in_ring(sub));
  }
  return Ideal(sub, std::move(kept));
}

std::size_t standard_monomial_count(std::span<const Monomial> leading, std::size_t variables,
                                    unsigned degree) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(variables, degree)) {
    bool divisible = std::any_of(leading.begin(), leading.end(),
                                 [&m](const Monomial& l) { return l.divides(m); });
    if (!divisible) ++count;
  }
  return count;
}

std::size_t hilbert_function(const GroebnerBasis& g, unsigned degree) {
  for (const auto& f : g.basis()) {
    if (!f.is_homogeneous()) {
      throw NotHomogeneousIdeal("Hilbert function needs homogeneous generators; got " + f.str());
    }
  }
  if (g.truncated_at() && degree > *g.truncated_at()) {
    throw std::invalid_argument("Groebner basis truncated below the requested degree");
  }
  auto leading = g.leading_monomials();
  return standard_monomial_count(leading, g.ring().size(), degree);
}

std::size_t hilbert_function(const Ideal& ideal, unsigned degree) {
  if (!ideal.is_homogeneous()) {
    throw NotHomogeneousIdeal("Hilbert function needs homogeneous generators");
  }
  return hilbert_function(buchberger(ideal), degree);
}

EmptinessCertificate projective_emptiness(const Ideal& ideal, const BuchbergerOptions& options) {
  if (!ideal.is_homogeneous()) {
    throw NotHomogeneousIdeal("projective emptiness needs homogeneous generators");
  }
  const std::size_t n = ideal.ring().size();
  EmptinessCertificate cert;
  cert.pure_powers.assign(n, 0);
  GroebnerBasis gb = buchberger(ideal, options);
  if (gb.is_unit()) {
    cert.empty = true;
    cert.degree = 0;
    return cert;
  }
  auto leading = gb.leading_monomials();
  for (const auto& m : leading) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == m.degree() && m[i] != 0 && (cert.pure_powers[i] == 0 || m[i] < cert.pure_powers[i])) {
        cert.pure_powers[i] = m[i];
      }
    }
  }
  if (std::any_of(cert.pure_powers.begin(), cert.pure_powers.end(),
                  [](unsigned e) { return e == 0; })) {
    return cert;
  }
  unsigned bound = 1;
  for (unsigned e : cert.pure_powers) bound += e - 1;
  for (unsigned d = 0; d <= bound; ++d) {
    if (standard_monomial_count(leading, n, d) == 0) {
      cert.empty = true;
      cert.degree = d;
      return cert;
    }
  }
  return cert;
}

}  // namespace tgr
