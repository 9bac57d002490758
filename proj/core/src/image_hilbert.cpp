#include "tgr/plucker.hpp"
#include "tgr/random.hpp"

namespace tgr {

namespace {

std::vector<Polynomial> degree_products(const PluckerMap& map, unsigned e,
                                        std::vector<Monomial>* monomials = nullptr) {
  const Ring& plane = rings::plane();
  std::array<std::vector<Polynomial>, 6> powers;
  for (std::size_t i = 0; i < 6; ++i) {
    powers[i].push_back(Polynomial::constant(plane, Scalar(1)));
    for (unsigned k = 1; k <= e; ++k) powers[i].push_back(powers[i].back() * map.cubics[i]);
  }
  std::vector<Polynomial> out;
  const auto ms = monomials_of_degree(6, e);
  for (const auto& m : ms) {
    Polynomial p = Polynomial::constant(plane, Scalar(1));
    for (std::size_t i = 0; i < 6; ++i) {
      if (m[i] > 0) p *= powers[i][m[i]];
    }
    out.push_back(std::move(p));
  }
  if (monomials != nullptr) *monomials = ms;
  return out;
}

}  // namespace

std::map<int, long> image_hilbert_samples(const PluckerMap& map, int lo, int hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("degree range must satisfy 0 <= lo <= hi");
  std::map<int, long> out;
  for (int e = lo; e <= hi; ++e) {
    const auto products = degree_products(map, static_cast<unsigned>(e));
    out[e] = static_cast<long>(coeff_matrix_rank(products, static_cast<unsigned>(3 * e)));
  }
  return out;
}

std::vector<Polynomial> image_ideal_in_degree(const PluckerMap& map, unsigned e) {
  std::vector<Monomial> monomials;
  const auto products = degree_products(map, e, &monomials);
  LinearSpan span(rings::plane(), true);
  for (const auto& p : products) span.insert(p);
  const Ring& z = rings::plucker_space();
  std::vector<Polynomial> out;
  for (const auto& combination : span.kernel()) {
    Polynomial f(z);
    for (const auto& [index, coeff] : combination) f += Polynomial::term(z, monomials[index], coeff);
    out.push_back(f);
  }
  return out;
}

Ideal image_ideal(const PluckerMap& map, unsigned max_degree) {
  const Ring graph({"X", "Y", "Z", "Z0", "Z1", "Z2", "Z3", "Z4", "Z5"},
                   MonomialOrder::block({true, true, true, false, false, false, false, false, false}),
                   Field::rational, {1, 1, 1, 3, 3, 3, 3, 3, 3});
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 6; ++i) {
    gens.push_back(Polynomial::variable(graph, 3 + i) - map.cubics[i].in_ring(graph));
  }
  BuchbergerOptions options;
  options.degree_bound = 3 * max_degree;
  const GroebnerBasis gb = buchberger(Ideal(graph, gens), options);
  const Ring& z = rings::plucker_space();
  std::vector<Polynomial> image;
  for (const auto& g : gb.basis()) {
    if (g.involves(0) || g.involves(1) || g.involves(2)) continue;
    image.push_back(g.in_ring(z));
  }
  return Ideal(z, image);
}

ImageHilbertReport image_hilbert(const PluckerMap& map, int lo, int hi, std::uint64_t seed) {
  if (lo < 3 || hi - lo + 1 < 4) {
    throw std::invalid_argument("image Hilbert data needs at least four consecutive degrees >= 3");
  }
  ImageHilbertReport out;
  const std::map<int, long> all = image_hilbert_samples(map, lo - 1, hi);
  std::map<int, long> surface(std::next(all.begin()), all.end());
  out.surface = hilbert_polynomial(surface, 2);
  const std::map<int, long> section = first_differences(all);
  out.section = hilbert_polynomial(section, 1);
  out.degree = out.surface.variety_degree();
  out.sectional_genus = out.section.arithmetic_genus();

  const auto quadrics = image_ideal_in_degree(map, 2);
  out.quadric_kernel_dimension = quadrics.size();
  LinearSpan kernel(rings::plucker_space());
  for (const auto& q : quadrics) kernel.insert(q);
  try {
    out.kernel_contains_quadric = kernel.contains(quadric_check(map).quadric);
  } catch (const InternalInconsistency&) {
    out.kernel_contains_quadric = false;
  }

  const Ideal image = image_ideal(map, static_cast<unsigned>(hi));
  out.image_generators = image.generators().size();
  const GroebnerBasis gb = buchberger(image);
  for (int e = lo; e <= hi; ++e) {
    out.eliminated_samples[e] = static_cast<long>(hilbert_function(gb, static_cast<unsigned>(e)));
  }
  out.elimination_agrees = out.eliminated_samples == surface;

  const Ring& z = rings::plucker_space();
  IntegerDraw draw(seed, 5);
  while (out.hyperplane.is_zero()) {
    for (std::size_t i = 0; i < 6; ++i) out.hyperplane += Polynomial::variable(z, i) * Scalar(draw());
  }
  std::vector<Polynomial> cut = image.generators();
  cut.push_back(out.hyperplane);
  const GroebnerBasis cut_gb = buchberger(Ideal(z, cut));
  for (int e = lo; e <= hi; ++e) {
    out.hyperplane_samples[e] = static_cast<long>(hilbert_function(cut_gb, static_cast<unsigned>(e)));
  }
  out.hyperplane_agrees = out.hyperplane_samples == section;
  return out;
}

}  // namespace tgr
