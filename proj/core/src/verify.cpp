#include "tgr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>

#include "tgr/euler_sections.hpp"
#include "tgr/plucker.hpp"
#include "tgr/reference.hpp"

namespace tgr {

namespace {

template <typename T, typename F>
Json json_list(const std::vector<T>& items, F&& f) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(f(item));
  return out;
}

Json points_json(const std::vector<ProjectivePoint>& points) {
  return json_list(points, [](const ProjectivePoint& p) { return p.str(); });
}

Json polys_json(const std::vector<Polynomial>& polys) {
  return json_list(polys, [](const Polynomial& p) { return p.str(); });
}

Json samples_json(const std::map<int, long>& samples) {
  Json out = Json::object();
  for (const auto& [d, v] : samples) out[std::to_string(d)] = v;
  return out;
}

Json hilbert_json(const HilbertData& h) {
  return Json{{"samples", samples_json(h.samples)},
              {"stable_from", h.stable_from},
              {"polynomial", json_list(h.polynomial, [](const Rational& r) { return r.str(); })}};
}

Json fiber_json(const FiberReport& f) {
  Json transversal = Json::array();
  for (bool b : f.transversal) transversal.push_back(b);
  return Json{{"preimage_points", points_json(f.preimage_points)},
              {"family", f.family},
              {"transversal", transversal},
              {"image_points", points_json(f.image_points)},
              {"distinct_image_count", f.distinct_image_count}};
}

Json arithmetic_json(const DegreeArithmetic& a) {
  Json table = Json::array();
  for (const auto& [d, r] : a.divisor_table) table.push_back(Json{{"d", d}, {"r", r}});
  Json out{{"m", a.m}, {"verdict", a.verdict}, {"divisor_table", table}};
  if (a.d) out["d"] = *a.d;
  if (a.r) out["r"] = *a.r;
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

bool same_set(const std::vector<ProjectivePoint>& a, const std::vector<ProjectivePoint>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const ProjectivePoint& p) { return std::find(b.begin(), b.end(), p) != b.end(); });
}

std::vector<ProjectivePoint> images_in_family(const FiberReport& f, std::string_view family) {
  std::vector<ProjectivePoint> out;
  for (std::size_t i = 0; i < f.image_points.size(); ++i) {
    if (f.family[i] == family) out.push_back(f.image_points[i]);
  }
  return out;
}

/// A published family of slice points for u = w, w^2, w^3.
std::vector<ProjectivePoint> published_family(std::string_view text) {
  std::vector<ProjectivePoint> out;
  for (unsigned i = 1; i <= 3; ++i) {
    out.push_back(ProjectivePoint::parse(text, {{"u", Scalar::omega().pow(i)}}));
  }
  return out;
}

Claim claim(std::string id, std::string expected, std::string actual, Provenance p, bool passed,
            Json witnesses = Json::object()) {
  return {std::move(id), std::move(expected), std::move(actual), p, std::move(witnesses), passed};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

PluckerMap reference_map() { return build_plucker_map(reference_section_set()); }

void lemma1(VerificationReport& r) {
  const OrderedSectionSet s = reference_section_set();
  const std::size_t rank = section_rank(s);
  r.claims.push_back(claim("lemma1.independence", "rank of {v1, v2, v3, v4, v} is 5",
                           "rank " + std::to_string(rank), Provenance::elementary, rank == 5,
                           Json{{"sections", s.str()}}));

  const auto cubics = wedge_cubics(s);
  bool match = true;
  std::vector<std::string> derived;
  std::vector<std::string> published;
  for (std::size_t i = 0; i < 6; ++i) {
    const Polynomial p = parse_polynomial(reference::kWedgeCubics[i], rings::plane());
    match = match && p == cubics[i];
    derived.push_back(cubics[i].str());
    published.push_back(p.str());
  }
  r.claims.push_back(claim("lemma1.wedge_cubics", join(published, "; "), join(derived, "; "),
                           Provenance::published, match,
                           Json{{"order", {"12", "13", "14", "23", "24", "34"}}, {"cubics", derived}}));

  const EmptinessCertificate cert = projective_emptiness(Ideal(rings::plane(), {cubics.begin(), cubics.end()}));
  Json pure = Json::array();
  for (unsigned e : cert.pure_powers) pure.push_back(e);
  Json w{{"pure_powers", pure}};
  if (cert.degree) w["certificate_degree"] = *cert.degree;
  r.claims.push_back(claim("lemma1.projective_emptiness", "no common zero in P^2, finite D0",
                           cert.empty ? "empty, D0 = " + std::to_string(cert.degree.value_or(0)) : "not empty",
                           Provenance::published, cert.empty && cert.degree.has_value(), w));

  const GeneratingResult g = generating_test(s);
  r.claims.push_back(claim("lemma1.generating", "independent and generating",
                           "independent: " + yes_no(g.independent) + ", generating: " + yes_no(g.generating),
                           Provenance::published, g.generating));

  const ChernPair c = chern_tangent();
  const bool embeddable = tango_check(c);
  r.claims.push_back(claim("lemma1.chern_classes", "(c1, c2) = (3, 3), outside the embedding list",
                           "(" + std::to_string(c.c1) + ", " + std::to_string(c.c2) + "), " +
                               (embeddable ? "in" : "outside") + " the embedding list",
                           Provenance::published, c == ChernPair{3, 3} && !embeddable));

  OrderedSectionSet degenerate = s;
  degenerate.sections[1] = degenerate.sections[0];
  const bool rejected = !generating_test(degenerate).generating;
  r.claims.push_back(claim("lemma1.degenerate_rejected", "duplicate sections are not generating",
                           rejected ? "rejected" : "accepted", Provenance::elementary, rejected));
}

void lemma3(VerificationReport& r) {
  const PluckerMap map = reference_map();
  const QuadricCheck q = quadric_check(map);
  const bool signs_ok = q.signs == std::array<int, 3>{1, -1, 1};
  r.claims.push_back(claim("lemma3.plucker_quadric", "Z0*Z5 - Z1*Z4 + Z2*Z3 pulls back to 0",
                           q.quadric.str() + " pulls back to 0", Provenance::derived,
                           signs_ok && !q.unsigned_pullback.is_zero(),
                           Json{{"signs", q.signs}, {"unsigned_pullback_terms", q.unsigned_pullback.size()}}));

  const auto kernel = image_ideal_in_degree(map, 2);
  r.claims.push_back(claim("lemma3.quadric_kernel", "degree-2 kernel has dimension >= 1 and contains the quadric",
                           "dimension " + std::to_string(kernel.size()), Provenance::derived,
                           !kernel.empty() && [&] {
                             LinearSpan span(rings::plucker_space());
                             for (const auto& k : kernel) span.insert(k);
                             return span.contains(q.quadric);
                           }(),
                           Json{{"kernel", polys_json(kernel)}}));

  const FiberReport f = w_slice_fiber(map);
  const bool nine = f.preimage_points.size() == 9 && f.all_transversal();
  r.claims.push_back(claim("lemma3.slice_points", "9 distinct transversal points on Z0 = Z5 = 0",
                           std::to_string(f.preimage_points.size()) + " points, transversal: " +
                               yes_no(f.all_transversal()),
                           Provenance::published, nine, fiber_json(f)));
  bool on_quadric = true;
  for (const auto& p : f.image_points) on_quadric = on_quadric && evaluate_quadric(q, p).is_zero();
  r.claims.push_back(claim("lemma3.slice_images", "9 pairwise distinct images on the quadric",
                           std::to_string(f.distinct_image_count) + " distinct, on quadric: " + yes_no(on_quadric),
                           Provenance::derived, f.distinct_image_count == 9 && on_quadric));

  const std::array<std::pair<std::string_view, std::string_view>, 2> displayed{
      {{"X", reference::kSliceFamilies[1]}, {"Y", reference::kSliceFamilies[0]}}};
  for (const auto& [family, text] : displayed) {
    const auto derived = images_in_family(f, family);
    const auto published = published_family(text);
    r.claims.push_back(claim("lemma3.family_" + std::string(family),
                             "images (" + std::string(text) + "), u = w^i",
                             std::to_string(derived.size()) + " images, " +
                                 (same_set(derived, published) ? "equal" : "different"),
                             Provenance::published, same_set(derived, published),
                             Json{{"derived", points_json(derived)}, {"published", points_json(published)}}));
  }
  // Direct substitution of (x : y : 0) with x^3 + y^3 = 0.
  std::vector<ProjectivePoint> expected_z;
  for (const auto& t : roots_of_binomial(3, Scalar(-1))) {
    expected_z.push_back(ProjectivePoint({Scalar(0), -t, Scalar(-1), t, Scalar(1), Scalar(0)}));
  }
  const auto derived_z = images_in_family(f, "Z");
  const auto published_z = published_family(reference::kSliceFamilies[2]);
  const bool published_agrees = same_set(derived_z, published_z);
  r.claims.push_back(claim("lemma3.family_Z", "images (0 : -t : -1 : t : 1 : 0), t^3 = -1",
                           std::to_string(derived_z.size()) + " images, " +
                               (same_set(derived_z, expected_z) ? "equal" : "different"),
                           Provenance::derived, same_set(derived_z, expected_z),
                           Json{{"derived", points_json(derived_z)},
                                {"published", points_json(published_z)},
                                {"published_agrees", published_agrees}}));
  if (!published_agrees) {
    r.findings.push_back("lemma3.family_Z: published points (" + std::string(reference::kSliceFamilies[2]) +
                         ") do not lie on the image; direct substitution gives (0 : -t : -1 : t : 1 : 0) "
                         "with t^3 = -1. The count of 9 is unaffected.");
  }

  const int count = nine ? static_cast<int>(f.distinct_image_count) : 0;
  const DegreeArithmetic a = slice_degree_argument(3, std::max(count, 1));
  r.claims.push_back(claim("lemma3.degree_argument", "m = 3, d = 9, r = 1: generically injective",
                           a.verdict + (a.r ? ", r = " + std::to_string(*a.r) : ""), Provenance::published,
                           a.generically_injective && a.r == 1, arithmetic_json(a)));
}

void lemma5(VerificationReport& r) {
  const PluckerMap map = reference_map();
  const InjectivityReport inj = injectivity_locus(map, 0);
  auto collapsed = [&](const char* id, const CollapsedFiber& c, std::string_view target) {
    r.claims.push_back(claim(id, "all three points map to (" + std::string(target) + ")",
                             c.collapses ? "collapsed" : "not collapsed", Provenance::published, c.collapses,
                             Json{{"points", points_json(c.points)}, {"images", points_json(c.images)}}));
  };
  collapsed("lemma5.coordinate_points_collapse", inj.collapsed_to_last, reference::kLastImage);
  collapsed("lemma5.unit_product_points_collapse", inj.collapsed_to_first, reference::kFirstImage);

  const Json doubling{{"generators", polys_json(inj.doubling.generators())},
                      {"saturated", polys_json(inj.saturated.generators())}};
  const std::array<const char*, 2> ids{"lemma5.diagonal_x", "lemma5.diagonal_y"};
  for (std::size_t i = 0; i < 2; ++i) {
    r.claims.push_back(claim(ids[i], inj.certificates[i].str() + " in the radical of J : (x*y*x1*y1)^inf",
                             inj.certified[i] ? "member" : "not a member", Provenance::derived,
                             inj.certified[i], doubling));
  }
  std::size_t singles = 0;
  Json samples = Json::array();
  for (const auto& s : inj.samples) {
    singles += s.singleton ? 1 : 0;
    samples.push_back(Json{{"point", s.point.str()}, {"image", s.image.str()}, {"singleton", s.singleton}});
  }
  r.claims.push_back(claim("lemma5.singleton_fibers",
                           std::to_string(inj.samples.size()) + "/" + std::to_string(inj.samples.size()) +
                               " sampled fibers are singletons",
                           std::to_string(singles) + "/" + std::to_string(inj.samples.size()),
                           Provenance::derived, singles == inj.samples.size() && !inj.samples.empty(),
                           Json{{"samples", samples}}));

  const ImmersionReport im = immersion_check(map);
  r.claims.push_back(claim("lemma5.euler_identity", "X*dM/dX + Y*dM/dY + Z*dM/dZ = 3*M",
                           im.euler_identity ? "holds" : "fails", Provenance::elementary, im.euler_identity));
  Json mw{{"minor_count", im.minor_count}};
  if (im.minors.degree) mw["certificate_degree"] = *im.minors.degree;
  r.claims.push_back(claim("lemma5.immersion", "3x3 minors of the Jacobian have no common zero in P^2",
                           im.minors.empty ? "empty, D0 = " + std::to_string(im.minors.degree.value_or(0))
                                           : "not empty",
                           Provenance::derived, im.minors.empty, mw));
  Json rows = Json::array();
  for (const auto& row : im.cleared_jacobian) rows.push_back(polys_json(row));
  r.claims.push_back(claim("lemma5.chart_jacobian", "published 2x5 Jacobian times x^2*y^2",
                           im.matches_published ? "equal entry by entry" : join(im.mismatches, "; "),
                           Provenance::published, im.matches_published, Json{{"cleared", rows}}));
  r.claims.push_back(claim("lemma5.chart_immersion", "2x2 minors saturated by x*y generate (1)",
                           im.chart_immersion ? "unit ideal" : "proper ideal", Provenance::published,
                           im.chart_immersion));

  const auto lines = line_images(map);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const LineImageReport& li = lines[k];
    const std::string base = "lemma5.line_" + li.line;
    Json w{{"relations", polys_json(li.linear_relations)},
           {"plane_coordinates", li.plane_coordinates},
           {"cubic", li.cubic.str()},
           {"published_linear_agrees", li.linear_matches_published}};
    r.claims.push_back(claim(base + ".relations", "derived relations vanish identically on the image",
                             join([&] {
                               std::vector<std::string> s;
                               for (const auto& p : li.linear_relations) s.push_back(p.str());
                               s.push_back(li.cubic.str());
                               return s;
                             }(), ", ") + (li.relations_hold ? ": hold" : ": fail"),
                             Provenance::derived, li.relations_hold, w));
    r.claims.push_back(claim(base + ".node", "one singular point, quadratic part of rank 2",
                             std::to_string(li.singular_points.size()) + " singular point(s), rank " +
                                 std::to_string(li.quadratic_rank),
                             Provenance::published, li.nodal,
                             Json{{"singular_points", points_json(li.singular_points)},
                                  {"coordinates", li.plane_coordinates}}));
    const auto& published = reference::kLineImages[k];
    r.claims.push_back(claim(base + ".published_cubic", std::string(published.cubic) + " = 0 on the image",
                             li.cubic_matches_published ? "holds" : "fails", Provenance::published,
                             li.cubic_matches_published));
    for (const auto& f : li.findings) r.findings.push_back(base + ".relations: " + f);
  }
}

void thm1(VerificationReport& r, const TaskParameters& p) {
  const PipelineVerdict v = generic_injectivity_pipeline(reference_section_set(), p.seed, p.bound);
  Json w{{"verdict", v.verdict}};
  if (v.slice_length) w["slice_length"] = *v.slice_length;
  if (v.special_fiber) w["special_slice_images"] = v.special_fiber->distinct_image_count;
  if (v.arithmetic) w["arithmetic"] = arithmetic_json(*v.arithmetic);
  r.claims.push_back(claim("thm1.reference_set", "generically injective via the 9-point slice", v.verdict,
                           Provenance::published, v.generically_injective, w));

  OrderedSectionSet degenerate = reference_section_set();
  degenerate.sections[3] = degenerate.sections[2];
  const PipelineVerdict d = generic_injectivity_pipeline(degenerate, p.seed, p.bound);
  r.claims.push_back(claim("thm1.degenerate_set", "not generating", d.verdict, Provenance::elementary,
                           d.verdict == "not generating"));

  VerificationReport campaign = sample_campaign(p.samples, p.seed, p.bound, p.campaign_threshold);
  for (auto& c : campaign.claims) r.claims.push_back(std::move(c));
}

void hilb(VerificationReport& r, const TaskParameters& p) {
  const PluckerMap map = reference_map();
  const ImageHilbertReport h = image_hilbert(map, p.degree_lo, p.degree_hi, p.seed);
  r.claims.push_back(claim("hilb.surface_polynomial", "Hilbert polynomial of degree 2 from stable samples",
                           "stable from " + std::to_string(h.surface.stable_from) + ", dimension " +
                               std::to_string(h.surface.dimension()),
                           Provenance::derived, h.surface.dimension() == 2, hilbert_json(h.surface)));
  r.claims.push_back(claim("hilb.degree", "leading coefficient 9/2, degree 9 = 3 + 6",
                           "leading coefficient " + h.surface.leading_coefficient().str() + ", degree " +
                               h.degree.str(),
                           Provenance::published, h.degree == Rational(9)));
  r.claims.push_back(claim("hilb.section_polynomial", "9t", [&] {
                             const auto& c = h.section.polynomial;
                             return (c.size() > 1 ? c[1].str() : std::string("0")) + "t + " +
                                    (c.empty() ? std::string("0") : c[0].str());
                           }(),
                           Provenance::derived,
                           h.section.polynomial.size() == 2 && h.section.polynomial[1] == Rational(9) &&
                               h.section.polynomial[0].is_zero(),
                           hilbert_json(h.section)));
  r.claims.push_back(claim("hilb.sectional_genus", "genus 1", "genus " + h.sectional_genus.str(),
                           Provenance::published, h.sectional_genus == Rational(1)));
  r.claims.push_back(claim("hilb.elimination_cross_check", "eliminated image ideal has the same Hilbert function",
                           h.elimination_agrees ? "agrees" : "differs", Provenance::derived, h.elimination_agrees,
                           Json{{"eliminated", samples_json(h.eliminated_samples)},
                                {"generators", h.image_generators}}));
  r.claims.push_back(claim("hilb.hyperplane_cross_check",
                           "image ideal plus a random linear form has the first differences",
                           h.hyperplane_agrees ? "agrees" : "differs", Provenance::derived, h.hyperplane_agrees,
                           Json{{"hyperplane", h.hyperplane.str()}, {"samples", samples_json(h.hyperplane_samples)}}));
}

VerificationReport run_atomic(TaskId id, const TaskParameters& params) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.task = task_name(id);
  try {
    switch (id) {
      case TaskId::lemma1:
        lemma1(r);
        break;
      case TaskId::lemma3:
        lemma3(r);
        break;
      case TaskId::lemma5:
        lemma5(r);
        break;
      case TaskId::thm1:
        thm1(r, params);
        break;
      case TaskId::hilb:
        hilb(r, params);
        break;
      case TaskId::all:
        throw std::logic_error("run_atomic called with all");
    }
  } catch (const BudgetExceeded& e) {
    r.claims.push_back(claim(r.task + ".engine", "completes within the step budget", e.what(),
                             Provenance::elementary, false));
  } catch (const std::exception& e) {
    r.claims.push_back(claim(r.task + ".engine", "completes without error", e.what(),
                             Provenance::elementary, false));
  }
  r.runtime_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count());
  r.update_status();
  return r;
}

}  // namespace

VerificationReport run_task(TaskId id, const TaskParameters& params) {
  params.validate();
  if (id != TaskId::all) return run_atomic(id, params);

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<VerificationReport>> futures;
  for (TaskId t : kAtomicTasks) futures.push_back(std::async(std::launch::async, run_atomic, t, params));
  VerificationReport all;
  all.task = task_name(TaskId::all);
  for (auto& f : futures) {
    VerificationReport r = f.get();
    for (auto& c : r.claims) all.claims.push_back(std::move(c));
    for (auto& note : r.findings) all.findings.push_back(std::move(note));
  }
  all.runtime_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - start)
                                         .count());
  all.update_status();
  return all;
}

VerificationReport sample_campaign(int n, std::uint64_t seed, int bound, double threshold) {
  if (n < 1) throw std::invalid_argument("campaign needs at least one draw");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.task = task_name(TaskId::thm1);
  int passed = 0;
  Json failures = Json::array();
  for (int i = 0; i < n; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const PipelineVerdict v = generic_injectivity_pipeline(random_section_set(s, bound), s, bound);
    if (v.generically_injective) {
      ++passed;
    } else {
      failures.push_back(Json{{"seed", s}, {"verdict", v.verdict}});
    }
  }
  const int needed = static_cast<int>(std::ceil(threshold * n - 1e-9));
  const double rate = static_cast<double>(passed) / n;
  r.claims.push_back(claim("thm1.campaign",
                           ">= " + std::to_string(needed) + "/" + std::to_string(n) +
                               " draws generically injective",
                           std::to_string(passed) + "/" + std::to_string(n), Provenance::derived,
                           passed >= needed,
                           Json{{"draws", n},
                                {"seed", seed},
                                {"bound", bound},
                                {"pass_count", passed},
                                {"rate", rate},
                                {"threshold", threshold},
                                {"failures", failures}}));
  r.runtime_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count());
  r.update_status();
  return r;
}

}  // namespace tgr
