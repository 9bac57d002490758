// Acceptance run: one PASS/FAIL line per criterion with its time limit.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "tgr/plucker.hpp"
#include "tgr/reference.hpp"
#include "tgr/verify.hpp"

using namespace tgr;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

const PluckerMap& reference_map() {
  static const PluckerMap map = build_plucker_map(reference_section_set());
  return map;
}

bool contains(const std::vector<ProjectivePoint>& v, const ProjectivePoint& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome wedge_goldens() {
  const auto cubics = wedge_cubics(reference_section_set());
  int matched = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    matched += cubics[k] == parse_polynomial(reference::kWedgeCubics[k], rings::plane());
  }
  return {matched == 6, std::to_string(matched) + "/6 wedge cubics equal the displays"};
}

Outcome wedge_emptiness() {
  const auto cubics = wedge_cubics(reference_section_set());
  const EmptinessCertificate cert = projective_emptiness(Ideal(rings::plane(), {cubics.begin(), cubics.end()}));
  const auto lines = oracle::random_line_gcd(cubics, 100, 0);
  const bool ok = cert.empty && cert.degree.has_value() && lines.trivial == 100;
  return {ok, "empty: " + yes_no(cert.empty) + ", D0 = " +
                  (cert.degree ? std::to_string(*cert.degree) : std::string("none")) +
                  ", trivial line gcds " + std::to_string(lines.trivial) + "/" + std::to_string(lines.lines)};
}

Outcome slice_fiber_count() {
  const FiberReport f = w_slice_fiber(reference_map());
  const Scalar w = Cyclo3::omega();
  int published = 0;
  for (unsigned i = 1; i <= 3; ++i) {
    const std::map<std::string, Scalar> u{{"u", w.pow(i)}};
    published += contains(f.image_points, ProjectivePoint::parse(reference::kSliceFamilies[0], u));
    published += contains(f.image_points, ProjectivePoint::parse(reference::kSliceFamilies[1], u));
  }
  const DegreeArithmetic d = slice_degree_argument(3, static_cast<int>(f.distinct_image_count));
  const bool ok = f.preimage_points.size() == 9 && f.all_transversal() && f.distinct_image_count == 9 &&
                  published == 6 && d.r == 1 && d.generically_injective;
  return {ok, std::to_string(f.preimage_points.size()) + " preimages, transversal: " + yes_no(f.all_transversal()) +
                  ", distinct images " + std::to_string(f.distinct_image_count) + ", published X/Y points found " +
                  std::to_string(published) + "/6, r = " + (d.r ? std::to_string(*d.r) : std::string("unset"))};
}

Outcome exceptional_fibers() {
  const PluckerMap& map = reference_map();
  int collapsed = 0;
  for (auto p : reference::kCollapsedToLast) {
    collapsed += evaluate_map(map, ProjectivePoint::parse(p)) == ProjectivePoint::parse(reference::kLastImage);
  }
  for (auto p : reference::kCollapsedToFirst) {
    collapsed += evaluate_map(map, ProjectivePoint::parse(p)) == ProjectivePoint::parse(reference::kFirstImage);
  }
  const InjectivityReport r = injectivity_locus(map, 0, 10);
  const auto singletons = std::count_if(r.samples.begin(), r.samples.end(), [](const auto& s) { return s.singleton; });
  const bool ok = collapsed == 6 && r.certified[0] && r.certified[1] && singletons == 10 && r.samples.size() == 10;
  return {ok, "collapsing points " + std::to_string(collapsed) + "/6, certificates " +
                  std::to_string(int(r.certified[0]) + int(r.certified[1])) + "/2, singleton fibers " +
                  std::to_string(singletons) + "/" + std::to_string(r.samples.size())};
}

Outcome immersion() {
  const ImmersionReport r = immersion_check(reference_map());
  const bool ok = r.minors.empty && r.matches_published;
  return {ok, "3x3 minors empty: " + yes_no(r.minors.empty) + " (D0 = " +
                  (r.minors.degree ? std::to_string(*r.minors.degree) : std::string("none")) +
                  "), chart Jacobian matches: " + yes_no(r.matches_published) + ", " +
                  std::to_string(r.mismatches.size()) + " mismatched entries"};
}

Outcome nodal_lines() {
  const auto lines = line_images(reference_map());
  bool identities = true;
  int nodes = 0;
  for (const auto& r : lines) {
    identities = identities && r.relations_hold;
    nodes += r.nodal && r.singular_points.size() == 1 && r.quadratic_rank == 2;
  }
  const bool displays = lines[0].linear_matches_published && lines[0].cubic_matches_published &&
                        lines[1].linear_matches_published && lines[1].cubic_matches_published;
  const VerificationReport report = run_task(TaskId::lemma5, {});
  const bool z_flagged = !lines[2].findings.empty() && report.status == Status::flagged &&
                         std::all_of(report.findings.begin(), report.findings.end(), [](const std::string& f) {
                           return f.rfind("lemma5.line_Z.", 0) == 0;
                         });
  const bool ok = identities && nodes == 3 && displays && z_flagged;
  return {ok, "identities hold: " + yes_no(identities) + ", nodes " + std::to_string(nodes) +
                  "/3, X and Y displays match: " + yes_no(displays) + ", Z = 0 relations flagged: " + yes_no(z_flagged) +
                  " (task status " + status_name(report.status) + ")"};
}

Outcome grassmannian() {
  const QuadricCheck q = quadric_check(reference_map());
  const bool zero = substitute(q.quadric, reference_map().cubics).is_zero();
  const auto kernel = image_ideal_in_degree(reference_map(), 2);
  LinearSpan span(rings::plucker_space());
  for (const auto& k : kernel) span.insert(k);
  const bool contains_quadric = span.contains(q.quadric);
  return {zero && !kernel.empty() && contains_quadric,
          "pullback of " + q.quadric.str() + " is zero: " + yes_no(zero) + ", kernel dimension " +
              std::to_string(kernel.size()) + ", contains it: " + yes_no(contains_quadric)};
}

Outcome image_hilbert_data() {
  const ImageHilbertReport h = image_hilbert(reference_map(), 3, 7, 0);
  const bool section = h.section.polynomial == std::vector<Rational>{0, 9};
  const bool ok = h.surface.leading_coefficient() == Rational(9, 2) && h.degree == Rational(9) && section &&
                  h.sectional_genus == Rational(1);
  return {ok, "leading coefficient " + h.surface.leading_coefficient().str() + ", degree " + h.degree.str() +
                  ", section polynomial 9t: " + yes_no(section) + ", genus " + h.sectional_genus.str()};
}

Outcome campaign() {
  const VerificationReport r = sample_campaign(50, 0, 5, 0.9);
  const int passed = r.claims.front().witnesses["pass_count"].get<int>();
  return {passed >= 45, std::to_string(passed) + "/50 generically injective (need 45)"};
}

Outcome property_suites() {
  std::vector<std::string> failures;
  const auto record = [&](const char* what, const oracle::Failure& f) {
    if (f) failures.push_back(std::string(what) + ": " + *f);
  };
  record("field axioms", oracle::check_field_axioms(500, 1));
  record("ring axioms", oracle::check_ring_axioms(200, 2));
  std::uint64_t seed = 10;
  for (const auto& named : oracle::reference_ideals()) {
    record(named.name.c_str(), oracle::check_groebner_basis(named.ideal, buchberger(named.ideal), ++seed));
    record(named.name.c_str(),
           oracle::check_hilbert_vs_macaulay(named.ideal, 0, named.ideal.ring().size() > 3 ? 4 : 9));
  }
  record("determinism", oracle::check_determinism(0));
  return {failures.empty(), failures.empty() ? "field and ring axioms, basis re-checks, normal-form idempotence, "
                                               "Hilbert vs Macaulay, determinism all green"
                                             : failures.front()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "wedge cubic goldens", 1, wedge_goldens},
      {2, "no common zero of the wedge cubics", 5, wedge_emptiness},
      {3, "nine-point slice fiber and degree argument", 5, slice_fiber_count},
      {4, "exceptional fibers and injectivity certificates", 120, exceptional_fibers},
      {5, "immersion", 120, immersion},
      {6, "nodal line images", 5, nodal_lines},
      {7, "Grassmannian containment", 10, grassmannian},
      {8, "image degree and sectional genus", 300, image_hilbert_data},
      {9, "sampling campaign", 600, campaign},
      {10, "property suites", 900, property_suites},
  };
  constexpr double kTotalLimit = 900;
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.passed && secs < c.limit_seconds;
    failed += !pass;
    std::printf("criterion %2d %s  %-48s %8.2f s (limit %g s)  %s\n", c.number, pass ? "PASS" : "FAIL", c.name, secs,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.2f s (limit %g s)\n", total, kTotalLimit);
  return failed == 0 && total < kTotalLimit ? 0 : 1;
}
