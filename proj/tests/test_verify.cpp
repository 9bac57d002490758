#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tgr/verify.hpp"

using namespace tgr;

namespace {

const Claim* find_claim(const VerificationReport& r, std::string_view id) {
  const auto it = std::find_if(r.claims.begin(), r.claims.end(), [&](const Claim& c) { return c.id == id; });
  return it == r.claims.end() ? nullptr : &*it;
}

bool has_finding(const VerificationReport& r, std::string_view prefix) {
  return std::any_of(r.findings.begin(), r.findings.end(),
                     [&](const std::string& f) { return f.rfind(prefix, 0) == 0; });
}

std::string without_timing(VerificationReport r) {
  r.runtime_ms = 0;
  return render_json(r);
}

#ifdef TANGENTGR_VERIFY_BIN
int run_cli(const std::string& args) {
  const std::string command = std::string(TANGENTGR_VERIFY_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}
#endif

}  // namespace

TEST_CASE("task ids") {
  for (TaskId id : kAtomicTasks) CHECK(parse_task_id(task_name(id)) == id);
  CHECK(parse_task_id("all") == TaskId::all);
  CHECK_FALSE(parse_task_id("lemma2").has_value());
  CHECK_FALSE(parse_task_id("").has_value());
}

TEST_CASE("parameter validation") {
  TaskParameters p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.seed == 0);
  CHECK(p.samples == 50);
  CHECK(p.bound == 5);
  CHECK(p.degree_lo == 3);
  CHECK(p.degree_hi == 7);
  const auto invalid = [](auto mutate) {
    TaskParameters q;
    mutate(q);
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  };
  invalid([](TaskParameters& q) { q.samples = 0; });
  invalid([](TaskParameters& q) { q.bound = 0; });
  invalid([](TaskParameters& q) { q.degree_lo = 2; });
  invalid([](TaskParameters& q) { q.degree_hi = 5; });
  invalid([](TaskParameters& q) { q.degree_hi = 13; });
  invalid([](TaskParameters& q) { q.campaign_threshold = 1.5; });
}

TEST_CASE("lemma1 report") {
  const VerificationReport r = run_task(TaskId::lemma1, {});
  CHECK(r.status == Status::pass);
  CHECK(r.findings.empty());
  for (const char* id : {"lemma1.wedge_cubics", "lemma1.projective_emptiness", "lemma1.independence",
                         "lemma1.generating", "lemma1.chern_classes", "lemma1.degenerate_rejected"}) {
    const Claim* c = find_claim(r, id);
    REQUIRE_MESSAGE(c != nullptr, id);
    CHECK(c->passed);
  }
  const Claim* e = find_claim(r, "lemma1.projective_emptiness");
  CHECK(e->actual.find("4") != std::string::npos);
  CHECK(find_claim(r, "lemma1.wedge_cubics")->provenance == Provenance::published);
}

TEST_CASE("lemma3 report flags the published third family") {
  const VerificationReport r = run_task(TaskId::lemma3, {});
  CHECK(r.status == Status::flagged);
  CHECK(exit_code(r) == 0);
  CHECK(has_finding(r, "lemma3.family_Z: "));
  CHECK(r.findings.size() == 1);
  for (const auto& c : r.claims) CHECK_MESSAGE(c.passed, c.id);
  CHECK(r.flagged(*find_claim(r, "lemma3.family_Z")));
  CHECK_FALSE(r.flagged(*find_claim(r, "lemma3.family_X")));
}

TEST_CASE("lemma5 and hilb reports") {
  const VerificationReport five = run_task(TaskId::lemma5, {});
  CHECK(five.status == Status::flagged);
  CHECK(five.findings.size() == 2);
  for (const auto& f : five.findings) CHECK(f.rfind("lemma5.line_Z.relations: ", 0) == 0);
  for (const auto& c : five.claims) CHECK_MESSAGE(c.passed, c.id);

  const VerificationReport hilb = run_task(TaskId::hilb, {});
  CHECK(hilb.status == Status::pass);
  CHECK(find_claim(hilb, "hilb.degree")->passed);
  CHECK(find_claim(hilb, "hilb.sectional_genus")->passed);
}

TEST_CASE("all runs every task once") {
  TaskParameters p;
  p.samples = 5;
  const VerificationReport r = run_task(TaskId::all, p);
  CHECK(r.task == "all");
  CHECK(r.status == Status::flagged);
  for (TaskId id : kAtomicTasks) {
    const std::string prefix = task_name(id) + ".";
    const auto count = std::count_if(r.claims.begin(), r.claims.end(),
                                     [&](const Claim& c) { return c.id.rfind(prefix, 0) == 0; });
    CHECK_MESSAGE(count > 0, prefix);
  }
  std::vector<std::string> ids;
  for (const auto& c : r.claims) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  CHECK(r.findings.size() == 3);
}

TEST_CASE("status rules") {
  VerificationReport r;
  r.claims.push_back({"a", "1", "1", Provenance::elementary, Json::object(), true});
  r.update_status();
  CHECK(r.status == Status::pass);
  r.findings.push_back("a: display differs");
  r.update_status();
  CHECK(r.status == Status::flagged);
  CHECK(exit_code(r) == 0);
  r.claims.push_back({"b", "1", "2", Provenance::derived, Json::object(), false});
  r.update_status();
  CHECK(r.status == Status::fail);
  CHECK(exit_code(r) == 1);
}

TEST_CASE("JSON round trip and schema") {
  TaskParameters p;
  p.samples = 3;
  for (TaskId id : {TaskId::lemma1, TaskId::lemma3, TaskId::thm1}) {
    const VerificationReport r = run_task(id, p);
    const Json j = to_json(r);
    CHECK(to_json(report_from_json(j)) == j);
    CHECK(report_from_json(Json::parse(render_json(r))).claims.size() == r.claims.size());
    for (const char* key : {"task", "status", "claims", "findings", "runtime_ms"}) CHECK(j.contains(key));
    for (const auto& c : j["claims"]) {
      for (const char* key : {"id", "expected", "actual", "provenance", "witnesses", "passed"}) CHECK(c.contains(key));
    }
  }
  Json broken = to_json(run_task(TaskId::lemma1, {}));
  broken["status"] = "maybe";
  CHECK_THROWS_AS(report_from_json(broken), std::invalid_argument);
  broken.erase("status");
  CHECK_THROWS_AS(report_from_json(broken), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("text rendering marks each claim") {
  const VerificationReport r = run_task(TaskId::lemma3, {});
  const std::string text = render_text(r);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("task lemma3: flagged", 0) == 0);
  std::size_t marked = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("✓ ", 0) == 0 || line.rfind("✗ ", 0) == 0 || line.rfind("⚑ ", 0) == 0) ++marked;
  }
  CHECK(marked == r.claims.size());
  CHECK(text.find("⚑ lemma3.family_Z") != std::string::npos);
  CHECK(text.find("findings:") != std::string::npos);
}

TEST_CASE("seeded outputs are deterministic") {
  for (std::uint64_t seed : {0u, 7u}) {
    const auto failure = oracle::check_determinism(seed);
    CHECK_MESSAGE(!failure, failure.value_or(""));
  }
  TaskParameters p;
  p.samples = 4;
  p.seed = 11;
  CHECK(without_timing(run_task(TaskId::all, p)) == without_timing(run_task(TaskId::all, p)));
}

TEST_CASE("sampling campaigns") {
  CHECK_THROWS_AS(sample_campaign(0, 0, 5), std::invalid_argument);
  const VerificationReport degenerate = sample_campaign(1, 7, 0);
  CHECK(degenerate.status == Status::fail);
  const Json& failures = degenerate.claims.front().witnesses["failures"];
  REQUIRE(failures.size() == 1);
  CHECK(failures[0]["seed"] == 7);
  CHECK(failures[0]["verdict"] == "not generating");

  const VerificationReport small = sample_campaign(10, 0, 5);
  CHECK(small.claims.front().witnesses["draws"] == 10);
  CHECK(small.claims.front().witnesses["pass_count"].get<int>() >= 9);
}

#ifdef TANGENTGR_VERIFY_BIN
TEST_CASE("command-line exit codes") {
  const auto dir = std::filesystem::temp_directory_path() / "tangentgr_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";

  CHECK(run_cli("lemma1 --omit-timing --output " + a.string()) == 0);
  CHECK(run_cli("lemma1 --omit-timing --output " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(report_from_json(Json::parse(slurp(a))).status == Status::pass);

  CHECK(run_cli("lemma3 --format text --output " + a.string()) == 0);
  CHECK(slurp(a).find("⚑") != std::string::npos);

  CHECK(run_cli("lemma7") == 2);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("thm1 --samples 0") == 2);
  CHECK(run_cli("hilb --degrees 3..5") == 2);
  CHECK(run_cli("hilb --degrees three") == 2);
  CHECK(run_cli("lemma1 --format yaml") == 2);
  CHECK(run_cli("lemma1 --output /nonexistent-dir/report.json") == 3);
  std::filesystem::remove_all(dir);
}
#endif
