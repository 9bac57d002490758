#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tgr/verify.hpp"

namespace tgr {

namespace {

constexpr std::array<std::pair<TaskId, std::string_view>, 6> kTaskNames{{
    {TaskId::lemma1, "lemma1"},
    {TaskId::lemma3, "lemma3"},
    {TaskId::lemma5, "lemma5"},
    {TaskId::thm1, "thm1"},
    {TaskId::hilb, "hilb"},
    {TaskId::all, "all"},
}};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("report JSON lacks field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::optional<TaskId> parse_task_id(std::string_view text) {
  for (const auto& [id, name] : kTaskNames) {
    if (name == text) return id;
  }
  return std::nullopt;
}

std::string task_name(TaskId id) {
  for (const auto& [i, name] : kTaskNames) {
    if (i == id) return std::string(name);
  }
  throw std::invalid_argument("unknown task id");
}

void TaskParameters::validate() const {
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (bound < 1) throw std::invalid_argument("--bound must be >= 1");
  if (degree_lo < 3) throw std::invalid_argument("--degrees must start at 3 or later");
  if (degree_hi - degree_lo < 3) {
    throw std::invalid_argument("--degrees must cover at least four consecutive degrees");
  }
  if (degree_hi > 12) throw std::invalid_argument("--degrees must end at 12 or earlier");
  if (!(campaign_threshold >= 0.0 && campaign_threshold <= 1.0)) {
    throw std::invalid_argument("campaign threshold must lie in [0, 1]");
  }
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::published:
      return "published";
    case Provenance::derived:
      return "derived";
    case Provenance::elementary:
      return "elementary";
  }
  return "derived";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  for (Provenance p : {Provenance::published, Provenance::derived, Provenance::elementary}) {
    if (provenance_name(p) == text) return p;
  }
  return std::nullopt;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::flagged:
      return "flagged";
  }
  return "fail";
}

std::optional<Status> parse_status(std::string_view text) {
  for (Status s : {Status::pass, Status::fail, Status::flagged}) {
    if (status_name(s) == text) return s;
  }
  return std::nullopt;
}

void VerificationReport::update_status() {
  const bool all_pass = std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
  if (!all_pass) {
    status = Status::fail;
  } else {
    status = findings.empty() ? Status::pass : Status::flagged;
  }
}

bool VerificationReport::flagged(const Claim& c) const {
  const std::string prefix = c.id + ": ";
  return std::any_of(findings.begin(), findings.end(),
                     [&](const std::string& f) { return f.rfind(prefix, 0) == 0; });
}

int exit_code(const VerificationReport& r) { return r.status == Status::fail ? 1 : 0; }

Json to_json(const VerificationReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json jc;
    jc["id"] = c.id;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["provenance"] = provenance_name(c.provenance);
    jc["witnesses"] = c.witnesses;
    jc["passed"] = c.passed;
    claims.push_back(std::move(jc));
  }
  Json j;
  j["task"] = r.task;
  j["status"] = status_name(r.status);
  j["claims"] = std::move(claims);
  j["findings"] = r.findings;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.task = string_field(j, "task");
  auto status = parse_status(string_field(j, "status"));
  if (!status) throw std::invalid_argument("unknown status '" + string_field(j, "status") + "'");
  r.status = *status;
  const Json& claims = field(j, "claims");
  if (!claims.is_array()) throw std::invalid_argument("field 'claims' must be an array");
  for (const auto& jc : claims) {
    Claim c;
    c.id = string_field(jc, "id");
    c.expected = string_field(jc, "expected");
    c.actual = string_field(jc, "actual");
    auto p = parse_provenance(string_field(jc, "provenance"));
    if (!p) throw std::invalid_argument("unknown provenance in claim " + c.id);
    c.provenance = *p;
    c.witnesses = field(jc, "witnesses");
    const Json& passed = field(jc, "passed");
    if (!passed.is_boolean()) throw std::invalid_argument("field 'passed' must be a boolean");
    c.passed = passed.get<bool>();
    r.claims.push_back(std::move(c));
  }
  const Json& findings = field(j, "findings");
  if (!findings.is_array()) throw std::invalid_argument("field 'findings' must be an array");
  for (const auto& f : findings) {
    if (!f.is_string()) throw std::invalid_argument("findings must be strings");
    r.findings.push_back(f.get<std::string>());
  }
  const Json& runtime = field(j, "runtime_ms");
  if (!runtime.is_number_integer()) throw std::invalid_argument("field 'runtime_ms' must be an integer");
  r.runtime_ms = runtime.get<long>();
  return r;
}

std::string render_json(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "task " << r.task << ": " << status_name(r.status) << " (" << r.runtime_ms << " ms)\n";
  for (const auto& c : r.claims) {
    const char* mark = !c.passed ? "✗" : (r.flagged(c) ? "⚑" : "✓");
    out << mark << " " << c.id << " [" << provenance_name(c.provenance) << "] expected: " << c.expected
        << " | actual: " << c.actual << "\n";
  }
  if (!r.findings.empty()) {
    out << "findings:\n";
    for (const auto& f : r.findings) out << "  ⚑ " << f << "\n";
  }
  return out.str();
}

}  // namespace tgr
