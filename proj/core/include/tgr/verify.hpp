#pragma once

// Verification tasks, their structured reports, and seeded campaigns.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace tgr {

using Json = nlohmann::ordered_json;

enum class TaskId { lemma1, lemma3, lemma5, thm1, hilb, all };

/// Every task except `all`, in execution and report order.
inline constexpr std::array<TaskId, 5> kAtomicTasks{TaskId::lemma1, TaskId::lemma3, TaskId::lemma5,
                                                    TaskId::thm1, TaskId::hilb};

std::optional<TaskId> parse_task_id(std::string_view text);
std::string task_name(TaskId id);

struct TaskParameters {
  std::uint64_t seed = 0;
  int samples = 50;
  int bound = 5;
  int degree_lo = 3;
  int degree_hi = 7;
  /// Fraction of campaign draws that must come out generically injective.
  double campaign_threshold = 0.9;

  /// Throws std::invalid_argument naming the offending parameter.
  void validate() const;
};

/// Where an expected value comes from: a published display or statement,
/// an independent derivation, or elementary arithmetic.
enum class Provenance { published, derived, elementary };

std::string provenance_name(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

enum class Status { pass, fail, flagged };

std::string status_name(Status s);
std::optional<Status> parse_status(std::string_view text);

struct Claim {
  std::string id;
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::derived;
  Json witnesses = Json::object();
  bool passed = false;
};

/// Findings are `claim-id: note` strings.
struct VerificationReport {
  std::string task;
  Status status = Status::pass;
  std::vector<Claim> claims;
  std::vector<std::string> findings;
  long runtime_ms = 0;

  /// fail if any claim fails, else flagged if there are findings, else pass.
  void update_status();
  /// Whether a finding is attached to the claim.
  bool flagged(const Claim& c) const;
};

/// Runs one task. Exceptions from the engine (including an exhausted step
/// budget) become a failing diagnostic claim. `all` runs every task
/// concurrently and concatenates the reports in kAtomicTasks order.
VerificationReport run_task(TaskId id, const TaskParameters& params);

/// The generic-injectivity pipeline over draws random_section_set(seed + i,
/// bound) for i < n. Throws std::invalid_argument when n < 1.
VerificationReport sample_campaign(int n, std::uint64_t seed, int bound, double threshold = 0.9);

/// Process exit code for a report: 0 for pass or flagged, 1 for fail.
int exit_code(const VerificationReport& r);

/// {"task","status","claims":[{"id","expected","actual","provenance",
/// "witnesses","passed"}],"findings","runtime_ms"}.
Json to_json(const VerificationReport& r);
/// Inverse of to_json; throws std::invalid_argument on schema violations.
VerificationReport report_from_json(const Json& j);

std::string render_json(const VerificationReport& r);
/// One line per claim marked with ✓ (pass), ✗ (fail) or ⚑ (pass with a
/// finding), followed by the findings.
std::string render_text(const VerificationReport& r);

}  // namespace tgr
