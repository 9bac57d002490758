// verify <task-id> [--samples N] [--seed S] [--bound B] [--degrees LO..HI]
//        [--format json|text] [--output PATH] [--omit-timing]
//
// Exit codes: 0 pass or flagged, 1 fail, 2 usage error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "tgr/verify.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kIo = 3;

bool parse_degrees(const std::string& text, tgr::TaskParameters& p) {
  static const std::regex kRange(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, kRange)) return false;
  p.degree_lo = std::stoi(m[1]);
  p.degree_hi = std::stoi(m[2]);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the wedge-cubic map P^2 -> Gr(2, 4) in P^5"};
  app.name("verify");

  std::string task;
  std::string degrees = "3..7";
  std::string format = "json";
  std::string output;
  bool omit_timing = false;
  tgr::TaskParameters params;

  app.add_option("task", task, "lemma1 | lemma3 | lemma5 | thm1 | hilb | all")->required();
  app.add_option("--samples", params.samples, "draws in the sampling campaign")->capture_default_str();
  app.add_option("--seed", params.seed, "64-bit seed for every random choice")->capture_default_str();
  app.add_option("--bound", params.bound, "coefficient bound for random draws")->capture_default_str();
  app.add_option("--degrees", degrees, "degree range LO..HI for Hilbert samples")->capture_default_str();
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--output", output, "write the report here instead of standard output");
  app.add_flag("--omit-timing", omit_timing, "report runtime_ms as 0 so reruns are byte-identical");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto id = tgr::parse_task_id(task);
  if (!id) {
    std::cerr << "verify: unknown task id '" << task << "'\n";
    return kUsage;
  }
  if (!parse_degrees(degrees, params)) {
    std::cerr << "verify: --degrees must look like LO..HI, got '" << degrees << "'\n";
    return kUsage;
  }
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kUsage;
  }

  tgr::VerificationReport report = tgr::run_task(*id, params);
  if (omit_timing) report.runtime_ms = 0;
  const std::string text = format == "json" ? tgr::render_json(report) : tgr::render_text(report);

  if (output.empty()) {
    std::cout << text << std::flush;
    if (!std::cout) {
      std::cerr << "verify: failed writing to standard output\n";
      return kIo;
    }
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      std::cerr << "verify: cannot open '" << output << "' for writing\n";
      return kIo;
    }
    file << text;
    file.close();
    if (!file) {
      std::cerr << "verify: failed writing '" << output << "'\n";
      return kIo;
    }
  }
  return tgr::exit_code(report);
}
