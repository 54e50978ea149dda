#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano10/report.hpp"
#include "fano10/serialize.hpp"

namespace fano10::driver {

struct RunOptions {
  std::uint64_t seed = 0;
  int samples = 20;
  bool strict = false;
};

struct ScenarioInfo {
  std::string name;
  /// Catalog family: schubert, fourfold, lines, conics or node.
  std::string family;
  std::string module;
  std::string description;
  bool sampled = false;
  std::function<ScenarioReport(const RunOptions&)> run;

  /// {"name", "family", "module", "description", "parameters"}.
  Json descriptor(const RunOptions& opts) const;
};

class UnknownScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GoldenFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted by name.
const std::vector<ScenarioInfo>& scenario_catalog();
/// Throws UnknownScenarioError.
const ScenarioInfo& find_scenario(const std::string& name);

/// {"version": 1, "scenarios": {name: {step: {"anchor": ..., "expected": ...}}}}
class GoldenFile {
 public:
  GoldenFile() = default;
  explicit GoldenFile(Json data);
  /// Throws GoldenFileError if the file is missing or malformed.
  static GoldenFile load(const std::filesystem::path& path);

  int version() const { return version_; }
  /// nullptr when the scenario has no golden entries.
  const Json* entries(const std::string& scenario) const;

 private:
  int version_ = 1;
  Json scenarios_ = Json::object();
};

/// $FANO10_GOLDEN_PATH if set, otherwise the data file of the source tree.
std::filesystem::path golden_path();

/// Replaces the built-in expectation of every step that has a golden entry,
/// re-evaluates it, and adds a failing step for golden entries the scenario
/// did not produce.
void apply_golden(ScenarioReport& report, const GoldenFile& golden);

/// Runs one scenario; exceptions escaping the computation become a failing
/// "exception" step.
ScenarioReport run_scenario(const ScenarioInfo& info, const RunOptions& opts, const GoldenFile* golden);

/// Runs the named scenarios (all when empty), concurrently when `parallel`;
/// the result is ordered by scenario name either way.
std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, const RunOptions& opts,
                                          const GoldenFile* golden, bool parallel);

/// 0 if every report passes (partial allowed unless strict), 1 otherwise.
int exit_status(const std::vector<ScenarioReport>& reports, bool strict);

/// {"reports": [...], "summary": {...}}.
Json reports_to_json(const std::vector<ScenarioReport>& reports, bool strict);
std::string reports_to_text(const std::vector<ScenarioReport>& reports, bool strict);
std::string catalog_to_text();
Json catalog_to_json();

}  // namespace fano10::driver
