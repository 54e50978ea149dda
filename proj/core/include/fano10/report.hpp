#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano10/serialize.hpp"

namespace fano10 {

enum class StepStatus { pass, fail, unverified };
enum class ReportStatus { pass, fail, partial };

std::string to_string(StepStatus s);
std::string to_string(ReportStatus s);

struct ReportStep {
  std::string step;
  /// Formula the expected value refers to.
  std::string anchor;
  Json expected;
  Json computed;
  StepStatus status = StepStatus::pass;
  std::string note;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<ReportStep> steps;
  std::vector<std::string> notes;
  /// Intermediate tables keyed by name.
  Json tables = Json::object();
  std::uint64_t seed = 0;

  /// fail if any step fails, partial if some step is unverified, pass otherwise.
  ReportStatus status() const;
  /// Adds a step that passes iff expected == computed.
  ReportStep& check(std::string step, std::string anchor, Json expected, Json computed, std::string note = {});
  /// Adds an informational step that is neither pass nor fail.
  ReportStep& record(std::string step, std::string anchor, Json computed, std::string note);
  const ReportStep* find(const std::string& step) const;
};

Json report_to_json(const ScenarioReport& r);
ScenarioReport report_from_json(const Json& j);
std::string report_to_text(const ScenarioReport& r);

/// Throws VerificationFailure naming the first failing step.
void require_pass(const ScenarioReport& r);

}  // namespace fano10
