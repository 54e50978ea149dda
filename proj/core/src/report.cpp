#include "fano10/report.hpp"

#include <sstream>
#include <stdexcept>

#include "fano10/errors.hpp"

namespace fano10 {

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::pass:
      return "pass";
    case StepStatus::fail:
      return "fail";
    case StepStatus::unverified:
      return "unverified";
  }
  return "fail";
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass:
      return "pass";
    case ReportStatus::fail:
      return "fail";
    case ReportStatus::partial:
      return "partial";
  }
  return "fail";
}

namespace {

StepStatus step_status_from(const std::string& s) {
  if (s == "pass") return StepStatus::pass;
  if (s == "fail") return StepStatus::fail;
  if (s == "unverified") return StepStatus::unverified;
  throw std::invalid_argument("unknown step status '" + s + "'");
}

std::string compact(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

ReportStatus ScenarioReport::status() const {
  bool partial = false;
  for (const auto& s : steps) {
    if (s.status == StepStatus::fail) return ReportStatus::fail;
    if (s.status == StepStatus::unverified) partial = true;
  }
  return partial ? ReportStatus::partial : ReportStatus::pass;
}

ReportStep& ScenarioReport::check(std::string step, std::string anchor, Json expected, Json computed, std::string note) {
  const bool ok = expected == computed;
  steps.push_back(ReportStep{std::move(step), std::move(anchor), std::move(expected), std::move(computed),
                             ok ? StepStatus::pass : StepStatus::fail, std::move(note)});
  return steps.back();
}

ReportStep& ScenarioReport::record(std::string step, std::string anchor, Json computed, std::string note) {
  steps.push_back(ReportStep{std::move(step), std::move(anchor), Json(), std::move(computed), StepStatus::unverified,
                             std::move(note)});
  return steps.back();
}

const ReportStep* ScenarioReport::find(const std::string& step) const {
  for (const auto& s : steps) {
    if (s.step == step) return &s;
  }
  return nullptr;
}

Json report_to_json(const ScenarioReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json j = {{"step", s.step},           {"anchor", s.anchor}, {"expected", s.expected},
              {"computed", s.computed},   {"status", to_string(s.status)}};
    if (!s.note.empty()) j["note"] = s.note;
    steps.push_back(std::move(j));
  }
  return Json{{"scenario", r.scenario}, {"seed", r.seed},     {"status", to_string(r.status())},
              {"steps", steps},         {"notes", r.notes},   {"tables", r.tables}};
}

ScenarioReport report_from_json(const Json& j) {
  ScenarioReport r;
  r.scenario = j.at("scenario").get<std::string>();
  r.seed = j.value("seed", std::uint64_t{0});
  for (const auto& s : j.at("steps")) {
    r.steps.push_back(ReportStep{s.at("step").get<std::string>(), s.at("anchor").get<std::string>(), s.at("expected"),
                                 s.at("computed"), step_status_from(s.at("status").get<std::string>()),
                                 s.value("note", std::string())});
  }
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("tables")) r.tables = j.at("tables");
  return r;
}

std::string report_to_text(const ScenarioReport& r) {
  std::ostringstream os;
  os << r.scenario << ": " << to_string(r.status()) << " (seed " << r.seed << ")\n";
  for (const auto& s : r.steps) {
    os << "  [" << to_string(s.status) << "] " << s.step << "  " << s.anchor << "\n";
    if (s.status != StepStatus::unverified) os << "      expected " << compact(s.expected) << "\n";
    os << "      computed " << compact(s.computed) << "\n";
    if (!s.note.empty()) os << "      note: " << s.note << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

void require_pass(const ScenarioReport& r) {
  for (const auto& s : r.steps) {
    if (s.status == StepStatus::fail) {
      throw VerificationFailure(r.scenario + ": " + s.step + " (" + s.anchor + ") expected " + compact(s.expected) +
                                ", computed " + compact(s.computed));
    }
  }
}

}  // namespace fano10
