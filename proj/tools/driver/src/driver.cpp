#include "fano10/driver/driver.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "fano10/birational.hpp"
#include "fano10/driver/fourfold.hpp"
#include "fano10/quadric_nets.hpp"

#ifndef FANO10_DEFAULT_GOLDEN_PATH
#define FANO10_DEFAULT_GOLDEN_PATH "data/golden.json"
#endif

namespace fano10::driver {
namespace {

ScenarioInfo fixed(std::string name, std::string family, std::string module, std::string description,
                   ScenarioReport (*fn)()) {
  return {std::move(name), std::move(family), std::move(module), std::move(description), false,
          [fn](const RunOptions&) { return fn(); }};
}

ScenarioInfo sampled(std::string name, std::string family, std::string module, std::string description,
                     ScenarioReport (*fn)(std::uint64_t, int)) {
  return {std::move(name), std::move(family), std::move(module), std::move(description), true,
          [fn](const RunOptions& o) { return fn(o.seed, o.samples); }};
}

std::vector<ScenarioInfo> build_catalog() {
  std::vector<ScenarioInfo> c{
      fixed("schubert-table", "schubert", "schubert", "sigma_1 powers and cycle degrees in H*(G(2,5))",
            scenario_schubert_table),
      fixed("rank-certificates", "fourfold", "grassmann_w", "ranks of the skew pencil H^(t) and the quadric pencil P_t",
            scenario_rank_certificates),
      fixed("conic-of-centers", "fourfold", "grassmann_w", "kernel conic x(t) of the skew pencil",
            scenario_conic_of_centers),
      fixed("dual-conic", "fourfold", "grassmann_w", "tangent-wedge conic q_o in the rho-plane", scenario_dual_conic),
      sampled("sigma-planes", "fourfold", "grassmann_w", "sigma-planes, the rho-plane and their tangent lines",
              scenario_sigma_planes),
      sampled("aut-w-preserves-p7", "fourfold", "aut_w", "symbolic P^7 preservation, orbit formula, stabilizer",
              scenario_aut_w_preserves_p7),
      sampled("aut-w-closure", "fourfold", "aut_w", "composition laws and closure of Aut0(W)", scenario_aut_w_closure),
      sampled("orbit-stratification", "fourfold", "aut_w", "orbit labels of W and transitivity witnesses",
              scenario_orbit_stratification),
      fixed("line-transform", "lines", "birational_calc", "blow-up, flop and contraction along a line",
            scenario_line_transform),
      fixed("conic-transform", "conics", "birational_calc", "blow-up, flop and contraction along a conic",
            scenario_conic_transform),
      sampled("node-projection", "node", "quadric_nets", "projection from a node: degrees, pencil and sampled nets",
              node_projection_scenario),
      fixed("pfaffian-pencil", "node", "quadric_nets", "the Pfaffian pencil P_t and its vertex cubic",
            scenario_pfaffian_pencil),
      sampled("determinantal-split", "node", "quadric_nets", "septic = Pfaffian line + sextic on sampled nets",
              scenario_determinantal_split),
  };
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return c;
}

void add_failure(ScenarioReport& r, std::string step, std::string anchor, Json expected, std::string note) {
  ReportStep& s = r.check(std::move(step), std::move(anchor), std::move(expected), Json(), std::move(note));
  s.status = StepStatus::fail;
}

}  // namespace

Json ScenarioInfo::descriptor(const RunOptions& opts) const {
  Json params = Json::object();
  if (sampled) params = Json{{"seed", opts.seed}, {"samples", opts.samples}};
  return Json{{"name", name}, {"family", family}, {"module", module}, {"description", description}, {"parameters", params}};
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = build_catalog();
  return catalog;
}

const ScenarioInfo& find_scenario(const std::string& name) {
  for (const auto& s : scenario_catalog()) {
    if (s.name == name) return s;
  }
  throw UnknownScenarioError("unknown scenario '" + name + "'");
}

GoldenFile::GoldenFile(Json data) {
  if (!data.is_object() || !data.contains("version") || !data["version"].is_number_integer()) {
    throw GoldenFileError("golden file needs an integer \"version\"");
  }
  version_ = data["version"].get<int>();
  if (version_ != 1) throw GoldenFileError("unsupported golden file version " + std::to_string(version_));
  if (!data.contains("scenarios") || !data["scenarios"].is_object()) {
    throw GoldenFileError("golden file needs a \"scenarios\" object");
  }
  for (const auto& [name, steps] : data["scenarios"].items()) {
    if (!steps.is_object()) throw GoldenFileError("golden entries of '" + name + "' must be an object");
    for (const auto& [step, entry] : steps.items()) {
      if (!entry.is_object() || !entry.contains("anchor") || !entry["anchor"].is_string() || !entry.contains("expected")) {
        throw GoldenFileError("golden entry " + name + "/" + step + " needs \"anchor\" and \"expected\"");
      }
    }
  }
  scenarios_ = std::move(data["scenarios"]);
}

GoldenFile GoldenFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GoldenFileError("cannot open golden file " + path.string());
  Json data;
  try {
    data = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw GoldenFileError("malformed golden file " + path.string() + ": " + e.what());
  }
  return GoldenFile(std::move(data));
}

const Json* GoldenFile::entries(const std::string& scenario) const {
  const auto it = scenarios_.find(scenario);
  return it == scenarios_.end() ? nullptr : &*it;
}

std::filesystem::path golden_path() {
  if (const char* env = std::getenv("FANO10_GOLDEN_PATH"); env != nullptr && *env != '\0') return env;
  return FANO10_DEFAULT_GOLDEN_PATH;
}

void apply_golden(ScenarioReport& report, const GoldenFile& golden) {
  const Json* entries = golden.entries(report.scenario);
  std::set<std::string> covered;
  if (entries != nullptr) {
    for (const auto& [step, entry] : entries->items()) {
      covered.insert(step);
      auto it = std::find_if(report.steps.begin(), report.steps.end(), [&](const auto& s) { return s.step == step; });
      if (it == report.steps.end()) {
        add_failure(report, step, entry["anchor"].get<std::string>(), entry["expected"], "golden step not produced");
        continue;
      }
      if (it->status == StepStatus::unverified) continue;
      if (it->expected != entry["expected"]) {
        it->note += std::string(it->note.empty() ? "" : "; ") + "built-in expectation " + it->expected.dump() +
                    " replaced by the golden value";
      }
      it->anchor = entry["anchor"].get<std::string>();
      it->expected = entry["expected"];
      it->status = it->computed == it->expected ? StepStatus::pass : StepStatus::fail;
    }
  }
  std::size_t uncovered = 0;
  for (const auto& s : report.steps) {
    if (s.status != StepStatus::unverified && !covered.count(s.step)) ++uncovered;
  }
  if (uncovered > 0) {
    report.notes.push_back(std::to_string(uncovered) + " step(s) checked against built-in expectations only");
  }
}

ScenarioReport run_scenario(const ScenarioInfo& info, const RunOptions& opts, const GoldenFile* golden) {
  ScenarioReport r;
  try {
    r = info.run(opts);
  } catch (const std::exception& e) {
    r = ScenarioReport{};
    r.scenario = info.name;
    add_failure(r, "exception", "scenario completes", true, e.what());
  }
  r.scenario = info.name;
  if (info.sampled) r.seed = opts.seed;
  if (golden != nullptr) apply_golden(r, *golden);
  return r;
}

std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, const RunOptions& opts,
                                          const GoldenFile* golden, bool parallel) {
  std::vector<const ScenarioInfo*> selected;
  if (names.empty()) {
    for (const auto& s : scenario_catalog()) selected.push_back(&s);
  } else {
    for (const auto& n : names) selected.push_back(&find_scenario(n));
  }
  std::sort(selected.begin(), selected.end(), [](auto* a, auto* b) { return a->name < b->name; });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<ScenarioReport> out;
  if (parallel) {
    std::vector<std::future<ScenarioReport>> jobs;
    for (const auto* s : selected) {
      jobs.push_back(std::async(std::launch::async, [s, &opts, golden] { return run_scenario(*s, opts, golden); }));
    }
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (const auto* s : selected) out.push_back(run_scenario(*s, opts, golden));
  }
  return out;
}

int exit_status(const std::vector<ScenarioReport>& reports, bool strict) {
  for (const auto& r : reports) {
    const auto st = r.status();
    if (st == ReportStatus::fail || (strict && st == ReportStatus::partial)) return 1;
  }
  return 0;
}

Json reports_to_json(const std::vector<ScenarioReport>& reports, bool strict) {
  Json arr = Json::array();
  std::size_t pass = 0, fail = 0, partial = 0;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    switch (r.status()) {
      case ReportStatus::pass: ++pass; break;
      case ReportStatus::fail: ++fail; break;
      case ReportStatus::partial: ++partial; break;
    }
  }
  return Json{{"reports", arr},
              {"summary",
               {{"scenarios", reports.size()},
                {"pass", pass},
                {"fail", fail},
                {"partial", partial},
                {"strict", strict},
                {"exit_status", exit_status(reports, strict)}}}};
}

std::string reports_to_text(const std::vector<ScenarioReport>& reports, bool strict) {
  std::ostringstream os;
  for (const auto& r : reports) os << report_to_text(r) << '\n';
  const Json summary = reports_to_json(reports, strict)["summary"];
  os << "summary: " << summary["scenarios"].get<std::size_t>() << " scenario(s), " << summary["pass"].get<std::size_t>()
     << " pass, " << summary["partial"].get<std::size_t>() << " partial, " << summary["fail"].get<std::size_t>()
     << " fail" << (strict ? " (strict)" : "") << '\n';
  return os.str();
}

std::string catalog_to_text() {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& s : scenario_catalog()) width = std::max(width, s.name.size());
  for (const auto& s : scenario_catalog()) {
    os << s.name << std::string(width + 2 - s.name.size(), ' ') << '[' << s.family << "] " << s.description
       << (s.sampled ? " (sampled)" : "") << '\n';
  }
  return os.str();
}

Json catalog_to_json() {
  Json arr = Json::array();
  for (const auto& s : scenario_catalog()) arr.push_back(s.descriptor(RunOptions{}));
  return Json{{"scenarios", arr}};
}

}  // namespace fano10::driver
