#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fano10/driver/driver.hpp"

using namespace fano10;
using namespace fano10::driver;

namespace {

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    setenv(name, value.c_str(), 1);
  }
  ~ScopedEnv() {
    if (old_) {
      setenv(name_, old_->c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

std::filesystem::path write_temp(const std::string& name, const Json& j) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

GoldenFile default_golden() { return GoldenFile::load(FANO10_TEST_GOLDEN_PATH); }

}  // namespace

TEST(Driver, CatalogContents) {
  const auto& c = scenario_catalog();
  EXPECT_GE(c.size(), 10u);
  EXPECT_EQ(find_scenario("line-transform").family, "lines");
  EXPECT_EQ(find_scenario("node-projection").family, "node");
  EXPECT_EQ(find_scenario("conic-transform").family, "conics");
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(c[i - 1].name, c[i].name);
  EXPECT_THROW(find_scenario("nonexistent"), UnknownScenarioError);
  const Json d = find_scenario("determinantal-split").descriptor(RunOptions{7, 3, false});
  EXPECT_EQ(d["parameters"]["seed"], 7);
  EXPECT_EQ(d["parameters"]["samples"], 3);
}

TEST(Driver, SchubertTableHeadline) {
  const auto r = run_scenario(find_scenario("schubert-table"), RunOptions{}, nullptr);
  EXPECT_EQ(r.status(), ReportStatus::pass);
  ASSERT_NE(r.find("sigma1^6"), nullptr);
  EXPECT_EQ(r.find("sigma1^6")->computed, "5*s[3,3]");
}

TEST(Driver, ClosureCarriesDiscrepancyNote) {
  const auto r = run_scenario(find_scenario("aut-w-closure"), RunOptions{}, nullptr);
  EXPECT_EQ(r.status(), ReportStatus::pass);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("composition-law discrepancy") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Driver, AllScenariosAgainstGolden) {
  const auto golden = default_golden();
  const auto reports = run_scenarios({}, RunOptions{}, &golden, false);
  ASSERT_EQ(reports.size(), scenario_catalog().size());
  for (const auto& r : reports) {
    EXPECT_NE(r.status(), ReportStatus::fail) << report_to_text(r);
    EXPECT_NE(golden.entries(r.scenario), nullptr) << r.scenario;
  }
  EXPECT_EQ(run_scenario(find_scenario("conic-transform"), RunOptions{}, &golden).status(), ReportStatus::partial);
  EXPECT_EQ(exit_status(reports, false), 0);
  EXPECT_EQ(exit_status(reports, true), 1);
}

TEST(Driver, DeterministicAndParallelMatchesSequential) {
  const auto golden = default_golden();
  const RunOptions opts{11, 4, false};
  const auto a = reports_to_json(run_scenarios({}, opts, &golden, false), false);
  const auto b = reports_to_json(run_scenarios({}, opts, &golden, false), false);
  const auto c = reports_to_json(run_scenarios({}, opts, &golden, true), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Driver, NamesAreMergedByName) {
  const auto r = run_scenarios({"schubert-table", "dual-conic", "schubert-table"}, RunOptions{}, nullptr, true);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].scenario, "dual-conic");
  EXPECT_EQ(r[1].scenario, "schubert-table");
  EXPECT_THROW(run_scenarios({"nonexistent"}, RunOptions{}, nullptr, false), UnknownScenarioError);
}

TEST(Driver, ReportJsonRoundTrip) {
  for (const auto& r : run_scenarios({}, RunOptions{3, 2, false}, nullptr, false)) {
    const Json j = report_to_json(r);
    const Json back = report_to_json(report_from_json(j));
    EXPECT_EQ(j, back) << r.scenario;
    EXPECT_EQ(Json::parse(j.dump()), j);
  }
}

TEST(Driver, GoldenMismatchFails) {
  Json g = {{"version", 1},
            {"scenarios", {{"schubert-table", {{"sigma1^6", {{"anchor", "sigma_1^6"}, {"expected", "4*s[3,3]"}}}}}}}};
  const GoldenFile golden(g);
  const auto r = run_scenario(find_scenario("schubert-table"), RunOptions{}, &golden);
  EXPECT_EQ(r.status(), ReportStatus::fail);
  EXPECT_EQ(r.find("sigma1^6")->status, StepStatus::fail);
  EXPECT_EQ(r.find("sigma1^6")->anchor, "sigma_1^6");
}

TEST(Driver, GoldenMissingStepFails) {
  GoldenFile g(Json{{"version", 1},
                    {"scenarios", {{"dual-conic", {{"no-such-step", {{"anchor", "x"}, {"expected", 1}}}}}}}});
  const auto r = run_scenario(find_scenario("dual-conic"), RunOptions{}, &g);
  EXPECT_EQ(r.status(), ReportStatus::fail);
  ASSERT_NE(r.find("no-such-step"), nullptr);
}

TEST(Driver, GoldenValidation) {
  EXPECT_THROW(GoldenFile(Json{{"scenarios", Json::object()}}), GoldenFileError);
  EXPECT_THROW(GoldenFile(Json{{"version", 2}, {"scenarios", Json::object()}}), GoldenFileError);
  EXPECT_THROW(GoldenFile(Json{{"version", 1}, {"scenarios", {{"a", {{"s", {{"expected", 1}}}}}}}}), GoldenFileError);
  EXPECT_THROW(GoldenFile::load("/nonexistent/golden.json"), GoldenFileError);
}

TEST(Driver, GoldenPathEnvironmentOverride) {
  const Json g = {{"version", 1}, {"scenarios", {{"schubert-table", {{"degree X", {{"anchor", "deg X"}, {"expected", 11}}}}}}}};
  const auto path = write_temp("fano10_golden_override.json", g);
  ScopedEnv env("FANO10_GOLDEN_PATH", path.string());
  EXPECT_EQ(golden_path(), path);
  const auto golden = GoldenFile::load(golden_path());
  EXPECT_EQ(run_scenario(find_scenario("schubert-table"), RunOptions{}, &golden).status(), ReportStatus::fail);
  std::filesystem::remove(path);
}

TEST(Driver, SampleCountsFollowOptions) {
  const auto golden = default_golden();
  for (int samples : {0, 1, 5}) {
    const auto r = run_scenario(find_scenario("determinantal-split"), RunOptions{2, samples, false}, &golden);
    EXPECT_EQ(r.status(), ReportStatus::pass) << samples;
    EXPECT_EQ(r.tables["samples"].size(), static_cast<std::size_t>(samples));
    EXPECT_EQ(r.seed, 2u);
  }
}
