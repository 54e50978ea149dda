#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "fano10/driver/driver.hpp"

namespace {

using namespace fano10::driver;

constexpr int kUsageError = 2;

struct Settings {
  RunOptions run;
  std::string format = "text";
  bool parallel = false;
  std::vector<std::string> scenarios;
};

void add_run_options(CLI::App& cmd, Settings& s) {
  cmd.add_option("--seed", s.run.seed, "seed for sampled scenarios")->capture_default_str();
  cmd.add_option("--samples", s.run.samples, "sample count for sampled scenarios")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  cmd.add_flag("--strict", s.run.strict, "treat partial reports as failures");
  cmd.add_flag("--parallel", s.parallel, "run scenarios concurrently");
}

int execute(const Settings& s, const std::vector<std::string>& names) {
  GoldenFile golden;
  try {
    golden = GoldenFile::load(golden_path());
  } catch (const GoldenFileError& e) {
    std::cerr << "fano10: " << e.what() << '\n';
    return kUsageError;
  }
  std::vector<fano10::ScenarioReport> reports;
  try {
    reports = run_scenarios(names, s.run, &golden, s.parallel);
  } catch (const UnknownScenarioError& e) {
    std::cerr << "fano10: " << e.what() << " (see 'fano10 list')\n";
    return kUsageError;
  }
  if (s.format == "json") {
    std::cout << reports_to_json(reports, s.run.strict).dump(2) << '\n';
  } else {
    std::cout << reports_to_text(reports, s.run.strict);
  }
  return exit_status(reports, s.run.strict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the coordinate models of a prime Fano threefold of genus 6", "fano10"};
  app.require_subcommand(1);
  Settings settings;

  auto* run = app.add_subcommand("run", "run the named scenarios");
  run->add_option("scenario", settings.scenarios, "scenario names")->required();
  add_run_options(*run, settings);

  auto* all = app.add_subcommand("report-all", "run every registered scenario");
  add_run_options(*all, settings);

  auto* list = app.add_subcommand("list", "print the scenario catalog");
  list->add_option("--format", settings.format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (list->parsed()) {
    if (settings.format == "json") {
      std::cout << catalog_to_json().dump(2) << '\n';
    } else {
      std::cout << catalog_to_text();
    }
    return 0;
  }
  if (run->parsed()) return execute(settings, settings.scenarios);
  return execute(settings, {});
}
