// gridra: grid resource-adequacy simulator CLI.
//
// Subcommands: assess (LOLE for a given DC block), limit (capacity limits
// across QoS schemes), project (demand models), outage (daily shed
// fractions), report (full bundle), gen-trace (materialize a scenario's
// synthetic traces as CSV).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridra/adequacy.hpp"
#include "gridra/report.hpp"
#include "gridra/scenario.hpp"
#include "gridra/synthetic.hpp"
#include "gridra/version.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string scenario_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::string format = "csv";
  std::string model;  // "", "exp", "exponential", "linear"
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_model = true) {
  cmd->add_option("--scenario", opts.scenario_path, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--override", opts.overrides,
                  "Dotted-path override, e.g. derating.storage=0.0 (repeatable)");
  cmd->add_option("--out", opts.out_dir, "Directory for emitted files");
  cmd->add_option("--format", opts.format, "Stdout format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_model) {
    cmd->add_option("--model", opts.model, "Demand model: exp or linear")
        ->check(CLI::IsMember({"exp", "exponential", "linear"}));
  }
}

std::vector<gridra::ScenarioOverride> build_overrides(const CommonOptions& opts) {
  std::vector<gridra::ScenarioOverride> overrides;
  for (const std::string& item : opts.overrides) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--override", "expected key.path=value, got " + item);
    }
    overrides.push_back({item.substr(0, eq), item.substr(eq + 1)});
  }
  if (!opts.model.empty()) {
    overrides.push_back(
        {"demand.model", opts.model == "exp" ? "exponential" : opts.model});
  }
  return overrides;
}

gridra::YearRange resolve_years(const gridra::GridScenario& scenario,
                                const std::string& years_flag) {
  if (years_flag.empty()) {
    return {scenario.first_year(), scenario.last_year()};
  }
  try {
    const std::size_t dots = years_flag.find("..");
    if (dots == std::string::npos) {
      const int year = std::stoi(years_flag);
      return {year, year};
    }
    return {std::stoi(years_flag.substr(0, dots)),
            std::stoi(years_flag.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::runtime_error("--years expects <year> or <a>..<b>, got \"" +
                             years_flag + "\"");
  }
}

std::ofstream open_out_file(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

gridra::RunManifest make_manifest(const std::string& command, const CommonOptions& opts,
                                  const gridra::LoadedScenario& loaded) {
  gridra::RunManifest manifest;
  manifest.command = command;
  manifest.scenario_path = opts.scenario_path;
  manifest.overrides = opts.overrides;
  if (!opts.model.empty()) {
    manifest.overrides.push_back("demand.model=" + opts.model);
  }
  manifest.tool_version = gridra::kVersion;
  manifest.input_digest = loaded.input_digest;
  return manifest;
}

int run_assess(const CommonOptions& opts, int year, double dc_mw) {
  const auto loaded = gridra::load_scenario(opts.scenario_path, build_overrides(opts));
  const gridra::AdequacyInputs inputs = gridra::year_inputs(loaded.scenario, year);
  const gridra::AdequacyResult result = gridra::assess(inputs, dc_mw);

  nlohmann::json doc;
  doc["grid"] = loaded.scenario.name;
  doc["year"] = year;
  doc["dc_mw"] = dc_mw;
  doc["lole_hours"] = result.lole_hours;
  doc["shortage_intervals"] = result.shortage_intervals;
  doc["lole_standard_hours"] = loaded.scenario.lole_standard_hours;
  doc["meets_standard"] = result.meets(loaded.scenario.lole_standard_hours);
  const std::string text = doc.dump(2) + "\n";
  if (!opts.out_dir.empty()) {
    open_out_file(opts.out_dir, "assess.json") << text;
  }
  std::cout << text;
  return 0;
}

int run_limit_or_report(const std::string& command, const CommonOptions& opts,
                        const std::string& years_flag, const std::string& qos_flag) {
  const auto loaded = gridra::load_scenario(opts.scenario_path, build_overrides(opts));
  const auto qos_list = qos_flag.empty() ? gridra::default_qos_list()
                                         : gridra::parse_qos_list(qos_flag);
  const gridra::YearRange years = resolve_years(loaded.scenario, years_flag);

  gridra::ReportBundle bundle =
      gridra::run_limits(loaded.scenario, qos_list, years, opts.jobs);
  bundle.notes = loaded.notes;
  bundle.lole_standard_defaulted = loaded.lole_standard_defaulted;

  if (!opts.out_dir.empty()) {
    std::ofstream limits = open_out_file(opts.out_dir, "limits.csv");
    gridra::write_limits_csv(limits, bundle);
    if (command == "report") {
      std::ofstream demand = open_out_file(opts.out_dir, "demand.csv");
      gridra::write_demand_csv(demand, bundle);
      if (bundle.outage) {
        std::ofstream daily = open_out_file(opts.out_dir, "daily_outage.csv");
        gridra::write_daily_outage_csv(daily, *bundle.outage);
      }
    }
    std::ofstream summary = open_out_file(opts.out_dir, "summary.json");
    gridra::write_summary_json(summary, bundle);
    std::ofstream manifest_out = open_out_file(opts.out_dir, "manifest.json");
    gridra::write_manifest_json(manifest_out, make_manifest(command, opts, loaded));
  } else if (opts.format == "json") {
    gridra::write_summary_json(std::cout, bundle);
  } else {
    gridra::write_limits_csv(std::cout, bundle);
  }
  return 0;
}

int run_project(const CommonOptions& opts, const std::string& years_flag) {
  const auto loaded = gridra::load_scenario(opts.scenario_path, build_overrides(opts));
  const gridra::YearRange years = resolve_years(loaded.scenario, years_flag);
  gridra::ReportBundle bundle;
  bundle.grid_name = loaded.scenario.name;
  bundle.demand = gridra::project_demand(loaded.scenario.demand, years);
  if (!opts.out_dir.empty()) {
    std::ofstream demand = open_out_file(opts.out_dir, "demand.csv");
    gridra::write_demand_csv(demand, bundle);
  } else {
    gridra::write_demand_csv(std::cout, bundle);
  }
  return 0;
}

int run_outage(const CommonOptions& opts, int year, double new_dc_mw,
               const std::string& qos_flag) {
  const auto loaded = gridra::load_scenario(opts.scenario_path, build_overrides(opts));
  const gridra::NamedScheme qos = gridra::parse_qos_spec(qos_flag);
  const gridra::OutageReport report =
      gridra::run_outage_report(loaded.scenario, year, new_dc_mw, qos);

  nlohmann::json doc;
  doc["grid"] = loaded.scenario.name;
  doc["year"] = report.year;
  doc["scheme"] = report.scheme_label;
  doc["new_dc_mw"] = report.new_dc_mw;
  doc["total_outage_hours"] = report.total_outage_hours;
  doc["outage_rate_pct"] = std::round(1000.0 * report.outage_rate) / 10.0;
  doc["availability_pct"] = std::round(10.0 * report.availability_pct) / 10.0;
  doc["shed_energy_mwh"] = std::round(100.0 * report.shed_energy_mwh) / 100.0;
  doc["energy_availability_pct"] =
      std::round(10.0 * report.energy_availability_pct) / 10.0;
  doc["grid_lole_hours"] = report.grid_lole_hours;

  if (!opts.out_dir.empty()) {
    std::ofstream daily = open_out_file(opts.out_dir, "daily_outage.csv");
    gridra::write_daily_outage_csv(daily, report);
    open_out_file(opts.out_dir, "outage_summary.json") << doc.dump(2) << "\n";
  }
  if (opts.format == "json" || opts.out_dir.empty()) {
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int run_gen_trace(const CommonOptions& opts, const std::string& out_file) {
  const auto loaded = gridra::load_scenario(opts.scenario_path, build_overrides(opts));
  if (!loaded.synthetic) {
    throw std::runtime_error(
        "scenario reads traces from a CSV file; nothing to generate");
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + out_file);
  }
  const gridra::BaseYearTraces& base = loaded.scenario.base;
  gridra::write_trace_csv(out, base.total_load, base.wind_gen, base.solar_gen);
  std::cerr << "wrote " << base.total_load.size() << " rows to " << out_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid resource-adequacy simulator"};
  app.set_version_flag("--version", std::string("gridra ") + gridra::kVersion);
  app.require_subcommand(1);

  CommonOptions opts;
  std::string years_flag;
  std::string qos_flag;
  int year = 0;
  double dc_mw = 0.0;
  double new_dc_mw = 0.0;
  std::string out_file;

  CLI::App* assess_cmd =
      app.add_subcommand("assess", "LOLE for a given flat datacenter load");
  add_common(assess_cmd, opts, false);
  assess_cmd->add_option("--year", year, "Plan year")->required();
  assess_cmd->add_option("--dc-mw", dc_mw, "Total flat DC load in MW")->required();

  CLI::App* limit_cmd =
      app.add_subcommand("limit", "Annual and committed DC capacity limits per QoS");
  add_common(limit_cmd, opts);
  limit_cmd->add_option("--years", years_flag, "Year range a..b (default: plan range)");
  limit_cmd->add_option("--qos", qos_flag,
                        "Comma list: reliable, partial:<f>, flex[:cap=<f>]");
  limit_cmd->add_option("--jobs", opts.jobs, "Worker threads (output-invariant)");

  CLI::App* project_cmd = app.add_subcommand("project", "Datacenter demand projection");
  add_common(project_cmd, opts);
  project_cmd->add_option("--years", years_flag, "Year range a..b");

  CLI::App* outage_cmd =
      app.add_subcommand("outage", "Daily outage fractions for one year and scheme");
  add_common(outage_cmd, opts, false);
  outage_cmd->add_option("--year", year, "Plan year")->required();
  outage_cmd->add_option("--new-dc-mw", new_dc_mw, "New DC block in MW")->required();
  outage_cmd->add_option("--qos", qos_flag, "QoS spec")->required();

  CLI::App* report_cmd =
      app.add_subcommand("report", "Full bundle: limits, demand, outage, summary");
  add_common(report_cmd, opts);
  report_cmd->add_option("--years", years_flag, "Year range a..b (default: plan range)");
  report_cmd->add_option("--qos", qos_flag,
                         "Comma list: reliable, partial:<f>, flex[:cap=<f>]");
  report_cmd->add_option("--jobs", opts.jobs, "Worker threads (output-invariant)");

  CLI::App* gen_cmd =
      app.add_subcommand("gen-trace", "Write the scenario's synthetic traces as CSV");
  add_common(gen_cmd, opts, false);
  gen_cmd->add_option("--out-file", out_file, "Destination CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (assess_cmd->parsed()) return run_assess(opts, year, dc_mw);
    if (limit_cmd->parsed()) return run_limit_or_report("limit", opts, years_flag, qos_flag);
    if (project_cmd->parsed()) return run_project(opts, years_flag);
    if (outage_cmd->parsed()) return run_outage(opts, year, new_dc_mw, qos_flag);
    if (report_cmd->parsed())
      return run_limit_or_report("report", opts, years_flag, qos_flag);
    if (gen_cmd->parsed()) return run_gen_trace(opts, out_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
