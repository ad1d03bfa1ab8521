#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridra/grid_model.hpp"
#include "gridra/qos_dispatch.hpp"

namespace gridra {

struct NamedScheme {
  std::string label;
  QosScheme scheme;
};

/// Parses one QoS spec: "reliable", "partial:<fraction>", or
/// "flex[:cap=<fraction>]" (a cap suffix is accepted on partial too).
NamedScheme parse_qos_spec(const std::string& spec);
std::vector<NamedScheme> parse_qos_list(const std::string& comma_separated);
std::vector<NamedScheme> default_qos_list();

struct LimitCell {
  double annual_limit_mw = 0.0;
  double committed_limit_mw = 0.0;
  double demand_mw = 0.0;
  double surplus_mw = 0.0;  // committed + existing DC - demand
  bool infeasible_at_zero = false;
  bool bound_limited = false;
};

struct SchemeReport {
  std::string label;
  QosScheme scheme;
  std::map<int, LimitCell> years;
  std::optional<int> first_shortage_year;  // demand > existing + committed
};

struct OutageReport {
  int year = 0;
  std::string scheme_label;
  double new_dc_mw = 0.0;
  std::vector<double> daily_fractions;
  double total_outage_hours = 0.0;
  double outage_rate = 0.0;             // fraction of the year
  double availability_pct = 0.0;        // time base
  double shed_energy_mwh = 0.0;
  double energy_availability_pct = 0.0; // energy base
  double grid_lole_hours = 0.0;
  int trace_year = 0;                   // calendar used for day labels
  int interval_minutes = 60;
};

struct ReportBundle {
  std::string grid_name;
  double lole_standard_hours = 8.0;
  bool lole_standard_defaulted = false;
  std::vector<SchemeReport> schemes;
  DemandProjection demand;
  std::optional<OutageReport> outage;
  std::size_t nondc_clamped_intervals = 0;
  std::vector<std::string> notes;
};

struct RunManifest {
  std::string command;
  std::string scenario_path;
  std::vector<std::string> overrides;
  std::string tool_version;
  std::uint64_t input_digest = 0;
};

/// Evaluates annual and committed limits for every (year, scheme) cell, the
/// demand projection, per-scheme first shortage year, and — when the least
/// reliable scheme is not fully reliable — the final-year outage picture at
/// demand-meeting new DC capacity. Cells are independent; `jobs` > 1 spreads
/// years across threads without changing any output.
ReportBundle run_limits(const GridScenario& scenario,
                        const std::vector<NamedScheme>& qos_list, YearRange years,
                        unsigned jobs = 1);

/// Daily shed fractions plus summary statistics for one (year, scheme, MW)
/// cell.
OutageReport run_outage_report(const GridScenario& scenario, int year,
                               double new_dc_mw, const NamedScheme& qos);

// Emission. Fixed ordering and fixed formatting (MW to 2 decimals,
// percentages to 1) keep byte-identical outputs for identical inputs.
void write_limits_csv(std::ostream& out, const ReportBundle& bundle);
void write_demand_csv(std::ostream& out, const ReportBundle& bundle);
void write_daily_outage_csv(std::ostream& out, const OutageReport& outage);
void write_summary_json(std::ostream& out, const ReportBundle& bundle);
void write_manifest_json(std::ostream& out, const RunManifest& manifest);

std::string digest_hex(std::uint64_t digest);

}  // namespace gridra
