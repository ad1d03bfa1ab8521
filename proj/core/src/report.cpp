#include "gridra/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "gridra/calendar.hpp"

namespace gridra {

namespace {

double parse_fraction(const std::string& text, const std::string& context) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad fraction in QoS spec \"" + context + "\"");
  }
  if (consumed != text.size() || !(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("fraction out of [0,1] in QoS spec \"" + context + "\"");
  }
  return value;
}

std::string format_mw(double mw) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", mw);
  return buf;
}

std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", pct);
  return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }
double round1(double v) { return std::round(v * 10.0) / 10.0; }

}  // namespace

NamedScheme parse_qos_spec(const std::string& spec) {
  NamedScheme named;
  named.label = spec;
  std::string rest = spec;
  std::optional<double> cap;
  if (const std::size_t cap_pos = rest.find(":cap="); cap_pos != std::string::npos) {
    cap = parse_fraction(rest.substr(cap_pos + 5), spec);
    rest = rest.substr(0, cap_pos);
  }
  if (rest == "reliable") {
    named.scheme.guaranteed_fraction = 1.0;
  } else if (rest == "flex") {
    named.scheme.guaranteed_fraction = 0.0;
  } else if (rest.rfind("partial:", 0) == 0) {
    named.scheme.guaranteed_fraction = parse_fraction(rest.substr(8), spec);
  } else {
    throw std::invalid_argument(
        "QoS spec must be reliable, partial:<f>, or flex[:cap=<f>]; got \"" + spec +
        "\"");
  }
  named.scheme.outage_cap_fraction = cap;
  named.scheme.validate();
  return named;
}

std::vector<NamedScheme> parse_qos_list(const std::string& comma_separated) {
  std::vector<NamedScheme> list;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const std::size_t comma = comma_separated.find(',', start);
    const std::string item = comma_separated.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) list.push_back(parse_qos_spec(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (list.empty()) {
    throw std::invalid_argument("empty QoS list");
  }
  return list;
}

std::vector<NamedScheme> default_qos_list() {
  return parse_qos_list("reliable,partial:0.8,flex:cap=0.01");
}

namespace {

struct YearEvaluation {
  int year = 0;
  std::vector<QosLimit> limits;  // one per scheme, qos_list order
  std::size_t clamped = 0;
  std::string error;             // non-empty when the year failed
};

YearEvaluation evaluate_year(const GridScenario& scenario,
                             const std::vector<NamedScheme>& qos_list, int year) {
  YearEvaluation eval;
  eval.year = year;
  try {
    const AdequacyInputs inputs = year_inputs(scenario, year);
    eval.clamped = inputs.nondc_clamped_intervals;
    eval.limits.reserve(qos_list.size());
    for (const NamedScheme& named : qos_list) {
      eval.limits.push_back(qos_limit(inputs, scenario.dc_base_mw, named.scheme));
    }
  } catch (const std::exception& e) {
    eval.error = "(" + scenario.name + ", " + std::to_string(year) + "): " + e.what();
  }
  return eval;
}

}  // namespace

ReportBundle run_limits(const GridScenario& scenario,
                        const std::vector<NamedScheme>& qos_list, YearRange years,
                        unsigned jobs) {
  scenario.validate();
  if (qos_list.empty()) throw std::invalid_argument("empty QoS list");
  if (years.first < scenario.first_year() || years.last > scenario.last_year() ||
      years.first > years.last) {
    throw std::out_of_range("requested years " + std::to_string(years.first) + ".." +
                            std::to_string(years.last) + " outside plan range " +
                            std::to_string(scenario.first_year()) + ".." +
                            std::to_string(scenario.last_year()));
  }

  const int n_years = years.last - years.first + 1;
  std::vector<YearEvaluation> evaluations(static_cast<std::size_t>(n_years));
  if (jobs <= 1) {
    for (int i = 0; i < n_years; ++i) {
      evaluations[static_cast<std::size_t>(i)] =
          evaluate_year(scenario, qos_list, years.first + i);
    }
  } else {
    // Years are independent; batch them across `jobs` workers. Results land
    // in a fixed slot per year, so the batching never shows in the output.
    std::vector<std::future<void>> workers;
    std::atomic<int> next{0};
    const unsigned worker_count = std::min<unsigned>(jobs, static_cast<unsigned>(n_years));
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.push_back(std::async(std::launch::async, [&]() {
        for (int i = next.fetch_add(1); i < n_years; i = next.fetch_add(1)) {
          evaluations[static_cast<std::size_t>(i)] =
              evaluate_year(scenario, qos_list, years.first + i);
        }
      }));
    }
    for (auto& worker : workers) worker.get();
  }

  // Every failing (grid, year) pair is reported, not just the first.
  std::string failures;
  for (const auto& eval : evaluations) {
    if (!eval.error.empty()) {
      failures += failures.empty() ? eval.error : "; " + eval.error;
    }
  }
  if (!failures.empty()) {
    throw std::runtime_error("failed cells: " + failures);
  }

  ReportBundle bundle;
  bundle.grid_name = scenario.name;
  bundle.lole_standard_hours = scenario.lole_standard_hours;
  bundle.demand = project_demand(scenario.demand, years);
  for (const auto& eval : evaluations) bundle.nondc_clamped_intervals += eval.clamped;

  for (std::size_t s = 0; s < qos_list.size(); ++s) {
    SchemeReport scheme_report;
    scheme_report.label = qos_list[s].label;
    scheme_report.scheme = qos_list[s].scheme;

    std::map<int, double> annual;
    for (const auto& eval : evaluations) {
      annual[eval.year] = eval.limits[s].new_dc_mw;
    }
    const std::map<int, double> committed = committed_limits(annual);

    for (const auto& eval : evaluations) {
      LimitCell cell;
      cell.annual_limit_mw = eval.limits[s].new_dc_mw;
      cell.committed_limit_mw = committed.at(eval.year);
      cell.demand_mw = bundle.demand.at(eval.year);
      cell.surplus_mw = cell.committed_limit_mw + scenario.dc_base_mw - cell.demand_mw;
      cell.infeasible_at_zero = eval.limits[s].infeasible_at_zero;
      cell.bound_limited = eval.limits[s].bound_limited;
      scheme_report.years[eval.year] = cell;
      if (!scheme_report.first_shortage_year && cell.surplus_mw < 0.0) {
        scheme_report.first_shortage_year = eval.year;
      }
    }
    bundle.schemes.push_back(std::move(scheme_report));
  }

  // Outage picture for the least reliable scheme in its worst framing: the
  // final year, with new DC sized to meet the projected demand.
  const auto least_reliable = std::min_element(
      qos_list.begin(), qos_list.end(), [](const NamedScheme& a, const NamedScheme& b) {
        return a.scheme.guaranteed_fraction < b.scheme.guaranteed_fraction;
      });
  if (least_reliable != qos_list.end() && !least_reliable->scheme.is_reliable()) {
    const double new_dc =
        std::max(0.0, bundle.demand.at(years.last) - scenario.dc_base_mw);
    bundle.outage = run_outage_report(scenario, years.last, new_dc, *least_reliable);
  }
  return bundle;
}

OutageReport run_outage_report(const GridScenario& scenario, int year, double new_dc_mw,
                               const NamedScheme& qos) {
  const AdequacyInputs inputs = year_inputs(scenario, year);
  const DispatchResult result = dispatch(inputs, scenario.dc_base_mw, new_dc_mw, qos.scheme);

  OutageReport report;
  report.year = year;
  report.scheme_label = qos.label;
  report.new_dc_mw = new_dc_mw;
  report.daily_fractions = daily_outage_fractions(result, inputs);
  report.total_outage_hours = result.outage_hours;
  report.outage_rate = outage_rate(result, inputs);
  report.availability_pct = 100.0 * (1.0 - report.outage_rate);
  report.shed_energy_mwh = result.shed_energy_mwh;
  const double flexible_mw = (1.0 - qos.scheme.guaranteed_fraction) * new_dc_mw;
  const double flexible_energy = flexible_mw * inputs.hours_covered();
  report.energy_availability_pct =
      flexible_energy > 0.0
          ? 100.0 * (1.0 - result.shed_energy_mwh / flexible_energy)
          : 100.0;
  report.grid_lole_hours = result.grid_lole_hours;
  report.trace_year = inputs.nondc_load.year;
  report.interval_minutes = inputs.interval_minutes;
  return report;
}

void write_limits_csv(std::ostream& out, const ReportBundle& bundle) {
  out << "grid,scheme,year,annual_limit_mw,committed_limit_mw,demand_mw,surplus_mw,flags\n";
  for (const SchemeReport& scheme : bundle.schemes) {
    for (const auto& [year, cell] : scheme.years) {
      std::string flags;
      if (cell.infeasible_at_zero) flags = "infeasible_at_zero";
      if (cell.bound_limited) flags += flags.empty() ? "bound_limited" : ";bound_limited";
      out << bundle.grid_name << ',' << scheme.label << ',' << year << ','
          << format_mw(cell.annual_limit_mw) << ',' << format_mw(cell.committed_limit_mw)
          << ',' << format_mw(cell.demand_mw) << ',' << format_mw(cell.surplus_mw) << ','
          << flags << '\n';
    }
  }
}

void write_demand_csv(std::ostream& out, const ReportBundle& bundle) {
  out << "grid,model,year,demand_mw\n";
  for (const auto& [year, mw] : bundle.demand.demand_mw) {
    out << bundle.grid_name << ',' << bundle.demand.model << ',' << year << ','
        << format_mw(mw) << '\n';
  }
}

void write_daily_outage_csv(std::ostream& out, const OutageReport& outage) {
  out << "year,day_index,month,day,outage_pct\n";
  int month = 1;
  int day = 1;
  for (std::size_t d = 0; d < outage.daily_fractions.size(); ++d) {
    out << outage.year << ',' << d << ',' << month << ',' << day << ','
        << format_pct(100.0 * outage.daily_fractions[d]) << '\n';
    if (++day > days_in_month(outage.trace_year, month)) {
      day = 1;
      ++month;
    }
  }
}

void write_summary_json(std::ostream& out, const ReportBundle& bundle) {
  nlohmann::json doc;
  doc["grid"] = bundle.grid_name;
  doc["lole_standard_hours"] = bundle.lole_standard_hours;
  doc["lole_standard_defaulted"] = bundle.lole_standard_defaulted;
  doc["demand_model"] = bundle.demand.model;
  doc["nondc_clamped_intervals"] = bundle.nondc_clamped_intervals;

  nlohmann::json schemes = nlohmann::json::object();
  for (const SchemeReport& scheme : bundle.schemes) {
    nlohmann::json entry;
    entry["guaranteed_fraction"] = scheme.scheme.guaranteed_fraction;
    if (scheme.scheme.outage_cap_fraction) {
      entry["outage_cap_fraction"] = *scheme.scheme.outage_cap_fraction;
    }
    entry["first_shortage_year"] =
        scheme.first_shortage_year ? nlohmann::json(*scheme.first_shortage_year)
                                   : nlohmann::json(nullptr);
    schemes[scheme.label] = entry;
  }
  doc["schemes"] = schemes;

  if (bundle.outage) {
    const OutageReport& o = *bundle.outage;
    nlohmann::json outage;
    outage["year"] = o.year;
    outage["scheme"] = o.scheme_label;
    outage["new_dc_mw"] = round2(o.new_dc_mw);
    outage["total_outage_hours"] = round2(o.total_outage_hours);
    outage["outage_rate_pct"] = round1(100.0 * o.outage_rate);
    outage["availability_pct"] = round1(o.availability_pct);
    outage["shed_energy_mwh"] = round2(o.shed_energy_mwh);
    outage["energy_availability_pct"] = round1(o.energy_availability_pct);
    outage["grid_lole_hours"] = round2(o.grid_lole_hours);
    doc["outage"] = outage;
  }

  doc["notes"] = bundle.notes;
  out << doc.dump(2) << '\n';
}

void write_manifest_json(std::ostream& out, const RunManifest& manifest) {
  nlohmann::json doc;
  doc["command"] = manifest.command;
  doc["scenario"] = manifest.scenario_path;
  doc["overrides"] = manifest.overrides;
  doc["tool_version"] = manifest.tool_version;
  doc["input_digest"] = digest_hex(manifest.input_digest);
  out << doc.dump(2) << '\n';
}

std::string digest_hex(std::uint64_t digest) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace gridra
