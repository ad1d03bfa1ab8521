#include "gridra/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gridra {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error("scenario: " + message);
}

const json& require(const json& node, const char* key, const char* context) {
  auto it = node.find(key);
  if (it == node.end()) {
    fail(std::string("missing \"") + key + "\" in " + context);
  }
  return *it;
}

double require_number(const json& node, const char* key, const char* context) {
  const json& value = require(node, key, context);
  if (!value.is_number()) {
    fail(std::string("\"") + key + "\" in " + context + " must be a number");
  }
  return value.get<double>();
}

double number_or(const json& node, const char* key, double fallback) {
  auto it = node.find(key);
  if (it == node.end()) return fallback;
  return it->get<double>();
}

SyntheticTraceSpec parse_synthetic(const json& node, int default_interval,
                                   double dc_load_base_mw) {
  SyntheticTraceSpec spec;
  spec.seed = node.value("seed", std::uint64_t{1});
  spec.year = node.value("year", 2022);
  spec.interval_minutes = node.value("interval_minutes", default_interval);
  spec.dc_load_base_mw = dc_load_base_mw;
  if (auto it = node.find("load"); it != node.end()) {
    spec.load.base_mw = require_number(*it, "base_mw", "traces.synthetic.load");
    spec.load.winter_amplitude = number_or(*it, "winter_amplitude", spec.load.winter_amplitude);
    spec.load.winter_sharpness = number_or(*it, "winter_sharpness", spec.load.winter_sharpness);
    spec.load.daily_amplitude = number_or(*it, "daily_amplitude", spec.load.daily_amplitude);
    spec.load.noise = number_or(*it, "noise", spec.load.noise);
    spec.load.noise_hours = number_or(*it, "noise_hours", spec.load.noise_hours);
  }
  if (auto it = node.find("wind"); it != node.end()) {
    spec.wind.cap_mw = require_number(*it, "cap_mw", "traces.synthetic.wind");
    spec.wind.mean_capacity_factor =
        number_or(*it, "mean_capacity_factor", spec.wind.mean_capacity_factor);
    spec.wind.winter_boost = number_or(*it, "winter_boost", spec.wind.winter_boost);
    spec.wind.noise = number_or(*it, "noise", spec.wind.noise);
    spec.wind.noise_hours = number_or(*it, "noise_hours", spec.wind.noise_hours);
  }
  if (auto it = node.find("solar"); it != node.end()) {
    spec.solar.cap_mw = require_number(*it, "cap_mw", "traces.synthetic.solar");
    spec.solar.noon_capacity_factor =
        number_or(*it, "noon_capacity_factor", spec.solar.noon_capacity_factor);
    spec.solar.summer_day_hours =
        number_or(*it, "summer_day_hours", spec.solar.summer_day_hours);
    spec.solar.winter_day_hours =
        number_or(*it, "winter_day_hours", spec.solar.winter_day_hours);
    spec.solar.noise = number_or(*it, "noise", spec.solar.noise);
    spec.solar.noise_hours = number_or(*it, "noise_hours", spec.solar.noise_hours);
  }
  return spec;
}

QuarterEnding parse_quarter(const std::string& text) {
  // "YYYY-MM", the month the quarter ends in.
  if (text.size() != 7 || text[4] != '-') {
    fail("quarter must look like \"2023-07\": " + text);
  }
  QuarterEnding q;
  q.year = std::stoi(text.substr(0, 4));
  q.month = std::stoi(text.substr(5, 2));
  if (q.month < 1 || q.month > 12) {
    fail("quarter month out of range: " + text);
  }
  return q;
}

DemandModelConfig parse_demand(const json& node, double dc_base_mw, int trace_year) {
  DemandModelConfig config;
  const std::string model = node.value("model", std::string("exponential"));
  if (model == "exponential" || model == "exp") {
    config.model = DemandModel::kExponential;
  } else if (model == "linear") {
    config.model = DemandModel::kLinear;
  } else {
    fail("demand.model must be \"exponential\" or \"linear\", got \"" + model + "\"");
  }
  config.base_capacity_mw = number_or(node, "base_capacity_mw", dc_base_mw);
  config.base_year = static_cast<int>(number_or(node, "base_year", trace_year));
  config.cloud_cagr = require_number(node, "cloud_cagr", "demand");
  config.cloud_cagr_global_avg =
      number_or(node, "cloud_cagr_global_avg", config.cloud_cagr_global_avg);
  config.ai_cagr_increment_global =
      number_or(node, "ai_cagr_increment_global", config.ai_cagr_increment_global);
  if (auto it = node.find("revenue_chain"); it != node.end()) {
    config.chain.gpu_unit_price_usd =
        number_or(*it, "gpu_unit_price_usd", config.chain.gpu_unit_price_usd);
    config.chain.incremental_watts_per_gpu =
        number_or(*it, "incremental_watts_per_gpu", config.chain.incremental_watts_per_gpu);
    config.chain.vendor_market_share =
        number_or(*it, "vendor_market_share", config.chain.vendor_market_share);
    config.chain.global_dc_capacity_mw =
        number_or(*it, "global_dc_capacity_mw", config.chain.global_dc_capacity_mw);
  }
  if (auto it = node.find("linear_anchor_quarters"); it != node.end()) {
    for (const json& anchor : *it) {
      QuarterRevenue qr;
      qr.quarter = parse_quarter(require(anchor, "quarter", "anchor").get<std::string>());
      qr.revenue_usd = require_number(anchor, "revenue_usd", "anchor");
      config.linear_anchor_quarters.push_back(qr);
    }
  }
  if (auto it = node.find("linear_quarterly_revenue_growth_usd"); it != node.end()) {
    config.linear_quarterly_revenue_growth_usd = it->get<double>();
  }
  return config;
}

void apply_override(json& document, const ScenarioOverride& override_) {
  json* node = &document;
  std::string path = override_.path;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (key.empty()) fail("bad override path \"" + override_.path + "\"");
    if (dot == std::string::npos) {
      json parsed = json::parse(override_.value, nullptr, false);
      (*node)[key] = parsed.is_discarded() ? json(override_.value) : parsed;
      return;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t hash = seed;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

LoadedScenario load_scenario_from_string(const std::string& document,
                                         const std::string& base_dir,
                                         const std::vector<ScenarioOverride>& overrides) {
  json root = json::parse(document, nullptr, false);
  if (root.is_discarded()) fail("not valid JSON");
  for (const auto& override_ : overrides) {
    apply_override(root, override_);
  }

  LoadedScenario loaded;
  loaded.input_digest = fnv1a64(root.dump());

  const json& grid = require(root, "grid", "document");
  GridScenario& scenario = loaded.scenario;
  scenario.name = require(grid, "name", "grid").get<std::string>();
  if (auto it = grid.find("lole_standard_hours"); it != grid.end()) {
    scenario.lole_standard_hours = it->get<double>();
  } else {
    loaded.lole_standard_defaulted = true;
    loaded.notes.push_back(
        "lole_standard_hours not set; defaulting to 8 h/year (EirGrid standard)");
  }
  scenario.dc_base_mw = require_number(grid, "dc_base_mw", "grid");
  if (auto it = grid.find("notes"); it != grid.end()) {
    for (const json& note : *it) loaded.notes.push_back(note.get<std::string>());
  }

  DeratingFactors derating;
  if (auto it = root.find("derating"); it != root.end()) {
    derating.conventional = number_or(*it, "conventional", 1.0);
    derating.storage = number_or(*it, "storage", 1.0);
  }

  const json& traces = require(root, "traces", "document");
  const double dc_load_base = number_or(traces, "dc_load_base_mw", scenario.dc_base_mw);
  const int declared_interval = static_cast<int>(number_or(grid, "interval_minutes", 60));
  if (auto it = traces.find("csv"); it != traces.end()) {
    std::filesystem::path csv_path = it->get<std::string>();
    if (csv_path.is_relative() && !base_dir.empty()) {
      csv_path = std::filesystem::path(base_dir) / csv_path;
    }
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) fail("cannot open trace csv: " + csv_path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();
    loaded.input_digest = fnv1a64(bytes, loaded.input_digest);
    TraceContext context;
    context.dc_load_base_mw = dc_load_base;
    context.wind_cap_base_mw = require_number(traces, "wind_cap_base_mw", "traces");
    context.solar_cap_base_mw = require_number(traces, "solar_cap_base_mw", "traces");
    std::istringstream stream(bytes);
    scenario.base = parse_trace(stream, context);
  } else if (auto synth = traces.find("synthetic"); synth != traces.end()) {
    SyntheticTraceSpec spec = parse_synthetic(*synth, declared_interval, dc_load_base);
    scenario.base = generate_traces(spec);
    loaded.synthetic = spec;
  } else {
    fail("traces needs either \"csv\" or \"synthetic\"");
  }
  scenario.interval_minutes = scenario.base.total_load.interval_minutes;
  if (grid.find("interval_minutes") != grid.end() &&
      declared_interval != scenario.interval_minutes) {
    fail("grid.interval_minutes (" + std::to_string(declared_interval) +
         ") does not match the trace interval (" +
         std::to_string(scenario.interval_minutes) + ")");
  }

  const json& plans = require(root, "plans", "document");
  for (const json& plan_json : plans) {
    YearResources plan;
    plan.year = static_cast<int>(require_number(plan_json, "year", "plan"));
    plan.conventional_mw = require_number(plan_json, "conventional_mw", "plan");
    plan.wind_mw = require_number(plan_json, "wind_mw", "plan");
    plan.solar_mw = require_number(plan_json, "solar_mw", "plan");
    plan.storage_mw = require_number(plan_json, "storage_mw", "plan");
    plan.other_mw = require_number(plan_json, "other_mw", "plan");
    plan.derating = derating;
    if (auto it = plan_json.find("derating"); it != plan_json.end()) {
      plan.derating.conventional = number_or(*it, "conventional", derating.conventional);
      plan.derating.storage = number_or(*it, "storage", derating.storage);
    }
    if (plan_json.value("illustrative", false)) {
      loaded.plans_illustrative = true;
    }
    if (!scenario.plans.emplace(plan.year, plan).second) {
      fail("duplicate plan year " + std::to_string(plan.year));
    }
  }
  if (loaded.plans_illustrative) {
    loaded.notes.push_back(
        "resource plan values are illustrative, not published grid data");
  }

  const json& growth = require(root, "nondc_growth", "document");
  for (auto it = growth.begin(); it != growth.end(); ++it) {
    scenario.nondc_growth[std::stoi(it.key())] = it.value().get<double>();
  }

  scenario.demand = parse_demand(require(root, "demand", "document"), scenario.dc_base_mw,
                                 scenario.base.total_load.year);

  scenario.validate();
  scenario.demand.validate();
  return loaded;
}

LoadedScenario load_scenario(const std::string& path,
                             const std::vector<ScenarioOverride>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open scenario file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  LoadedScenario loaded = load_scenario_from_string(
      buffer.str(), std::filesystem::path(path).parent_path().string(), overrides);
  loaded.source_path = path;
  return loaded;
}

}  // namespace gridra
