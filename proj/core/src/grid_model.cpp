#include "gridra/grid_model.hpp"

#include <cmath>
#include <stdexcept>

namespace gridra {

void DeratingFactors::validate() const {
  if (!(conventional >= 0.0 && conventional <= 1.0) ||
      !(storage >= 0.0 && storage <= 1.0)) {
    throw std::invalid_argument("de-rating factors must be in [0, 1]");
  }
}

void YearResources::validate() const {
  derating.validate();
  for (double mw : {conventional_mw, wind_mw, solar_mw, storage_mw, other_mw}) {
    if (!std::isfinite(mw) || mw < 0.0) {
      throw std::invalid_argument("capacities must be finite and >= 0");
    }
  }
}

double firm_capacity(const YearResources& resources) {
  return resources.conventional_mw * resources.derating.conventional +
         resources.storage_mw * resources.derating.storage + resources.other_mw;
}

int GridScenario::first_year() const {
  if (plans.empty()) throw std::logic_error("scenario has no plans");
  return plans.begin()->first;
}

int GridScenario::last_year() const {
  if (plans.empty()) throw std::logic_error("scenario has no plans");
  return plans.rbegin()->first;
}

void GridScenario::validate() const {
  if (lole_standard_hours <= 0.0) {
    throw std::invalid_argument("lole_standard_hours must be > 0");
  }
  if (plans.empty()) {
    throw std::invalid_argument("scenario needs at least one plan year");
  }
  base.validate();
  if (base.total_load.interval_minutes != interval_minutes) {
    throw std::invalid_argument("scenario interval_minutes does not match the traces");
  }
  if (dc_base_mw < 0.0) {
    throw std::invalid_argument("dc_base_mw must be >= 0");
  }
  int expected = first_year();
  for (const auto& [year, plan] : plans) {
    if (year != expected++) {
      throw std::invalid_argument("plan years must be contiguous; missing year " +
                                  std::to_string(expected - 1));
    }
    if (plan.year != year) {
      throw std::invalid_argument("plan entry year mismatch at " + std::to_string(year));
    }
    plan.validate();
    if (nondc_growth.find(year) == nondc_growth.end()) {
      throw std::invalid_argument("no nondc_growth factor for year " +
                                  std::to_string(year));
    }
  }
}

AdequacyInputs year_inputs(const GridScenario& scenario, int year) {
  const auto plan_it = scenario.plans.find(year);
  if (plan_it == scenario.plans.end()) {
    throw std::out_of_range("year " + std::to_string(year) + " not in plan for grid " +
                            scenario.name);
  }
  const YearResources& plan = plan_it->second;
  const double growth = scenario.nondc_growth.at(year);

  AdequacyInputs inputs;
  ScaledLoad load = scale_nondc_load(scenario.base, growth);
  inputs.nondc_load = std::move(load.series);
  inputs.nondc_clamped_intervals = load.clamped_intervals;
  inputs.wind =
      scale_renewables(scenario.base.wind_gen, scenario.base.wind_cap_base_mw, plan.wind_mw);
  inputs.solar = scale_renewables(scenario.base.solar_gen, scenario.base.solar_cap_base_mw,
                                  plan.solar_mw);
  inputs.firm_mw = firm_capacity(plan);
  inputs.interval_minutes = scenario.interval_minutes;
  inputs.lole_standard_hours = scenario.lole_standard_hours;
  return inputs;
}

}  // namespace gridra
