#pragma once

#include <map>
#include <string>

#include "gridra/adequacy.hpp"
#include "gridra/demand_growth.hpp"
#include "gridra/timeseries.hpp"

namespace gridra {

/// Availability multipliers applied to nameplate capacity in the firm-supply
/// sum. Both in [0, 1].
struct DeratingFactors {
  double conventional = 1.0;
  double storage = 1.0;

  void validate() const;
};

/// One year of the resource plan. Renewable capacities scale the base-year
/// traces; conventional and storage are de-rated to firm MW; other_mw is
/// stored already de-rated (imports and the like come pre-de-rated in grid
/// reports).
struct YearResources {
  int year = 0;
  double conventional_mw = 0.0;
  double wind_mw = 0.0;
  double solar_mw = 0.0;
  double storage_mw = 0.0;
  double other_mw = 0.0;
  DeratingFactors derating;

  void validate() const;
};

/// Firm capacity counted against load in every interval:
/// conventional * derate + storage * derate + other. Renewables are excluded
/// here; they enter per interval through the scaled traces.
double firm_capacity(const YearResources& resources);

/// A named grid: reliability standard, base-year traces, per-year resource
/// plans, existing datacenter block, non-DC growth schedule, and the demand
/// model used to project datacenter load.
struct GridScenario {
  std::string name;
  double lole_standard_hours = 8.0;
  int interval_minutes = 60;
  BaseYearTraces base;
  std::map<int, YearResources> plans;
  double dc_base_mw = 0.0;
  std::map<int, double> nondc_growth;
  DemandModelConfig demand;

  int first_year() const;
  int last_year() const;

  /// Plans must cover a contiguous year range, each planned year needs a
  /// growth factor, and the traces must match interval_minutes.
  void validate() const;
};

/// Assembles the adequacy inputs for one planned year: non-DC load grown by
/// that year's factor, renewables rescaled to that year's capacities, and the
/// plan's firm capacity. Deterministic; identical calls produce bit-identical
/// bundles.
AdequacyInputs year_inputs(const GridScenario& scenario, int year);

}  // namespace gridra
