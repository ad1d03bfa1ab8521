#pragma once

#include <cstdint>

#include "gridra/timeseries.hpp"

namespace gridra {

/// Parameters for the deterministic synthetic trace generator. Real grid
/// traces are user-supplied; these exist so bundled scenarios and tests can
/// run self-contained. Amplitudes are relative to the base value; noise terms
/// are AR(1) so lulls and cold snaps persist across hours.
struct SyntheticLoadSpec {
  double base_mw = 1000.0;
  double winter_amplitude = 0.15;   // seasonal swing, peaking around Jan 1
  double winter_sharpness = 1.0;    // >1 narrows the seasonal peak (cold snaps)
  double daily_amplitude = 0.10;    // diurnal swing, peaking in the evening
  double noise = 0.02;
  double noise_hours = 6.0;         // AR(1) correlation time
};

struct SyntheticWindSpec {
  double cap_mw = 0.0;
  double mean_capacity_factor = 0.30;
  double winter_boost = 0.10;       // seasonal swing of the capacity factor
  double noise = 0.20;              // absolute capacity-factor deviation
  double noise_hours = 12.0;
};

struct SyntheticSolarSpec {
  double cap_mw = 0.0;
  double noon_capacity_factor = 0.65;
  double summer_day_hours = 16.0;
  double winter_day_hours = 8.0;
  double noise = 0.10;              // relative cloudiness deviation
  double noise_hours = 3.0;
};

struct SyntheticTraceSpec {
  std::uint64_t seed = 1;
  int year = 2022;
  int interval_minutes = 60;
  double dc_load_base_mw = 0.0;  // flat block added to the load trace
  SyntheticLoadSpec load;
  SyntheticWindSpec wind;
  SyntheticSolarSpec solar;
};

/// Generates one year of total-load, wind, and solar traces. Pure function of
/// its parameters: identical inputs give identical traces.
BaseYearTraces generate_traces(const SyntheticTraceSpec& spec);

}  // namespace gridra
