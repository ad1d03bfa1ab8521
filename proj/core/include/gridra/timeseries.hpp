#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridra {

/// One calendar year of per-interval megawatt readings.
///
/// The values cover the year gap-free: size() * interval_minutes equals the
/// minutes in `year`. Construction through parse_trace() or the scenario
/// loader enforces that; hand-built instances can be checked with
/// validate_full_year().
struct TimeSeries {
  int year = 0;
  int interval_minutes = 60;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double hours_covered() const {
    return static_cast<double>(values.size()) * interval_minutes / 60.0;
  }
  double intervals_per_hour() const { return 60.0 / interval_minutes; }

  /// Sum of values * interval length, in MWh.
  double energy_mwh() const;

  /// Throws std::invalid_argument unless the series covers its calendar year
  /// exactly, every value is finite and >= 0, and the interval length is
  /// day-aligned (divides 60, or is a multiple of 60 dividing 1440).
  void validate_full_year() const;
};

bool same_shape(const TimeSeries& a, const TimeSeries& b);

/// Base-year grid traces plus the flat quantities needed to decompose and
/// rescale them: the flat DC block subtracted from total load, and the
/// nameplate capacities behind the wind/solar traces.
struct BaseYearTraces {
  TimeSeries total_load;
  double dc_load_base_mw = 0.0;
  TimeSeries wind_gen;
  TimeSeries solar_gen;
  double wind_cap_base_mw = 0.0;
  double solar_cap_base_mw = 0.0;

  void validate() const;
};

/// Scalar context for a trace file: the quantities the CSV itself cannot
/// carry. Comes from the scenario file.
struct TraceContext {
  double dc_load_base_mw = 0.0;
  double wind_cap_base_mw = 0.0;
  double solar_cap_base_mw = 0.0;
};

struct TraceParseError : std::runtime_error {
  TraceParseError(std::size_t row_number, const std::string& what_arg)
      : std::runtime_error("row " + std::to_string(row_number) + ": " + what_arg),
        row(row_number) {}
  std::size_t row;  // 1-based, header = row 1
};

/// Parses a trace CSV (header "timestamp,total_load_mw,wind_mw,solar_mw",
/// ISO-8601 UTC timestamps at constant spacing covering one full year) and
/// returns validated traces. The interval is inferred from the first two
/// rows. Malformed rows, gaps, spacing changes, negative readings, and wrong
/// row counts all raise TraceParseError with the offending row number.
BaseYearTraces parse_trace(std::istream& source, const TraceContext& context);
BaseYearTraces parse_trace_file(const std::string& path, const TraceContext& context);

void write_trace_csv(std::ostream& out, const TimeSeries& total_load,
                     const TimeSeries& wind_gen, const TimeSeries& solar_gen);

/// Rescales a generation trace by the ratio of future to base nameplate
/// capacity. cap_base_mw == 0 is allowed only for an all-zero trace.
TimeSeries scale_renewables(const TimeSeries& gen, double cap_base_mw,
                            double cap_future_mw);

struct ScaledLoad {
  TimeSeries series;
  std::size_t clamped_intervals = 0;  // intervals where total < flat DC block
};

/// Subtracts the flat DC block from the total-load trace and grows the
/// remainder. Intervals where the block exceeds total load clamp to zero and
/// are counted rather than rejected.
ScaledLoad scale_nondc_load(const BaseYearTraces& traces, double nondc_growth_factor);

}  // namespace gridra
