#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gridra/timeseries.hpp"

namespace gridra {

/// Everything one year's loss-of-load assessment needs: aligned non-DC load
/// and renewable generation series, firm capacity, and the grid's LOLE
/// standard.
struct AdequacyInputs {
  TimeSeries nondc_load;
  TimeSeries wind;
  TimeSeries solar;
  double firm_mw = 0.0;
  int interval_minutes = 60;
  double lole_standard_hours = 8.0;
  std::size_t nondc_clamped_intervals = 0;  // informational, from load scaling

  std::size_t interval_count() const { return nondc_load.size(); }
  double hours_covered() const {
    return static_cast<double>(nondc_load.size()) * interval_minutes / 60.0;
  }
  /// Throws std::invalid_argument when the three series are misaligned.
  void validate() const;
};

/// Per-interval shortage outcome of one assessment.
/// lole_hours == flagged-interval count * interval_minutes / 60 exactly, and
/// deficit_mw[t] > 0 iff shortage_flags[t].
struct AdequacyResult {
  double lole_hours = 0.0;
  std::size_t shortage_intervals = 0;
  std::vector<std::uint8_t> shortage_flags;
  std::vector<double> deficit_mw;

  bool meets(double lole_standard_hours) const {
    return lole_hours <= lole_standard_hours;
  }
};

/// Capacity shortage happens when load strictly exceeds renewable generation
/// plus firm capacity; an exact balance is not a shortage.
inline bool shortage_indicator(double load_mw, double renew_mw, double firm_mw) {
  return load_mw > renew_mw + firm_mw;
}

/// Assesses one year with a flat datacenter block added to every interval's
/// non-DC load.
AdequacyResult assess(const AdequacyInputs& inputs, double dc_load_mw);

/// Shortage-interval count only; same arithmetic as assess() without
/// materializing the per-interval vectors.
std::size_t count_shortage_intervals(const AdequacyInputs& inputs, double dc_load_mw);

struct DcLimit {
  double mw = 0.0;
  bool infeasible_at_zero = false;  // standard violated even with no DC load
  bool bound_limited = false;       // search ceiling was itself feasible
};

/// Largest flat datacenter load whose LOLE stays within the standard, by
/// bisection to 1 MW on [0, firm + max renewables + max non-DC load].
DcLimit dc_limit(const AdequacyInputs& inputs);

/// Search tolerance shared by dc_limit and qos_limit.
inline constexpr double kLimitToleranceMw = 1.0;

/// Forward-minimum limits: capacity admitted in year y must remain
/// supportable in every later planned year, so committed[y] is the suffix
/// minimum of the annual limits. Throws std::invalid_argument on an empty map.
std::map<int, double> committed_limits(const std::map<int, double>& annual_limits);

}  // namespace gridra
