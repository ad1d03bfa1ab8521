#include "gridra/adequacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridra {

void AdequacyInputs::validate() const {
  if (!same_shape(nondc_load, wind) || !same_shape(nondc_load, solar)) {
    throw std::invalid_argument("adequacy series are misaligned");
  }
  if (nondc_load.interval_minutes != interval_minutes) {
    throw std::invalid_argument("interval_minutes does not match the series");
  }
  if (firm_mw < 0.0 || !std::isfinite(firm_mw)) {
    throw std::invalid_argument("firm_mw must be finite and >= 0");
  }
  if (lole_standard_hours <= 0.0) {
    throw std::invalid_argument("lole_standard_hours must be > 0");
  }
}

AdequacyResult assess(const AdequacyInputs& inputs, double dc_load_mw) {
  inputs.validate();
  if (dc_load_mw < 0.0 || !std::isfinite(dc_load_mw)) {
    throw std::invalid_argument("dc_load_mw must be finite and >= 0");
  }
  const std::size_t n = inputs.interval_count();
  AdequacyResult result;
  result.shortage_flags.assign(n, 0);
  result.deficit_mw.assign(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    const double load = inputs.nondc_load.values[t] + dc_load_mw;
    const double supply =
        inputs.wind.values[t] + inputs.solar.values[t] + inputs.firm_mw;
    if (load > supply) {
      result.shortage_flags[t] = 1;
      result.deficit_mw[t] = load - supply;
      ++result.shortage_intervals;
    }
  }
  result.lole_hours =
      static_cast<double>(result.shortage_intervals) * inputs.interval_minutes / 60.0;
  return result;
}

std::size_t count_shortage_intervals(const AdequacyInputs& inputs, double dc_load_mw) {
  const std::size_t n = inputs.interval_count();
  std::size_t count = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double load = inputs.nondc_load.values[t] + dc_load_mw;
    const double supply =
        inputs.wind.values[t] + inputs.solar.values[t] + inputs.firm_mw;
    if (load > supply) ++count;
  }
  return count;
}

namespace {

double max_value(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

}  // namespace

DcLimit dc_limit(const AdequacyInputs& inputs) {
  inputs.validate();
  const double interval_hours = inputs.interval_minutes / 60.0;
  const auto max_shortage_intervals = static_cast<std::size_t>(
      std::floor(inputs.lole_standard_hours / interval_hours + 1e-9));
  auto feasible = [&](double dc) {
    return count_shortage_intervals(inputs, dc) <= max_shortage_intervals;
  };

  DcLimit limit;
  if (!feasible(0.0)) {
    limit.infeasible_at_zero = true;
    return limit;
  }

  double renew_peak = 0.0;
  for (std::size_t t = 0; t < inputs.interval_count(); ++t) {
    renew_peak = std::max(renew_peak, inputs.wind.values[t] + inputs.solar.values[t]);
  }
  const double upper = inputs.firm_mw + renew_peak + max_value(inputs.nondc_load.values);
  if (feasible(upper)) {
    limit.mw = upper;
    limit.bound_limited = true;
    return limit;
  }

  double lo = 0.0;
  double hi = upper;
  while (hi - lo > kLimitToleranceMw) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  limit.mw = lo;
  return limit;
}

std::map<int, double> committed_limits(const std::map<int, double>& annual_limits) {
  if (annual_limits.empty()) {
    throw std::invalid_argument("committed_limits: empty annual limits");
  }
  int expected = annual_limits.begin()->first;
  for (const auto& [year, mw] : annual_limits) {
    if (year != expected++) {
      throw std::invalid_argument("committed_limits: years must be contiguous");
    }
  }
  std::map<int, double> committed;
  double suffix_min = std::numeric_limits<double>::infinity();
  for (auto it = annual_limits.rbegin(); it != annual_limits.rend(); ++it) {
    suffix_min = std::min(suffix_min, it->second);
    committed[it->first] = suffix_min;
  }
  return committed;
}

}  // namespace gridra
