#include "gridra/qos_dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gridra/calendar.hpp"

namespace gridra {

void QosScheme::validate() const {
  if (!(guaranteed_fraction >= 0.0 && guaranteed_fraction <= 1.0)) {
    throw std::invalid_argument("guaranteed_fraction must be in [0, 1]");
  }
  if (outage_cap_fraction &&
      !(*outage_cap_fraction >= 0.0 && *outage_cap_fraction <= 1.0)) {
    throw std::invalid_argument("outage_cap_fraction must be in [0, 1]");
  }
}

QosScheme reliable_scheme() { return QosScheme{1.0, std::nullopt}; }

QosScheme partial_scheme(double guaranteed_fraction) {
  QosScheme scheme{guaranteed_fraction, std::nullopt};
  scheme.validate();
  return scheme;
}

QosScheme flex_scheme(double outage_cap_fraction) {
  QosScheme scheme{0.0, outage_cap_fraction};
  scheme.validate();
  return scheme;
}

DispatchResult dispatch(const AdequacyInputs& inputs, double existing_dc_mw,
                        double new_dc_mw, const QosScheme& qos) {
  inputs.validate();
  qos.validate();
  if (existing_dc_mw < 0.0 || new_dc_mw < 0.0) {
    throw std::invalid_argument("datacenter capacities must be >= 0");
  }

  const double flexible_mw = (1.0 - qos.guaranteed_fraction) * new_dc_mw;
  const double firm_dc_mw = existing_dc_mw + qos.guaranteed_fraction * new_dc_mw;
  const std::size_t n = inputs.interval_count();

  DispatchResult result;
  result.shed_mw.assign(n, 0.0);
  double shed_sum = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double supply =
        inputs.wind.values[t] + inputs.solar.values[t] + inputs.firm_mw;
    const double firm_load = inputs.nondc_load.values[t] + firm_dc_mw;
    const double total_load = firm_load + flexible_mw;
    if (total_load > supply) {
      const double shed = std::min(total_load - supply, flexible_mw);
      if (shed > 0.0) {
        result.shed_mw[t] = shed;
        shed_sum += shed;
        ++result.outage_intervals;
      }
    }
    if (firm_load > supply) {
      ++result.grid_shortage_intervals;
    }
  }
  const double interval_hours = inputs.interval_minutes / 60.0;
  result.grid_lole_hours =
      static_cast<double>(result.grid_shortage_intervals) * interval_hours;
  result.outage_hours = static_cast<double>(result.outage_intervals) * interval_hours;
  result.shed_energy_mwh = shed_sum * interval_hours;
  return result;
}

double outage_rate(const DispatchResult& result, const AdequacyInputs& inputs) {
  const double hours = inputs.hours_covered();
  if (hours <= 0.0) {
    throw std::invalid_argument("inputs cover no time");
  }
  return result.outage_hours / hours;
}

std::vector<double> daily_outage_fractions(const DispatchResult& result,
                                           const AdequacyInputs& inputs) {
  if (result.shed_mw.size() != inputs.interval_count()) {
    throw std::invalid_argument("dispatch result does not match inputs");
  }
  const int per_day = 1440 / inputs.interval_minutes;
  if (per_day * inputs.interval_minutes != 1440 ||
      inputs.interval_count() % static_cast<std::size_t>(per_day) != 0) {
    throw std::invalid_argument("series is not day-aligned");
  }
  const std::size_t days = inputs.interval_count() / static_cast<std::size_t>(per_day);
  std::vector<double> fractions(days, 0.0);
  for (std::size_t d = 0; d < days; ++d) {
    int shed_intervals = 0;
    for (int i = 0; i < per_day; ++i) {
      if (result.shed_mw[d * per_day + i] > 0.0) ++shed_intervals;
    }
    fractions[d] = static_cast<double>(shed_intervals) / per_day;
  }
  return fractions;
}

namespace {

struct DispatchCounts {
  std::size_t grid_shortage_intervals = 0;
  std::size_t outage_intervals = 0;
};

// Counting core of dispatch(); kept allocation-free for the limit search.
DispatchCounts dispatch_counts(const AdequacyInputs& inputs, double existing_dc_mw,
                               double new_dc_mw, const QosScheme& qos) {
  const double flexible_mw = (1.0 - qos.guaranteed_fraction) * new_dc_mw;
  const double firm_dc_mw = existing_dc_mw + qos.guaranteed_fraction * new_dc_mw;
  const std::size_t n = inputs.interval_count();
  DispatchCounts counts;
  for (std::size_t t = 0; t < n; ++t) {
    const double supply =
        inputs.wind.values[t] + inputs.solar.values[t] + inputs.firm_mw;
    const double firm_load = inputs.nondc_load.values[t] + firm_dc_mw;
    if (firm_load + flexible_mw > supply && flexible_mw > 0.0) {
      ++counts.outage_intervals;
    }
    if (firm_load > supply) {
      ++counts.grid_shortage_intervals;
    }
  }
  return counts;
}

}  // namespace

QosLimit qos_limit(const AdequacyInputs& inputs, double existing_dc_mw,
                   const QosScheme& qos) {
  inputs.validate();
  qos.validate();
  if (existing_dc_mw < 0.0) {
    throw std::invalid_argument("existing_dc_mw must be >= 0");
  }

  const double interval_hours = inputs.interval_minutes / 60.0;
  const auto max_lole_intervals = static_cast<std::size_t>(
      std::floor(inputs.lole_standard_hours / interval_hours + 1e-9));
  const double hours = inputs.hours_covered();
  std::size_t max_outage_intervals = inputs.interval_count();
  if (qos.outage_cap_fraction) {
    max_outage_intervals = static_cast<std::size_t>(
        std::floor(*qos.outage_cap_fraction * hours / interval_hours + 1e-9));
  }

  auto feasible = [&](double new_dc) {
    const DispatchCounts counts = dispatch_counts(inputs, existing_dc_mw, new_dc, qos);
    return counts.grid_shortage_intervals <= max_lole_intervals &&
           counts.outage_intervals <= max_outage_intervals;
  };

  QosLimit limit;
  if (!feasible(0.0)) {
    limit.infeasible_at_zero = true;
    return limit;
  }

  double renew_peak = 0.0;
  double nondc_peak = 0.0;
  for (std::size_t t = 0; t < inputs.interval_count(); ++t) {
    renew_peak = std::max(renew_peak, inputs.wind.values[t] + inputs.solar.values[t]);
    nondc_peak = std::max(nondc_peak, inputs.nondc_load.values[t]);
  }
  const double upper = inputs.firm_mw + renew_peak + nondc_peak;
  if (feasible(upper)) {
    limit.new_dc_mw = upper;
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
  limit.new_dc_mw = lo;
  return limit;
}

}  // namespace gridra
