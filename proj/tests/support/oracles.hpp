#pragma once

// Exhaustive 1 MW scan oracles. Deliberately naive re-implementations of the
// shortage and dispatch arithmetic, independent of the library's bisection
// path; the equivalence tests lean on that independence.

#include <cmath>
#include <cstddef>
#include <optional>

#include "gridra/adequacy.hpp"
#include "gridra/qos_dispatch.hpp"

namespace oracle {

inline std::size_t shortage_count(const gridra::AdequacyInputs& in, double dc_mw) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < in.nondc_load.values.size(); ++t) {
    const double load = in.nondc_load.values[t] + dc_mw;
    const double supply = in.wind.values[t] + in.solar.values[t] + in.firm_mw;
    if (load > supply) ++count;
  }
  return count;
}

inline std::size_t allowed_intervals(const gridra::AdequacyInputs& in, double hours) {
  return static_cast<std::size_t>(std::floor(hours * 60.0 / in.interval_minutes + 1e-9));
}

// Largest integer MW meeting the LOLE standard; -1 when infeasible at zero.
inline long scan_dc_limit(const gridra::AdequacyInputs& in, long ceiling) {
  const std::size_t allowed = allowed_intervals(in, in.lole_standard_hours);
  if (shortage_count(in, 0.0) > allowed) return -1;
  long best = 0;
  for (long dc = 1; dc <= ceiling; ++dc) {
    if (shortage_count(in, static_cast<double>(dc)) <= allowed) best = dc;
  }
  return best;
}

struct QosCounts {
  std::size_t grid_shortage = 0;
  std::size_t outage = 0;
};

inline QosCounts qos_counts(const gridra::AdequacyInputs& in, double existing_mw,
                            double new_mw, const gridra::QosScheme& qos) {
  QosCounts counts;
  const double flexible = (1.0 - qos.guaranteed_fraction) * new_mw;
  for (std::size_t t = 0; t < in.nondc_load.values.size(); ++t) {
    const double supply = in.wind.values[t] + in.solar.values[t] + in.firm_mw;
    const double firm_load =
        in.nondc_load.values[t] + existing_mw + qos.guaranteed_fraction * new_mw;
    const double shed = std::min(std::max(firm_load + flexible - supply, 0.0), flexible);
    if (shed > 0.0) ++counts.outage;
    if (firm_load > supply) ++counts.grid_shortage;
  }
  return counts;
}

inline long scan_qos_limit(const gridra::AdequacyInputs& in, double existing_mw,
                           const gridra::QosScheme& qos, long ceiling) {
  const std::size_t allowed_lole = allowed_intervals(in, in.lole_standard_hours);
  std::size_t allowed_outage = in.nondc_load.values.size();
  if (qos.outage_cap_fraction) {
    allowed_outage = static_cast<std::size_t>(std::floor(
        *qos.outage_cap_fraction * static_cast<double>(in.nondc_load.values.size()) +
        1e-9));
  }
  auto ok = [&](double new_mw) {
    const QosCounts counts = qos_counts(in, existing_mw, new_mw, qos);
    return counts.grid_shortage <= allowed_lole && counts.outage <= allowed_outage;
  };
  if (!ok(0.0)) return -1;
  long best = 0;
  for (long mw = 1; mw <= ceiling; ++mw) {
    if (ok(static_cast<double>(mw))) best = mw;
  }
  return best;
}

}  // namespace oracle
