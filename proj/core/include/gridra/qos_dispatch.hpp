#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gridra/adequacy.hpp"

namespace gridra {

/// Power contract for new datacenters: the guaranteed fraction gets firm
/// supply, the remainder is curtailable, and an optional cap bounds the
/// tolerated shed-time fraction of the year.
///
/// The three bundled schemes: reliable (1.0), 80% reliable (0.8), and
/// fully flexible with a 1% outage cap (0.0, cap 0.01).
struct QosScheme {
  double guaranteed_fraction = 1.0;
  std::optional<double> outage_cap_fraction;

  void validate() const;
  bool is_reliable() const { return guaranteed_fraction >= 1.0; }
};

QosScheme reliable_scheme();
QosScheme partial_scheme(double guaranteed_fraction);
QosScheme flex_scheme(double outage_cap_fraction);

/// One year of shedding under a QoS scheme. Shed never exceeds the flexible
/// block; grid_lole_hours counts only residual shortage after all flexible
/// load is shed; outage_hours counts intervals with any positive shed.
struct DispatchResult {
  std::vector<double> shed_mw;
  double grid_lole_hours = 0.0;
  std::size_t grid_shortage_intervals = 0;
  double outage_hours = 0.0;
  std::size_t outage_intervals = 0;
  double shed_energy_mwh = 0.0;
};

/// Per interval: firm load = non-DC + existing DC + guaranteed share of the
/// new block; the flexible remainder is shed as far as needed (and possible)
/// to close any supply gap; whatever gap the firm load alone leaves counts
/// toward grid LOLE.
DispatchResult dispatch(const AdequacyInputs& inputs, double existing_dc_mw,
                        double new_dc_mw, const QosScheme& qos);

/// Shed-time share of the covered year.
double outage_rate(const DispatchResult& result, const AdequacyInputs& inputs);

/// Per calendar day, the fraction of intervals with any shedding. Requires a
/// full-year, day-aligned series.
std::vector<double> daily_outage_fractions(const DispatchResult& result,
                                           const AdequacyInputs& inputs);

struct QosLimit {
  double new_dc_mw = 0.0;
  bool infeasible_at_zero = false;
  bool bound_limited = false;  // no binding constraint below the search ceiling
};

/// Largest new datacenter block admissible under the scheme: grid LOLE within
/// the standard and, when a cap is set, outage rate within the cap. Bisection
/// to 1 MW; both constraints are monotone in the block size.
QosLimit qos_limit(const AdequacyInputs& inputs, double existing_dc_mw,
                   const QosScheme& qos);

}  // namespace gridra
