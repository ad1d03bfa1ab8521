#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gridra {

/// Conversion chain from GPU-vendor revenue to global datacenter megawatts:
/// revenue -> GPUs sold -> vendor-attributable MW -> global MW.
struct RevenueChainParams {
  double gpu_unit_price_usd = 10000.0;
  double incremental_watts_per_gpu = 300.0;
  double vendor_market_share = 0.68;
  double global_dc_capacity_mw = 33000.0;

  void validate() const;
};

/// A fiscal quarter identified by the calendar month it ends in.
struct QuarterEnding {
  int year = 0;
  int month = 1;  // 1..12

  friend bool operator==(const QuarterEnding&, const QuarterEnding&) = default;
};

QuarterEnding next_quarter(QuarterEnding q);

struct QuarterRevenue {
  QuarterEnding quarter;
  double revenue_usd = 0.0;
};

enum class DemandModel { kExponential, kLinear };

struct DemandModelConfig {
  DemandModel model = DemandModel::kExponential;
  double base_capacity_mw = 0.0;
  int base_year = 2022;
  double cloud_cagr = 0.0;
  double cloud_cagr_global_avg = 0.0721;
  double ai_cagr_increment_global = 0.0412;
  RevenueChainParams chain;
  std::vector<QuarterRevenue> linear_anchor_quarters;
  // Unset means "derive from the anchors".
  std::optional<double> linear_quarterly_revenue_growth_usd;

  void validate() const;
};

/// Per-year projected total datacenter demand for one grid.
struct DemandProjection {
  std::string model;  // "exponential" or "linear"
  double cagr = 0.0;  // regional cloud+AI rate (exponential model)
  std::map<int, double> demand_mw;

  double at(int year) const;
};

/// Flat annualization: a quarter's revenue taken as a quarter of the year's.
double annualize_revenue(double quarterly_revenue_usd);

struct RevenueCapacity {
  double gpus = 0.0;
  double vendor_mw = 0.0;
  double global_mw = 0.0;
};

/// Annual revenue -> GPUs sold -> vendor MW -> global MW (scaled up by the
/// vendor's market share).
RevenueCapacity revenue_to_global_capacity(double annual_revenue_usd,
                                           const RevenueChainParams& params);

/// Growth-rate bump from a revenue run-rate change: the incremental global MW
/// between two annualized quarters, normalized to global capacity.
double ai_cagr_increment(double quarterly_revenue_new_usd,
                         double quarterly_revenue_old_usd,
                         const RevenueChainParams& params);

/// Regional cloud+AI growth rate. The AI increment lands on each region in
/// proportion to the region's share of cloud growth:
/// cagr_region + (cagr_region / cagr_avg) * increment.
double regional_cagr(double cloud_cagr_region, double cloud_cagr_avg,
                     double ai_increment_avg);

struct YearRange {
  int first = 0;
  int last = 0;
};

DemandProjection project_exponential(const DemandModelConfig& config, YearRange years);

/// Mean revenue step between consecutive anchor quarters.
double average_anchor_growth_usd(const std::vector<QuarterRevenue>& anchors);

/// Sum of the last four anchor quarters (the trailing 12 months).
double trailing_year_revenue_usd(const std::vector<QuarterRevenue>& anchors);

/// Linear model: quarterly revenue extends past the anchors by a fixed step,
/// calendar-year revenue is the sum of the four quarters ending in that year,
/// and each year-over-year revenue increase converts to global MW through the
/// chain. The regional share of those additions is
/// (cloud_cagr / cloud_cagr_avg) * (base_capacity / global capacity), layered
/// on top of the cloud-only exponential baseline.
DemandProjection project_linear(const DemandModelConfig& config,
                                const RevenueChainParams& params, YearRange years);

/// Dispatches on config.model.
DemandProjection project_demand(const DemandModelConfig& config, YearRange years);

}  // namespace gridra
