#include "gridra/demand_growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridra {

void RevenueChainParams::validate() const {
  if (gpu_unit_price_usd <= 0.0 || incremental_watts_per_gpu <= 0.0 ||
      global_dc_capacity_mw <= 0.0) {
    throw std::invalid_argument("revenue chain parameters must be > 0");
  }
  if (vendor_market_share <= 0.0 || vendor_market_share > 1.0) {
    throw std::invalid_argument("vendor_market_share must be in (0, 1]");
  }
}

void DemandModelConfig::validate() const {
  if (base_capacity_mw <= 0.0) {
    throw std::invalid_argument("base_capacity_mw must be > 0");
  }
  if (!std::isfinite(cloud_cagr) || !std::isfinite(cloud_cagr_global_avg) ||
      !std::isfinite(ai_cagr_increment_global)) {
    throw std::invalid_argument("growth rates must be finite");
  }
  chain.validate();
  if (model == DemandModel::kLinear) {
    if (linear_anchor_quarters.empty()) {
      throw std::invalid_argument("linear model needs at least one anchor quarter");
    }
    QuarterEnding expected = linear_anchor_quarters.front().quarter;
    for (const auto& anchor : linear_anchor_quarters) {
      if (!(anchor.quarter == expected)) {
        throw std::invalid_argument("anchor quarters must be consecutive");
      }
      expected = next_quarter(expected);
    }
  }
}

QuarterEnding next_quarter(QuarterEnding q) {
  q.month += 3;
  if (q.month > 12) {
    q.month -= 12;
    q.year += 1;
  }
  return q;
}

double DemandProjection::at(int year) const {
  auto it = demand_mw.find(year);
  if (it == demand_mw.end()) {
    throw std::out_of_range("no demand projected for year " + std::to_string(year));
  }
  return it->second;
}

double annualize_revenue(double quarterly_revenue_usd) {
  if (quarterly_revenue_usd < 0.0) {
    throw std::invalid_argument("quarterly revenue must be >= 0");
  }
  return 4.0 * quarterly_revenue_usd;
}

RevenueCapacity revenue_to_global_capacity(double annual_revenue_usd,
                                           const RevenueChainParams& params) {
  params.validate();
  RevenueCapacity out;
  out.gpus = annual_revenue_usd / params.gpu_unit_price_usd;
  out.vendor_mw = out.gpus * params.incremental_watts_per_gpu / 1e6;
  out.global_mw = out.vendor_mw / params.vendor_market_share;
  return out;
}

double ai_cagr_increment(double quarterly_revenue_new_usd,
                         double quarterly_revenue_old_usd,
                         const RevenueChainParams& params) {
  const double mw_new =
      revenue_to_global_capacity(annualize_revenue(quarterly_revenue_new_usd), params)
          .global_mw;
  const double mw_old =
      revenue_to_global_capacity(annualize_revenue(quarterly_revenue_old_usd), params)
          .global_mw;
  return (mw_new - mw_old) / params.global_dc_capacity_mw;
}

double regional_cagr(double cloud_cagr_region, double cloud_cagr_avg,
                     double ai_increment_avg) {
  if (cloud_cagr_avg <= 0.0) {
    throw std::invalid_argument("cloud_cagr_avg must be > 0");
  }
  return cloud_cagr_region + (cloud_cagr_region / cloud_cagr_avg) * ai_increment_avg;
}

namespace {

void check_year_range(const DemandModelConfig& config, YearRange years) {
  if (years.last < years.first) {
    throw std::invalid_argument("empty year range");
  }
  if (years.first < config.base_year) {
    throw std::invalid_argument("projection cannot start before the base year");
  }
}

}  // namespace

DemandProjection project_exponential(const DemandModelConfig& config, YearRange years) {
  config.validate();
  check_year_range(config, years);
  DemandProjection projection;
  projection.model = "exponential";
  projection.cagr = regional_cagr(config.cloud_cagr, config.cloud_cagr_global_avg,
                                  config.ai_cagr_increment_global);
  for (int y = years.first; y <= years.last; ++y) {
    projection.demand_mw[y] =
        config.base_capacity_mw * std::pow(1.0 + projection.cagr, y - config.base_year);
  }
  return projection;
}

double average_anchor_growth_usd(const std::vector<QuarterRevenue>& anchors) {
  if (anchors.size() < 2) {
    throw std::invalid_argument("need at least two anchors to average growth");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    sum += anchors[i].revenue_usd - anchors[i - 1].revenue_usd;
  }
  return sum / static_cast<double>(anchors.size() - 1);
}

double trailing_year_revenue_usd(const std::vector<QuarterRevenue>& anchors) {
  if (anchors.size() < 4) {
    throw std::invalid_argument("need at least four anchors for a trailing year");
  }
  double sum = 0.0;
  for (std::size_t i = anchors.size() - 4; i < anchors.size(); ++i) {
    sum += anchors[i].revenue_usd;
  }
  return sum;
}

namespace {

// Quarterly revenue on the anchored line, extended in both directions by the
// fixed step and clamped at zero going backward (revenue cannot be negative).
double quarter_revenue_at(const std::vector<QuarterRevenue>& anchors, double step_usd,
                          int steps_from_first) {
  const int n = static_cast<int>(anchors.size());
  if (steps_from_first >= 0 && steps_from_first < n) {
    return anchors[static_cast<std::size_t>(steps_from_first)].revenue_usd;
  }
  if (steps_from_first >= n) {
    return std::max(0.0,
                    anchors.back().revenue_usd + step_usd * (steps_from_first - (n - 1)));
  }
  return std::max(0.0, anchors.front().revenue_usd + step_usd * steps_from_first);
}

// Sum of the four quarters whose fiscal end month falls in calendar `year`.
double calendar_year_revenue(const std::vector<QuarterRevenue>& anchors,
                             double step_usd, int year) {
  const QuarterEnding first = anchors.front().quarter;
  double sum = 0.0;
  int count = 0;
  // Quarter k ends in month first.month + 3k (mod 12); walk the offsets that
  // land in `year`.
  for (int month = first.month % 3 == 0 ? 3 : first.month % 3; month <= 12;
       month += 3) {
    const int steps = (year - first.year) * 4 + (month - first.month) / 3;
    sum += quarter_revenue_at(anchors, step_usd, steps);
    ++count;
  }
  if (count != 4) {
    throw std::logic_error("calendar year must contain exactly four quarters");
  }
  return sum;
}

}  // namespace

DemandProjection project_linear(const DemandModelConfig& config,
                                const RevenueChainParams& params, YearRange years) {
  DemandModelConfig linear_config = config;
  linear_config.model = DemandModel::kLinear;
  linear_config.validate();
  params.validate();
  check_year_range(config, years);

  const auto& anchors = config.linear_anchor_quarters;
  const double step = config.linear_quarterly_revenue_growth_usd
                          ? *config.linear_quarterly_revenue_growth_usd
                          : average_anchor_growth_usd(anchors);

  // AI-driven additions are shared with the region in proportion to its cloud
  // growth and its share of global capacity.
  const double regional_share = (config.cloud_cagr / config.cloud_cagr_global_avg) *
                                (config.base_capacity_mw / params.global_dc_capacity_mw);

  DemandProjection projection;
  projection.model = "linear";
  projection.cagr = config.cloud_cagr;

  double cumulative_ai_mw = 0.0;
  double prev_revenue = calendar_year_revenue(anchors, step, config.base_year);
  for (int y = config.base_year + 1; y <= years.last; ++y) {
    const double revenue = calendar_year_revenue(anchors, step, y);
    const double incremental_revenue = std::max(0.0, revenue - prev_revenue);
    cumulative_ai_mw +=
        revenue_to_global_capacity(incremental_revenue, params).global_mw *
        regional_share;
    prev_revenue = revenue;
    if (y >= years.first) {
      const double cloud_baseline =
          config.base_capacity_mw * std::pow(1.0 + config.cloud_cagr, y - config.base_year);
      projection.demand_mw[y] = cloud_baseline + cumulative_ai_mw;
    }
  }
  if (years.first == config.base_year) {
    projection.demand_mw[config.base_year] = config.base_capacity_mw;
  }
  return projection;
}

DemandProjection project_demand(const DemandModelConfig& config, YearRange years) {
  if (config.model == DemandModel::kLinear) {
    return project_linear(config, config.chain, years);
  }
  return project_exponential(config, years);
}

}  // namespace gridra
