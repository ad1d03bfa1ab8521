#include "gridra/demand_growth.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace gridra;

namespace {

RevenueChainParams published_chain() {
  return RevenueChainParams{10000.0, 300.0, 0.68, 33000.0};
}

std::vector<QuarterRevenue> nvidia_anchors() {
  return {
      {{2023, 7}, 10.32e9},
      {{2023, 10}, 14.51e9},
      {{2024, 1}, 18.40e9},
      {{2024, 4}, 23.34e9},
  };
}

DemandModelConfig dominion_config(DemandModel model) {
  DemandModelConfig config;
  config.model = model;
  config.base_capacity_mw = 2767.0;
  config.base_year = 2022;
  config.cloud_cagr = 0.15;
  config.chain = published_chain();
  config.linear_anchor_quarters = nvidia_anchors();
  return config;
}

}  // namespace

TEST_CASE("annualize_revenue is flat annualization") {
  CHECK(annualize_revenue(12.0e9) == doctest::Approx(48.0e9));
  CHECK(annualize_revenue(4.28e9) == doctest::Approx(17.12e9));
  CHECK(annualize_revenue(0.0) == 0.0);
  CHECK_THROWS_AS(annualize_revenue(-1.0), std::invalid_argument);
}

TEST_CASE("revenue chain reproduces the GPU-to-megawatt conversion") {
  const RevenueChainParams chain = published_chain();

  SUBCASE("boom-quarter run rate") {
    const RevenueCapacity mw = revenue_to_global_capacity(48.0e9, chain);
    CHECK(mw.gpus == doctest::Approx(4.8e6));
    CHECK(mw.vendor_mw == doctest::Approx(1440.0));
    CHECK(mw.global_mw == doctest::Approx(2117.65).epsilon(0.0001));
  }
  SUBCASE("pre-boom run rate") {
    const RevenueCapacity mw = revenue_to_global_capacity(17.12e9, chain);
    CHECK(mw.gpus == doctest::Approx(1.712e6));
    CHECK(mw.vendor_mw == doctest::Approx(513.6));
    CHECK(mw.global_mw == doctest::Approx(755.29).epsilon(0.0001));
  }
  SUBCASE("zero revenue, zero capacity") {
    CHECK(revenue_to_global_capacity(0.0, chain).global_mw == 0.0);
  }
  SUBCASE("invalid parameters are rejected") {
    RevenueChainParams bad = chain;
    bad.vendor_market_share = 0.0;
    CHECK_THROWS_AS(revenue_to_global_capacity(1.0e9, bad), std::invalid_argument);
  }
}

TEST_CASE("ai_cagr_increment normalizes the run-rate jump to global capacity") {
  const RevenueChainParams chain = published_chain();

  SUBCASE("the boom quarter adds about 4.12 points") {
    const double increment = ai_cagr_increment(12.0e9, 4.28e9, chain);
    CHECK(increment == doctest::Approx(0.0412).epsilon(0.012));  // +-0.05 pp
    CHECK(std::abs(increment - 0.0412) < 0.0005);
  }
  SUBCASE("no revenue change, no increment") {
    CHECK(ai_cagr_increment(5.0e9, 5.0e9, chain) == 0.0);
  }
  SUBCASE("doubling global capacity halves the increment") {
    RevenueChainParams doubled = chain;
    doubled.global_dc_capacity_mw *= 2.0;
    CHECK(ai_cagr_increment(12.0e9, 4.28e9, doubled) ==
          doctest::Approx(0.5 * ai_cagr_increment(12.0e9, 4.28e9, chain)));
  }
}

TEST_CASE("regional_cagr reproduces the published regional rates") {
  // Published values rounded to two decimals; allow half of the last digit.
  CHECK(std::abs(regional_cagr(0.106, 0.0721, 0.0412) - 0.1665) < 0.0005);   // EirGrid
  CHECK(std::abs(regional_cagr(0.15, 0.0721, 0.0412) - 0.2356) < 0.0005);    // Dominion
  CHECK(std::abs(regional_cagr(0.085, 0.0721, 0.0412) - 0.1335) < 0.0005);   // CAISO
  CHECK(std::abs(regional_cagr(0.0721, 0.0721, 0.0412) - 0.1133) < 1e-12);   // SPP
  CHECK(regional_cagr(0.2, 0.1, 0.0) == 0.2);  // zero increment is the identity
  CHECK_THROWS_AS(regional_cagr(0.1, 0.0, 0.04), std::invalid_argument);
}

TEST_CASE("project_exponential compounds from the base year") {
  DemandModelConfig config;
  config.base_capacity_mw = 600.0;
  config.base_year = 2022;
  config.cloud_cagr = 0.106;
  config.chain = published_chain();

  const DemandProjection projection = project_exponential(config, {2022, 2028});
  CHECK(projection.demand_mw.at(2022) == 600.0);
  CHECK(projection.cagr == doctest::Approx(0.16657).epsilon(0.001));
  // Five compounded years roughly 2.16x the base.
  CHECK(projection.demand_mw.at(2027) == doctest::Approx(1295.0).epsilon(0.005));
  CHECK(projection.demand_mw.at(2028) > 2.0 * projection.demand_mw.at(2023));
}

TEST_CASE("Dominion exponential demand hits the published 2028 level") {
  const DemandProjection projection =
      project_exponential(dominion_config(DemandModel::kExponential), {2022, 2028});
  CHECK(std::abs(projection.demand_mw.at(2028) - 9800.0) / 9800.0 < 0.01);
}

TEST_CASE("anchor arithmetic matches the published quarters") {
  const auto anchors = nvidia_anchors();
  CHECK(anchors[1].revenue_usd - anchors[0].revenue_usd == doctest::Approx(4.19e9));
  CHECK(anchors[2].revenue_usd - anchors[1].revenue_usd == doctest::Approx(3.89e9));
  CHECK(anchors[3].revenue_usd - anchors[2].revenue_usd == doctest::Approx(4.94e9));
  CHECK(average_anchor_growth_usd(anchors) == doctest::Approx(4.34e9));
  CHECK(trailing_year_revenue_usd(anchors) == doctest::Approx(66.57e9));
  CHECK_THROWS_AS(average_anchor_growth_usd({}), std::invalid_argument);
}

TEST_CASE("project_linear layers revenue-driven additions on the cloud baseline") {
  const DemandModelConfig config = dominion_config(DemandModel::kLinear);

  SUBCASE("base year is the base capacity") {
    const DemandProjection p = project_linear(config, config.chain, {2022, 2028});
    CHECK(p.demand_mw.at(2022) == 2767.0);
  }

  SUBCASE("near-term above, long-term below the exponential projection") {
    const DemandProjection linear = project_linear(config, config.chain, {2022, 2028});
    const DemandProjection exponential =
        project_exponential(dominion_config(DemandModel::kExponential), {2022, 2028});
    CHECK(linear.demand_mw.at(2024) > exponential.demand_mw.at(2024));
    CHECK(linear.demand_mw.at(2025) > exponential.demand_mw.at(2025));
    CHECK(linear.demand_mw.at(2028) < exponential.demand_mw.at(2028));
  }

  SUBCASE("zero quarterly growth flattens the additions") {
    DemandModelConfig flat = config;
    flat.linear_quarterly_revenue_growth_usd = 0.0;
    const DemandProjection p = project_linear(flat, flat.chain, {2022, 2028});
    // Once the anchors are exhausted the revenue run rate is constant, so
    // demand grows by the cloud baseline alone.
    const double cloud = flat.cloud_cagr;
    for (int year = 2026; year < 2028; ++year) {
      const double implied_growth = p.demand_mw.at(year + 1) - p.demand_mw.at(year);
      const double baseline_growth =
          flat.base_capacity_mw * (std::pow(1.0 + cloud, year + 1 - 2022) -
                                   std::pow(1.0 + cloud, year - 2022));
      CHECK(implied_growth == doctest::Approx(baseline_growth).epsilon(1e-9));
    }
  }

  SUBCASE("anchors must be consecutive quarters") {
    DemandModelConfig bad = config;
    bad.linear_anchor_quarters[2].quarter = {2024, 2};
    CHECK_THROWS_AS(project_linear(bad, bad.chain, {2022, 2028}), std::invalid_argument);
  }

  SUBCASE("empty anchors are rejected") {
    DemandModelConfig bad = config;
    bad.linear_anchor_quarters.clear();
    CHECK_THROWS_AS(project_linear(bad, bad.chain, {2022, 2028}), std::invalid_argument);
  }
}

TEST_CASE("projection values never fall below base under positive growth") {
  DemandModelConfig config = dominion_config(DemandModel::kExponential);
  const DemandProjection p = project_exponential(config, {2022, 2030});
  double previous = 0.0;
  for (const auto& [year, mw] : p.demand_mw) {
    CHECK(mw >= config.base_capacity_mw);
    CHECK(mw >= previous);
    previous = mw;
  }
}
