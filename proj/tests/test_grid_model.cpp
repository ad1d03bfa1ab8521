#include "gridra/grid_model.hpp"

#include "doctest.h"
#include "gridra/synthetic.hpp"
#include "support/instances.hpp"

using namespace gridra;

namespace {

GridScenario small_scenario() {
  SyntheticTraceSpec spec;
  spec.seed = 42;
  spec.year = 2022;
  spec.interval_minutes = 60;
  spec.dc_load_base_mw = 100.0;
  spec.load.base_mw = 900.0;
  spec.wind.cap_mw = 400.0;
  spec.solar.cap_mw = 200.0;

  GridScenario s;
  s.name = "test-grid";
  s.lole_standard_hours = 8.0;
  s.interval_minutes = 60;
  s.base = generate_traces(spec);
  s.dc_base_mw = 100.0;
  for (int year = 2022; year <= 2024; ++year) {
    YearResources plan;
    plan.year = year;
    plan.conventional_mw = 1000.0;
    plan.wind_mw = 400.0;
    plan.solar_mw = 200.0;
    plan.storage_mw = 100.0;
    plan.other_mw = 50.0;
    plan.derating = {0.75, 0.73};
    s.plans[year] = plan;
    s.nondc_growth[year] = 1.0;
  }
  return s;
}

}  // namespace

TEST_CASE("firm_capacity applies de-rating to conventional and storage only") {
  YearResources r;
  r.derating = {0.75, 0.73};

  SUBCASE("EirGrid conventional factor") {
    r.conventional_mw = 1000.0;
    CHECK(firm_capacity(r) == doctest::Approx(750.0));
  }
  SUBCASE("CAISO storage factor") {
    r.storage_mw = 1000.0;
    CHECK(firm_capacity(r) == doctest::Approx(730.0));
  }
  SUBCASE("empty plan") {
    CHECK(firm_capacity(r) == 0.0);
  }
  SUBCASE("other_mw passes through pre-de-rated; renewables never enter") {
    r.conventional_mw = 100.0;
    r.storage_mw = 100.0;
    r.other_mw = 55.0;
    r.wind_mw = 5000.0;
    r.solar_mw = 5000.0;
    CHECK(firm_capacity(r) == doctest::Approx(75.0 + 73.0 + 55.0));
  }
  SUBCASE("unit factors reduce to the plain sum") {
    r.derating = {1.0, 1.0};
    r.conventional_mw = 10.0;
    r.storage_mw = 20.0;
    r.other_mw = 30.0;
    CHECK(firm_capacity(r) == 60.0);
  }
}

TEST_CASE("firm_capacity is monotone in every capacity and factor") {
  testsupport::Rng rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    YearResources lo;
    lo.conventional_mw = rng.uniform(0.0, 1000.0);
    lo.storage_mw = rng.uniform(0.0, 1000.0);
    lo.other_mw = rng.uniform(0.0, 1000.0);
    lo.derating = {rng.uniform(), rng.uniform()};
    YearResources hi = lo;
    hi.conventional_mw += rng.uniform(0.0, 500.0);
    hi.storage_mw += rng.uniform(0.0, 500.0);
    hi.other_mw += rng.uniform(0.0, 500.0);
    hi.derating.conventional += rng.uniform() * (1.0 - hi.derating.conventional);
    hi.derating.storage += rng.uniform() * (1.0 - hi.derating.storage);
    CHECK(firm_capacity(hi) >= firm_capacity(lo));
  }
}

TEST_CASE("derating factors outside [0,1] are rejected") {
  YearResources r;
  r.derating = {1.2, 0.5};
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
  r.derating = {0.5, -0.1};
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
}

TEST_CASE("year_inputs composes scaling with the plan") {
  GridScenario s = small_scenario();

  SUBCASE("base year with unchanged capacities reproduces the base series") {
    const AdequacyInputs in = year_inputs(s, 2022);
    REQUIRE(in.nondc_load.size() == s.base.total_load.size());
    for (std::size_t t = 0; t < in.nondc_load.size(); ++t) {
      CHECK(in.nondc_load.values[t] == s.base.total_load.values[t] - 100.0);
    }
    CHECK(in.wind.values == s.base.wind_gen.values);
    CHECK(in.solar.values == s.base.solar_gen.values);
    CHECK(in.firm_mw == doctest::Approx(1000.0 * 0.75 + 100.0 * 0.73 + 50.0));
    CHECK(in.interval_minutes == 60);
    CHECK(in.lole_standard_hours == 8.0);
  }

  SUBCASE("doubling wind capacity exactly doubles the wind series") {
    s.plans[2023].wind_mw = 800.0;
    const AdequacyInputs in = year_inputs(s, 2023);
    for (std::size_t t = 0; t < in.wind.size(); ++t) {
      CHECK(in.wind.values[t] == 2.0 * s.base.wind_gen.values[t]);
    }
  }

  SUBCASE("years outside the plan are rejected") {
    CHECK_THROWS_WITH_AS(year_inputs(s, 2030), doctest::Contains("not in plan"),
                         std::out_of_range);
  }

  SUBCASE("identical calls are bit-identical") {
    const AdequacyInputs a = year_inputs(s, 2024);
    const AdequacyInputs b = year_inputs(s, 2024);
    CHECK(a.nondc_load.values == b.nondc_load.values);
    CHECK(a.wind.values == b.wind.values);
    CHECK(a.solar.values == b.solar.values);
    CHECK(a.firm_mw == b.firm_mw);
  }
}

TEST_CASE("scenario validation catches structural holes") {
  GridScenario s = small_scenario();

  SUBCASE("valid as built") { CHECK_NOTHROW(s.validate()); }

  SUBCASE("gap in plan years") {
    YearResources plan = s.plans[2024];
    plan.year = 2026;
    s.plans.erase(2024);
    s.plans[2026] = plan;
    s.nondc_growth[2026] = 1.0;
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("contiguous"),
                         std::invalid_argument);
  }

  SUBCASE("missing growth factor") {
    s.nondc_growth.erase(2023);
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("nondc_growth"),
                         std::invalid_argument);
  }

  SUBCASE("interval mismatch") {
    s.interval_minutes = 15;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }

  SUBCASE("non-positive LOLE standard") {
    s.lole_standard_hours = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
}
