#include "gridra/adequacy.hpp"

#include <vector>

#include "doctest.h"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace gridra;

namespace {

AdequacyInputs flat_inputs(std::size_t n, int interval_minutes, double nondc,
                           double renew, double firm, double standard_hours) {
  AdequacyInputs in;
  in.nondc_load = TimeSeries{2022, interval_minutes, std::vector<double>(n, nondc)};
  in.wind = TimeSeries{2022, interval_minutes, std::vector<double>(n, renew)};
  in.solar = TimeSeries{2022, interval_minutes, std::vector<double>(n, 0.0)};
  in.firm_mw = firm;
  in.interval_minutes = interval_minutes;
  in.lole_standard_hours = standard_hours;
  return in;
}

}  // namespace

TEST_CASE("shortage_indicator is a strict comparison") {
  CHECK_FALSE(shortage_indicator(1000.0, 300.0, 700.0));  // exact balance
  CHECK(shortage_indicator(1000.01, 300.0, 700.0));
  CHECK_FALSE(shortage_indicator(0.0, 0.0, 0.0));
}

TEST_CASE("assess counts shortages per the power-balance rule") {
  AdequacyInputs in = flat_inputs(4, 15, 10.0, 0.0, 10.0, 8.0);

  SUBCASE("exact balance never trips") {
    const AdequacyResult r = assess(in, 0.0);
    CHECK(r.lole_hours == 0.0);
    CHECK(r.shortage_intervals == 0);
  }

  SUBCASE("one extra megawatt floods all four intervals") {
    const AdequacyResult r = assess(in, 1.0);
    CHECK(r.shortage_intervals == 4);
    CHECK(r.lole_hours == doctest::Approx(1.0));  // 4 x 15 min
    for (std::size_t t = 0; t < 4; ++t) {
      CHECK(r.shortage_flags[t] == 1);
      CHECK(r.deficit_mw[t] == doctest::Approx(1.0));
    }
  }

  SUBCASE("deficit is positive exactly where flagged") {
    in.nondc_load.values = {5.0, 25.0, 10.0, 30.0};
    const AdequacyResult r = assess(in, 0.0);
    for (std::size_t t = 0; t < 4; ++t) {
      CHECK((r.deficit_mw[t] > 0.0) == (r.shortage_flags[t] == 1));
    }
    CHECK(r.shortage_intervals == 2);
  }

  SUBCASE("misaligned series are rejected") {
    in.wind.values.pop_back();
    CHECK_THROWS_AS(assess(in, 0.0), std::invalid_argument);
  }
}

TEST_CASE("lole is monotone in the flat DC block and integer in intervals") {
  testsupport::Rng rng(2024);
  for (int iter = 0; iter < 30; ++iter) {
    const AdequacyInputs in = testsupport::random_instance(rng, 400);
    double previous = -1.0;
    for (double dc : {0.0, 50.0, 100.0, 200.0, 400.0, 800.0}) {
      const AdequacyResult r = assess(in, dc);
      CHECK(r.lole_hours >= previous);
      previous = r.lole_hours;
      const double intervals = r.lole_hours * 60.0 / in.interval_minutes;
      CHECK(intervals == doctest::Approx(std::round(intervals)));
      CHECK(count_shortage_intervals(in, dc) == r.shortage_intervals);
    }
  }
}

TEST_CASE("dc_limit on a flat system is the head-room") {
  // Flat year: shortage is all-or-nothing, so the limit is supply - load.
  const AdequacyInputs in = flat_inputs(8760, 60, 400.0, 0.0, 1000.0, 8.0);
  const DcLimit limit = dc_limit(in);
  CHECK_FALSE(limit.infeasible_at_zero);
  CHECK(limit.mw == doctest::Approx(600.0).epsilon(0.002));
}

TEST_CASE("dc_limit flags infeasibility with no supply") {
  const AdequacyInputs in = flat_inputs(100, 60, 50.0, 0.0, 0.0, 8.0);
  const DcLimit limit = dc_limit(in);
  CHECK(limit.infeasible_at_zero);
  CHECK(limit.mw == 0.0);
}

TEST_CASE("dc_limit matches the exhaustive scan and sits on the boundary") {
  testsupport::Rng rng(7);
  int compared = 0;
  for (int iter = 0; iter < 25; ++iter) {
    const AdequacyInputs in = testsupport::random_instance(rng, 500);
    const DcLimit limit = dc_limit(in);
    if (limit.infeasible_at_zero) {
      CHECK(oracle::scan_dc_limit(in, 4000) == -1);
      continue;
    }
    if (limit.bound_limited) continue;
    ++compared;
    const long scanned = oracle::scan_dc_limit(in, 4000);
    CHECK(std::abs(static_cast<double>(scanned) - limit.mw) <= 1.0);

    // Boundary property: feasible at L, infeasible at L + 2 MW.
    CHECK(assess(in, limit.mw).meets(in.lole_standard_hours));
    CHECK_FALSE(assess(in, limit.mw + 2.0).meets(in.lole_standard_hours));
  }
  CHECK(compared >= 10);
}

TEST_CASE("committed_limits is the suffix minimum") {
  SUBCASE("a dip caps everything before it") {
    const std::map<int, double> annual{{2023, 5.0}, {2024, 3.0}, {2025, 4.0}};
    const auto committed = committed_limits(annual);
    CHECK(committed.at(2023) == 3.0);
    CHECK(committed.at(2024) == 3.0);
    CHECK(committed.at(2025) == 4.0);
  }
  SUBCASE("monotone increasing limits are unchanged") {
    const std::map<int, double> annual{{2023, 1.0}, {2024, 2.0}, {2025, 3.0}};
    CHECK(committed_limits(annual) == annual);
  }
  SUBCASE("constant limits are unchanged") {
    const std::map<int, double> annual{{2023, 2.0}, {2024, 2.0}, {2025, 2.0}};
    CHECK(committed_limits(annual) == annual);
  }
  SUBCASE("empty and gapped inputs are rejected") {
    CHECK_THROWS_AS(committed_limits({}), std::invalid_argument);
    CHECK_THROWS_AS(committed_limits({{2023, 1.0}, {2025, 2.0}}), std::invalid_argument);
  }
  SUBCASE("recurrence committed[y] = min(annual[y], committed[y+1]) holds exactly") {
    testsupport::Rng rng(55);
    for (int iter = 0; iter < 50; ++iter) {
      std::map<int, double> annual;
      const int n = rng.uniform_int(1, 12);
      for (int y = 0; y < n; ++y) annual[2022 + y] = rng.uniform(0.0, 1000.0);
      const auto committed = committed_limits(annual);
      for (int y = 0; y < n; ++y) {
        const int year = 2022 + y;
        CHECK(committed.at(year) <= annual.at(year));
        const double expected =
            y + 1 < n ? std::min(annual.at(year), committed.at(year + 1))
                      : annual.at(year);
        CHECK(committed.at(year) == expected);
      }
    }
  }
}
