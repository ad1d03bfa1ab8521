#include <benchmark/benchmark.h>

#include <sstream>

#include "gridra/adequacy.hpp"
#include "gridra/qos_dispatch.hpp"
#include "gridra/synthetic.hpp"
#include "gridra/timeseries.hpp"

namespace {

using namespace gridra;

// One 15-minute year shaped like the EirGrid fixture.
AdequacyInputs year_instance() {
  SyntheticTraceSpec spec;
  spec.seed = 11;
  spec.year = 2022;
  spec.interval_minutes = 15;
  spec.dc_load_base_mw = 600.0;
  spec.load.base_mw = 4000.0;
  spec.load.winter_amplitude = 0.3;
  spec.load.daily_amplitude = 0.14;
  spec.wind.cap_mw = 4500.0;
  spec.solar.cap_mw = 300.0;
  const BaseYearTraces traces = generate_traces(spec);

  AdequacyInputs in;
  in.nondc_load = traces.total_load;
  for (auto& v : in.nondc_load.values) v -= 600.0;
  in.wind = traces.wind_gen;
  in.solar = traces.solar_gen;
  in.firm_mw = 6200.0;
  in.interval_minutes = 15;
  in.lole_standard_hours = 8.0;
  return in;
}

void BM_assess_year(benchmark::State& state) {
  const AdequacyInputs in = year_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assess(in, 800.0).lole_hours);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(in.interval_count()));
}
BENCHMARK(BM_assess_year);

void BM_dc_limit_year(benchmark::State& state) {
  const AdequacyInputs in = year_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dc_limit(in).mw);
  }
}
BENCHMARK(BM_dc_limit_year);

void BM_qos_limit_flex_year(benchmark::State& state) {
  const AdequacyInputs in = year_instance();
  const QosScheme flex = flex_scheme(0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qos_limit(in, 600.0, flex).new_dc_mw);
  }
}
BENCHMARK(BM_qos_limit_flex_year);

void BM_dispatch_year(benchmark::State& state) {
  const AdequacyInputs in = year_instance();
  const QosScheme flex = flex_scheme(0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dispatch(in, 600.0, 900.0, flex).outage_hours);
  }
}
BENCHMARK(BM_dispatch_year);

void BM_parse_trace_year(benchmark::State& state) {
  SyntheticTraceSpec spec;
  spec.seed = 12;
  spec.interval_minutes = 15;
  spec.load.base_mw = 4000.0;
  spec.wind.cap_mw = 4500.0;
  spec.solar.cap_mw = 300.0;
  const BaseYearTraces traces = generate_traces(spec);
  std::ostringstream csv;
  write_trace_csv(csv, traces.total_load, traces.wind_gen, traces.solar_gen);
  const std::string text = csv.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(parse_trace(in, {0.0, 4500.0, 300.0}));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_parse_trace_year);

}  // namespace

BENCHMARK_MAIN();
