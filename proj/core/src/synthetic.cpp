#include "gridra/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "gridra/calendar.hpp"

namespace gridra {

namespace {

constexpr double kTau = 6.283185307179586;

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [-1, 1).
  double symmetric() {
    return (next() >> 11) * 0x1.0p-52 - 1.0;
  }
};

// Mean-zero AR(1) stream with the requested correlation time, output scaled
// so its stationary deviation is `amplitude`.
struct Ar1Noise {
  SplitMix64 rng;
  double rho;
  double scale;
  double state = 0.0;

  Ar1Noise(std::uint64_t seed, double correlation_hours, double interval_minutes,
           double amplitude)
      : rng(seed),
        rho(correlation_hours > 0.0
                ? std::exp(-(interval_minutes / 60.0) / correlation_hours)
                : 0.0),
        scale(amplitude * std::sqrt(std::max(0.0, 1.0 - rho * rho))) {}

  double next() {
    state = rho * state + scale * rng.symmetric();
    return state;
  }
};

}  // namespace

BaseYearTraces generate_traces(const SyntheticTraceSpec& spec) {
  const std::int64_t total_minutes = minutes_in_year(spec.year);
  const auto n = static_cast<std::size_t>(total_minutes / spec.interval_minutes);
  const double minutes_per_day = 1440.0;
  const double days = static_cast<double>(days_in_year(spec.year));

  TimeSeries load{spec.year, spec.interval_minutes, std::vector<double>(n)};
  TimeSeries wind{spec.year, spec.interval_minutes, std::vector<double>(n)};
  TimeSeries solar{spec.year, spec.interval_minutes, std::vector<double>(n)};

  Ar1Noise load_noise(spec.seed * 3 + 1, spec.load.noise_hours, spec.interval_minutes,
                      spec.load.noise);
  Ar1Noise wind_noise(spec.seed * 3 + 2, spec.wind.noise_hours, spec.interval_minutes,
                      spec.wind.noise);
  Ar1Noise solar_noise(spec.seed * 3 + 3, spec.solar.noise_hours, spec.interval_minutes,
                       spec.solar.noise);

  for (std::size_t t = 0; t < n; ++t) {
    const double minute = static_cast<double>(t) * spec.interval_minutes;
    const double hour_of_day = std::fmod(minute, minutes_per_day) / 60.0;
    const double year_frac = minute / (days * minutes_per_day);
    // +1 around New Year, -1 at midsummer.
    const double winter = std::cos(kTau * year_frac);
    // Evening peak near 18:00, trough near 06:00.
    const double diurnal = -std::cos(kTau * (hour_of_day - 6.0) / 24.0);
    const double winter_load =
        spec.load.winter_sharpness == 1.0
            ? winter
            : std::copysign(std::pow(std::abs(winter), spec.load.winter_sharpness),
                            winter);

    const double load_mw =
        spec.load.base_mw * (1.0 + spec.load.winter_amplitude * winter_load +
                             spec.load.daily_amplitude * diurnal + load_noise.next());
    load.values[t] = std::max(0.0, load_mw) + spec.dc_load_base_mw;

    if (spec.wind.cap_mw > 0.0) {
      const double cf = spec.wind.mean_capacity_factor *
                            (1.0 + spec.wind.winter_boost * winter) +
                        wind_noise.next();
      wind.values[t] = spec.wind.cap_mw * std::clamp(cf, 0.0, 1.0);
    }

    if (spec.solar.cap_mw > 0.0) {
      const double day_hours =
          0.5 * (spec.solar.summer_day_hours + spec.solar.winter_day_hours) -
          0.5 * (spec.solar.summer_day_hours - spec.solar.winter_day_hours) * winter;
      const double sunrise = 12.0 - day_hours / 2.0;
      const double elevation =
          day_hours > 0.0 ? std::sin((hour_of_day - sunrise) / day_hours * kTau / 2.0)
                          : 0.0;
      if (hour_of_day > sunrise && hour_of_day < sunrise + day_hours &&
          elevation > 0.0) {
        const double cf = spec.solar.noon_capacity_factor * elevation *
                          (1.0 + solar_noise.next());
        solar.values[t] = spec.solar.cap_mw * std::clamp(cf, 0.0, 1.0);
      } else {
        solar_noise.next();  // keep the stream position independent of daylight
      }
    }
  }

  BaseYearTraces traces;
  traces.total_load = std::move(load);
  traces.wind_gen = std::move(wind);
  traces.solar_gen = std::move(solar);
  traces.dc_load_base_mw = spec.dc_load_base_mw;
  traces.wind_cap_base_mw = spec.wind.cap_mw;
  traces.solar_cap_base_mw = spec.solar.cap_mw;
  traces.validate();
  return traces;
}

}  // namespace gridra
