#include "gridra/timeseries.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gridra/calendar.hpp"

namespace gridra {

namespace {

bool interval_is_day_aligned(int interval_minutes) {
  if (interval_minutes <= 0) return false;
  if (60 % interval_minutes == 0) return true;
  return interval_minutes % 60 == 0 && 1440 % interval_minutes == 0;
}

double parse_mw_field(std::string_view field, std::size_t row, const char* column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw TraceParseError(row, std::string("malformed ") + column + " value \"" +
                                   std::string(field) + "\"");
  }
  if (!std::isfinite(value)) {
    throw TraceParseError(row, std::string("non-finite ") + column + " value");
  }
  if (value < 0.0) {
    throw TraceParseError(row, std::string("negative MW in ") + column);
  }
  return value;
}

}  // namespace

double TimeSeries::energy_mwh() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * interval_minutes / 60.0;
}

void TimeSeries::validate_full_year() const {
  if (!interval_is_day_aligned(interval_minutes)) {
    throw std::invalid_argument("interval of " + std::to_string(interval_minutes) +
                                " minutes must divide 60 or be a multiple of 60 "
                                "dividing a day");
  }
  const std::int64_t expected = minutes_in_year(year) / interval_minutes;
  if (static_cast<std::int64_t>(values.size()) != expected) {
    throw std::invalid_argument(
        "series for year " + std::to_string(year) + " has " +
        std::to_string(values.size()) + " values, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw std::invalid_argument("value at index " + std::to_string(i) +
                                  " is negative or non-finite");
    }
  }
}

bool same_shape(const TimeSeries& a, const TimeSeries& b) {
  return a.year == b.year && a.interval_minutes == b.interval_minutes &&
         a.values.size() == b.values.size();
}

void BaseYearTraces::validate() const {
  total_load.validate_full_year();
  wind_gen.validate_full_year();
  solar_gen.validate_full_year();
  if (!same_shape(total_load, wind_gen) || !same_shape(total_load, solar_gen)) {
    throw std::invalid_argument("trace series must share year and interval");
  }
  if (dc_load_base_mw < 0.0 || wind_cap_base_mw < 0.0 || solar_cap_base_mw < 0.0) {
    throw std::invalid_argument("base capacities must be >= 0");
  }
  auto has_positive = [](const TimeSeries& s) {
    for (double v : s.values)
      if (v > 0.0) return true;
    return false;
  };
  if (wind_cap_base_mw == 0.0 && has_positive(wind_gen)) {
    throw std::invalid_argument("wind trace has generation but wind_cap_base_mw is 0");
  }
  if (solar_cap_base_mw == 0.0 && has_positive(solar_gen)) {
    throw std::invalid_argument("solar trace has generation but solar_cap_base_mw is 0");
  }
}

BaseYearTraces parse_trace(std::istream& source, const TraceContext& context) {
  static constexpr std::string_view kHeader = "timestamp,total_load_mw,wind_mw,solar_mw";

  std::string line;
  std::size_t row = 1;
  if (!std::getline(source, line)) {
    throw TraceParseError(1, "empty trace file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) {
    throw TraceParseError(1, "header must be \"" + std::string(kHeader) + "\"");
  }

  TimeSeries load;
  TimeSeries wind;
  TimeSeries solar;
  std::int64_t first_minute = 0;
  std::int64_t prev_minute = 0;
  std::int64_t interval = 0;

  while (std::getline(source, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      // A blank final line is common; anything else is a schema violation.
      if (source.peek() == std::char_traits<char>::eof()) break;
      throw TraceParseError(row, "blank row");
    }

    std::string_view fields[4];
    std::string_view rest = line;
    for (int i = 0; i < 4; ++i) {
      const std::size_t comma = rest.find(',');
      if (i < 3) {
        if (comma == std::string_view::npos) {
          throw TraceParseError(row, "expected 4 comma-separated fields");
        }
        fields[i] = rest.substr(0, comma);
        rest.remove_prefix(comma + 1);
      } else {
        if (comma != std::string_view::npos) {
          throw TraceParseError(row, "expected 4 comma-separated fields");
        }
        fields[i] = rest;
      }
    }

    std::int64_t minute = 0;
    try {
      minute = parse_utc_timestamp_minutes(fields[0]);
    } catch (const std::invalid_argument& e) {
      throw TraceParseError(row, e.what());
    }

    const std::size_t n = load.values.size();
    if (n == 0) {
      first_minute = minute;
    } else if (n == 1) {
      interval = minute - prev_minute;
      if (interval <= 0) throw TraceParseError(row, "non-increasing timestamp");
    } else {
      const std::int64_t gap = minute - prev_minute;
      if (gap <= 0) throw TraceParseError(row, "non-increasing timestamp");
      if (gap != interval) {
        if (gap > interval && gap % interval == 0) {
          throw TraceParseError(row, "missing interval before this row");
        }
        throw TraceParseError(row, "non-constant interval (" + std::to_string(gap) +
                                       " min here vs " + std::to_string(interval) +
                                       " min inferred)");
      }
    }
    prev_minute = minute;

    load.values.push_back(parse_mw_field(fields[1], row, "total_load_mw"));
    wind.values.push_back(parse_mw_field(fields[2], row, "wind_mw"));
    solar.values.push_back(parse_mw_field(fields[3], row, "solar_mw"));
  }

  if (load.values.size() < 2) {
    throw TraceParseError(row, "trace needs at least 2 rows to infer the interval");
  }
  if (interval > static_cast<std::int64_t>(60) * 24) {
    throw TraceParseError(2, "interval of " + std::to_string(interval) +
                                 " minutes exceeds one day");
  }
  if (!interval_is_day_aligned(static_cast<int>(interval))) {
    throw TraceParseError(2, "interval of " + std::to_string(interval) +
                                 " minutes must divide 60 or be a multiple of 60 "
                                 "dividing a day");
  }

  const CivilDate start = civil_from_days(first_minute / 1440);
  const int year = start.year;
  if (first_minute != days_from_civil(year, 1, 1) * 1440) {
    throw TraceParseError(2, "trace must start at 00:00 UTC on January 1");
  }
  const std::int64_t expected_rows = minutes_in_year(year) / interval;
  if (static_cast<std::int64_t>(load.values.size()) != expected_rows) {
    throw TraceParseError(row, "wrong row count for year " + std::to_string(year) +
                                   ": got " + std::to_string(load.values.size()) +
                                   ", expected " + std::to_string(expected_rows));
  }

  for (TimeSeries* s : {&load, &wind, &solar}) {
    s->year = year;
    s->interval_minutes = static_cast<int>(interval);
  }

  BaseYearTraces traces;
  traces.total_load = std::move(load);
  traces.wind_gen = std::move(wind);
  traces.solar_gen = std::move(solar);
  traces.dc_load_base_mw = context.dc_load_base_mw;
  traces.wind_cap_base_mw = context.wind_cap_base_mw;
  traces.solar_cap_base_mw = context.solar_cap_base_mw;
  traces.validate();
  return traces;
}

BaseYearTraces parse_trace_file(const std::string& path, const TraceContext& context) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open trace file: " + path);
  }
  return parse_trace(in, context);
}

void write_trace_csv(std::ostream& out, const TimeSeries& total_load,
                     const TimeSeries& wind_gen, const TimeSeries& solar_gen) {
  if (!same_shape(total_load, wind_gen) || !same_shape(total_load, solar_gen)) {
    throw std::invalid_argument("trace series must share year and interval");
  }
  const std::int64_t start = days_from_civil(total_load.year, 1, 1) * 1440;
  out << "timestamp,total_load_mw,wind_mw,solar_mw\n";
  char buf[64];
  for (std::size_t t = 0; t < total_load.size(); ++t) {
    const std::int64_t minute =
        start + static_cast<std::int64_t>(t) * total_load.interval_minutes;
    std::snprintf(buf, sizeof(buf), ",%.3f,%.3f,%.3f", total_load.values[t],
                  wind_gen.values[t], solar_gen.values[t]);
    out << format_utc_timestamp(minute) << buf << '\n';
  }
}

TimeSeries scale_renewables(const TimeSeries& gen, double cap_base_mw,
                            double cap_future_mw) {
  if (!std::isfinite(cap_base_mw) || !std::isfinite(cap_future_mw) ||
      cap_base_mw < 0.0 || cap_future_mw < 0.0) {
    throw std::invalid_argument("capacities must be finite and >= 0");
  }
  if (cap_base_mw == 0.0) {
    for (double v : gen.values) {
      if (v > 0.0) {
        throw std::invalid_argument(
            "undefined scaling ratio: cap_base_mw is 0 but trace has generation");
      }
    }
    return gen;  // all-zero trace stays all-zero
  }
  const double ratio = cap_future_mw / cap_base_mw;
  if (ratio == 1.0) return gen;
  TimeSeries scaled = gen;
  for (double& v : scaled.values) v *= ratio;
  return scaled;
}

ScaledLoad scale_nondc_load(const BaseYearTraces& traces, double nondc_growth_factor) {
  if (!std::isfinite(nondc_growth_factor) || nondc_growth_factor < 0.0) {
    throw std::invalid_argument("nondc_growth_factor must be finite and >= 0");
  }
  ScaledLoad out;
  out.series.year = traces.total_load.year;
  out.series.interval_minutes = traces.total_load.interval_minutes;
  out.series.values.reserve(traces.total_load.size());
  for (double total : traces.total_load.values) {
    const double nondc = total - traces.dc_load_base_mw;
    if (nondc < 0.0) {
      ++out.clamped_intervals;
      out.series.values.push_back(0.0);
    } else {
      out.series.values.push_back(nondc * nondc_growth_factor);
    }
  }
  return out;
}

}  // namespace gridra
