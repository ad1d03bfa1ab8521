#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gridra {

bool is_leap_year(int year);
int days_in_year(int year);
std::int64_t minutes_in_year(int year);
int days_in_month(int year, int month);

struct CivilDate {
  int year = 0;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
};

// Days since 1970-01-01 (proleptic Gregorian).
std::int64_t days_from_civil(int year, int month, int day);
CivilDate civil_from_days(std::int64_t days);

// Strict ISO-8601 UTC instant, e.g. "2022-01-01T00:00:00Z" (also accepts a
// "+00:00" suffix). Returns minutes since the Unix epoch. Throws
// std::invalid_argument on any other shape, value out of range, or non-UTC
// offset.
std::int64_t parse_utc_timestamp_minutes(std::string_view text);

std::string format_utc_timestamp(std::int64_t epoch_minutes);

// Month (1..12) that a zero-based day-of-year falls in.
int month_of_yday(int year, int yday);

}  // namespace gridra
