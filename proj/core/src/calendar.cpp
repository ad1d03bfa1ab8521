#include "gridra/calendar.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace gridra {

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_year(int year) { return is_leap_year(year) ? 366 : 365; }

std::int64_t minutes_in_year(int year) {
  return static_cast<std::int64_t>(days_in_year(year)) * 1440;
}

int days_in_month(int year, int month) {
  static constexpr int common[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return common[month - 1];
}

// Howard Hinnant's days-from-civil algorithm.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

namespace {

int parse_fixed_int(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  const char* first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc{} || ptr != first + len) {
    throw std::invalid_argument("malformed timestamp: " + std::string(text));
  }
  return value;
}

}  // namespace

std::int64_t parse_utc_timestamp_minutes(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SS followed by "Z" or "+00:00".
  if (text.size() < 20 || text[4] != '-' || text[7] != '-' || text[10] != 'T' ||
      text[13] != ':' || text[16] != ':') {
    throw std::invalid_argument("malformed timestamp: " + std::string(text));
  }
  const std::string_view suffix = text.substr(19);
  if (suffix != "Z" && suffix != "+00:00") {
    throw std::invalid_argument("timestamp must be UTC (\"Z\" or \"+00:00\"): " +
                                std::string(text));
  }
  const int year = parse_fixed_int(text, 0, 4);
  const int month = parse_fixed_int(text, 5, 2);
  const int day = parse_fixed_int(text, 8, 2);
  const int hour = parse_fixed_int(text, 11, 2);
  const int minute = parse_fixed_int(text, 14, 2);
  const int second = parse_fixed_int(text, 17, 2);
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month) ||
      hour > 23 || minute > 59 || second > 59) {
    throw std::invalid_argument("timestamp value out of range: " + std::string(text));
  }
  if (second != 0) {
    throw std::invalid_argument("timestamp must fall on a whole minute: " +
                                std::string(text));
  }
  return days_from_civil(year, month, day) * 1440 + hour * 60 + minute;
}

std::string format_utc_timestamp(std::int64_t epoch_minutes) {
  std::int64_t days = epoch_minutes / 1440;
  std::int64_t rem = epoch_minutes % 1440;
  if (rem < 0) {
    rem += 1440;
    days -= 1;
  }
  const CivilDate date = civil_from_days(days);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:00Z", date.year, date.month,
                date.day, static_cast<int>(rem / 60), static_cast<int>(rem % 60));
  return buf;
}

int month_of_yday(int year, int yday) {
  int month = 1;
  int remaining = yday;
  while (remaining >= days_in_month(year, month)) {
    remaining -= days_in_month(year, month);
    ++month;
  }
  return month;
}

}  // namespace gridra
