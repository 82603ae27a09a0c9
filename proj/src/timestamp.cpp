#include "pathmine/timestamp.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace pathmine {

namespace {

bool read_digits(std::string_view s, std::size_t& pos, int count, int& out) {
  if (pos + count > s.size()) return false;
  int value = 0;
  for (int i = 0; i < count; ++i) {
    char c = s[pos + i];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  pos += count;
  out = value;
  return true;
}

bool consume(std::string_view s, std::size_t& pos, char c) {
  if (pos < s.size() && s[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  std::string_view s = trim(text);
  std::size_t pos = 0;

  int y = 0, mo = 0, d = 0;
  if (!read_digits(s, pos, 4, y)) return std::nullopt;
  if (!consume(s, pos, '-')) return std::nullopt;
  if (!read_digits(s, pos, 2, mo)) return std::nullopt;
  if (!consume(s, pos, '-')) return std::nullopt;
  if (!read_digits(s, pos, 2, d)) return std::nullopt;

  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;

  int h = 0, mi = 0, sec = 0;
  long micros = 0;
  long offset_minutes = 0;

  if (pos < s.size()) {
    if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ') return std::nullopt;
    ++pos;
    if (!read_digits(s, pos, 2, h)) return std::nullopt;
    if (!consume(s, pos, ':')) return std::nullopt;
    if (!read_digits(s, pos, 2, mi)) return std::nullopt;
    if (consume(s, pos, ':')) {
      if (!read_digits(s, pos, 2, sec)) return std::nullopt;
      if (consume(s, pos, '.')) {
        long scale = 100000;
        bool any = false;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]))) {
          if (scale > 0) micros += (s[pos] - '0') * scale;
          scale /= 10;
          ++pos;
          any = true;
        }
        if (!any) return std::nullopt;
      }
    }
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;

    if (pos < s.size()) {
      char z = s[pos];
      if (z == 'Z' || z == 'z') {
        ++pos;
      } else if (z == '+' || z == '-') {
        ++pos;
        int oh = 0, om = 0;
        if (!read_digits(s, pos, 2, oh)) return std::nullopt;
        consume(s, pos, ':');
        if (pos < s.size()) {
          if (!read_digits(s, pos, 2, om)) return std::nullopt;
        }
        if (oh > 14 || om > 59) return std::nullopt;
        offset_minutes = oh * 60L + om;
        if (z == '-') offset_minutes = -offset_minutes;
      } else {
        return std::nullopt;
      }
    }
  }
  if (pos != s.size()) return std::nullopt;

  sys_days date{ymd};
  auto local = date.time_since_epoch() + hours{h} + minutes{mi} +
               seconds{sec} + microseconds{micros};
  auto utc = duration_cast<microseconds>(local) - minutes{offset_minutes};
  return Timestamp{utc};
}

std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  auto us_total = t.time_since_epoch();
  auto days_part = floor<days>(us_total);
  year_month_day ymd{sys_days{days_part}};
  auto tod = us_total - days_part;
  auto h = duration_cast<hours>(tod);
  tod -= h;
  auto mi = duration_cast<minutes>(tod);
  tod -= mi;
  auto sec = duration_cast<seconds>(tod);
  tod -= sec;
  long frac = static_cast<long>(tod.count());

  char buf[48];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(h.count()),
                static_cast<int>(mi.count()), static_cast<int>(sec.count()));
  std::string out(buf);
  if (frac != 0) {
    std::snprintf(buf, sizeof(buf), ".%06ld", frac);
    std::string f(buf);
    while (f.back() == '0') f.pop_back();
    out += f;
  }
  out += 'Z';
  return out;
}

double duration_seconds(Duration d) {
  return static_cast<double>(d.count()) / 1e6;
}

std::string format_duration(Duration d) {
  double s = duration_seconds(d);
  char buf[32];
  if (s >= 48.0 * 3600.0) {
    std::snprintf(buf, sizeof(buf), "%.1fd", s / 86400.0);
  } else if (s >= 2.0 * 3600.0) {
    std::snprintf(buf, sizeof(buf), "%.1fh", s / 3600.0);
  } else if (s >= 120.0) {
    std::snprintf(buf, sizeof(buf), "%.1fm", s / 60.0);
  } else {
    std::snprintf(buf, sizeof(buf), "%.0fs", s);
  }
  return std::string(buf);
}

}  // namespace pathmine
