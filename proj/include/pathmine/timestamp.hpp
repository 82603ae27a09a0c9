#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pathmine {

using Timestamp = std::chrono::sys_time<std::chrono::microseconds>;
using Duration = std::chrono::microseconds;

// ISO-8601: `YYYY-MM-DD[T ]HH:MM[:SS[.frac]][Z|±HH:MM|±HHMM]` or a bare date.
// Timestamps without an offset are taken as UTC.
std::optional<Timestamp> parse_iso8601(std::string_view text);

// Canonical UTC form with 'Z'; fractional seconds only when nonzero.
std::string format_iso8601(Timestamp t);

double duration_seconds(Duration d);

// "42s", "3.5m", "2.1h", "4.0d" — coarsest unit that keeps the number small.
std::string format_duration(Duration d);

}  // namespace pathmine
