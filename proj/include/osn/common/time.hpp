#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace osn {

/// Post creation times and query bounds. UTC, second resolution.
using Timestamp = std::chrono::sys_seconds;

/// Wall-clock instants used by the cache, rate limiter and audit log.
using Instant = std::chrono::time_point<std::chrono::system_clock, std::chrono::milliseconds>;

Instant now_instant();

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS" with optional fractional
// seconds and a "Z" or "+HH:MM"/"-HH:MM" suffix. No suffix means UTC.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601(Timestamp t);
std::string format_iso8601(Instant t);  // millisecond precision

/// "YYYYMMDD" of the UTC date.
std::string format_compact_date(Instant t);

}  // namespace osn
