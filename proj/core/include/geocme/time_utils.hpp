#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace geocme {

/// Seconds since the Unix epoch, UTC. All catalog, archive and dataset
/// timestamps are carried in this form.
using UtcSeconds = std::int64_t;

struct CivilTime {
  int year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
};

UtcSeconds utc_from_civil(const CivilTime& c);
CivilTime civil_from_utc(UtcSeconds t);

/// ISO-8601: "2002-09-17T08:06:00Z".
std::string format_utc(UtcSeconds t);

/// Accepts "YYYY-MM-DDTHH:MM:SS[Z]", "YYYY-MM-DD HH:MM[:SS]",
/// "YYYY/MM/DD HH:MM[:SS]" and bare dates. Returns nullopt when the text is
/// not a timestamp or the civil fields are out of range.
std::optional<UtcSeconds> parse_utc(std::string_view text);

int utc_year(UtcSeconds t);

constexpr UtcSeconds minutes(std::int64_t m) { return m * 60; }
constexpr UtcSeconds hours(std::int64_t h) { return h * 3600; }
constexpr UtcSeconds days(std::int64_t d) { return d * 86400; }

}  // namespace geocme
