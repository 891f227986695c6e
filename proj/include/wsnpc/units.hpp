#pragma once

#include <cmath>
#include <limits>

namespace wsnpc {

// Scheduling math runs in years, energy math in seconds.
inline constexpr double kSecondsPerYear = 31'536'000.0;  // 365 days
inline constexpr double kHoursPerYear = 8'760.0;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline double per_hour_to_per_year(double rate_per_hour) {
  return rate_per_hour * kHoursPerYear;
}

inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

/// Floor of a non-negative ratio that tolerates representation error, so a
/// quotient like 10/1 computed as 9.999999999999998 still yields 10.
inline long long guarded_floor(double x) {
  if (!(x > 0.0)) return 0;
  return static_cast<long long>(std::floor(x * (1.0 + 1e-12)));
}

}  // namespace wsnpc
