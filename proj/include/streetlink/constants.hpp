#pragma once

namespace streetlink {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

} // namespace streetlink
