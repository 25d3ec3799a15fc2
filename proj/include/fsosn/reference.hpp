#pragma once

#include <array>

namespace fsosn::reference {

// Published connectivity census for the first satellite of the first plane
// of Starlink Phase I (24 x 66 at 550 km, 53 deg).
inline constexpr std::array<double, 7> kLislRangesKm{659.5, 1319.0, 1500.0, 1700.0, 2500.0, 3500.0, 5016.0};
inline constexpr std::array<int, 7> kPermanentDegree{2, 4, 6, 10, 18, 42, 88};
inline constexpr std::array<int, 7> kEquatorDegree{4, 8, 12, 22, 38, 88, 180};
inline constexpr std::array<int, 7> kNorthDegree{8, 29, 33, 40, 70, 117, 209};
inline constexpr double kNorthLatitudeDeg = 47.33;

// Network-wide link counts at the first slot (NG, NNG).
inline constexpr std::array<int, 7> kNgLinks{4'756, 7'932, 11'100, 17'436, 30'108, 68'124, 140'998};
inline constexpr std::array<int, 7> kNngLinks{10'444, 31'176, 38'784, 48'180, 94'116, 175'788, 335'928};

// Sydney - Sao Paulo, averages over slots with a path. NG has no path at the two shortest ranges.
inline constexpr std::array<double, 7> kNgAvgLatencyMs{0.0, 0.0, 188.44, 180.78, 142.37, 112.11, 91.65};
inline constexpr std::array<double, 7> kNngAvgLatencyMs{299.04, 172.33, 171.61, 157.35, 124.17, 109.19, 90.89};
inline constexpr std::array<double, 7> kNgAvgHops{0.0, 0.0, 13.54, 12.83, 9.00, 6.00, 4.00};
inline constexpr std::array<double, 7> kNngAvgHops{24.46, 12.00, 11.94, 10.51, 7.19, 5.75, 4.00};
inline constexpr std::array<int, 7> kNgPathSlots{0, 0, 3'600, 3'600, 3'600, 3'600, 3'600};
inline constexpr std::array<int, 7> kNngPathSlots{2'103, 3'600, 3'600, 3'600, 3'600, 3'600, 3'600};

// Terrestrial great-circle distances on a 6,378 km sphere.
inline constexpr double kTorontoIstanbulKm = 8'198.0;
inline constexpr double kMadridTokyoKm = 10'778.0;
inline constexpr double kNewYorkJakartaKm = 16'198.0;

}  // namespace fsosn::reference
