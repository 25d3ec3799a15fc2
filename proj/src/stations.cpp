#include "fsosn/stations.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "fsosn/errors.hpp"

namespace fsosn {

const std::vector<GroundStation>& bundled_stations() {
    static const std::vector<GroundStation> stations{
        {"Sydney", -33.8614, 151.2099, 1000.0},   // ASX
        {"SaoPaulo", -23.5475, -46.6361, 1000.0},  // B3
        {"Toronto", 43.6489, -79.3817, 1000.0},    // TSX
        {"Istanbul", 41.1065, 29.0278, 1000.0},    // Borsa Istanbul
        {"Madrid", 40.4168, -3.7038, 1000.0},      // BME
        {"Tokyo", 35.6795, 139.7770, 1000.0},      // TSE
        {"NewYork", 40.7069, -74.0113, 1000.0},    // NYSE
        {"Jakarta", -6.2241, 106.8076, 1000.0},    // IDX
    };
    return stations;
}

const GroundStation& find_station(std::span<const GroundStation> stations, std::string_view name) {
    const auto it = std::find_if(stations.begin(), stations.end(), [&](const GroundStation& gs) { return gs.name == name; });
    if (it == stations.end()) throw LookupError(fmt::format("unknown ground station '{}'", name));
    return *it;
}

}  // namespace fsosn
