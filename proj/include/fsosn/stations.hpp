#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fsosn/orbital.hpp"

namespace fsosn {

// Stock-exchange locations used by the inter-continental scenarios; all with
// a 1,000 km reach.
const std::vector<GroundStation>& bundled_stations();

// Throws LookupError when no station has that name.
const GroundStation& find_station(std::span<const GroundStation> stations, std::string_view name);

}  // namespace fsosn
