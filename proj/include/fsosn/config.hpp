#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fsosn/geometry.hpp"
#include "fsosn/links.hpp"
#include "fsosn/orbital.hpp"
#include "fsosn/scenario.hpp"

namespace fsosn {

// One inter-continental connection, expanded into a ScenarioConfig per
// (range, mode).
struct ScenarioSpec {
    std::string name;
    std::string src;
    std::string dst;
    std::vector<double> ranges_km;
    std::vector<NetworkMode> modes{NetworkMode::NG, NetworkMode::NNG};
    int slot_count = 3'600;
    double slot_duration_s = 1.0;
};

struct RunConfig {
    ConstellationSpec constellation;
    SimulationEpoch epoch;
    PhysicalConstants constants;
    double permanence_step_s = 1.0;
    std::vector<GroundStation> stations;
    std::vector<ScenarioSpec> scenarios;
    std::filesystem::path output_dir = "results";
    unsigned parallelism = 0;  // 0: hardware concurrency

    // Throws ConfigError on any broken invariant.
    void validate() const;

    const GroundStation& station(std::string_view name) const;
    // Throws ConfigError for an unknown scenario name.
    const ScenarioSpec& scenario(std::string_view name) const;
    std::vector<ScenarioConfig> expand(const ScenarioSpec& spec) const;
};

// Defaults: Starlink Phase I, 10 ms node delay, bundled stations and the four
// inter-continental scenarios.
RunConfig default_config();

// JSON document; an empty or whitespace-only document yields the defaults.
// Relative stations_file / output_dir paths resolve against base_dir.
// Throws ConfigError naming the offending key path.
RunConfig parse_config_text(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig parse_config(const std::filesystem::path& path);

// Human-readable list of every key with its default, for --help.
std::string describe_config_keys();

}  // namespace fsosn
