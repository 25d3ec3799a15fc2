#include "fsosn/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "fsosn/errors.hpp"
#include "fsosn/reference.hpp"
#include "fsosn/stations.hpp"

namespace fsosn {

using nlohmann::json;

namespace {

std::vector<double> study_ranges() { return {reference::kLislRangesKm.begin(), reference::kLislRangesKm.end()}; }

std::vector<ScenarioSpec> default_scenarios() {
    ScenarioSpec ssp{"Sydney-SaoPaulo", "Sydney", "SaoPaulo", study_ranges()};
    const std::vector<double> two{1700.0, 5016.0};
    return {ssp,
            {"Toronto-Istanbul", "Toronto", "Istanbul", two},
            {"Madrid-Tokyo", "Madrid", "Tokyo", two},
            {"NewYork-Jakarta", "NewYork", "Jakarta", two}};
}

std::string join(std::string_view path, std::string_view key) {
    return path.empty() ? std::string(key) : fmt::format("{}.{}", path, key);
}

void reject_unknown(const json& obj, std::string_view path, std::initializer_list<std::string_view> known) {
    if (!obj.is_object()) throw ConfigError(fmt::format("{}: expected an object", path.empty() ? "<root>" : path));
    for (const auto& [key, value] : obj.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError(fmt::format("{}: unknown key", join(path, key)));
}

double read_number(const json& obj, std::string_view path, std::string_view key, double fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) return fallback;
    if (!it->is_number()) throw ConfigError(fmt::format("{}: expected a number", join(path, key)));
    return it->get<double>();
}

int read_int(const json& obj, std::string_view path, std::string_view key, int fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) return fallback;
    if (!it->is_number_integer()) throw ConfigError(fmt::format("{}: expected an integer", join(path, key)));
    return it->get<int>();
}

std::string read_string(const json& obj, std::string_view path, std::string_view key, std::string fallback) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) return fallback;
    if (!it->is_string()) throw ConfigError(fmt::format("{}: expected a string", join(path, key)));
    return it->get<std::string>();
}

const json* read_array(const json& obj, std::string_view path, std::string_view key) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end()) return nullptr;
    if (!it->is_array()) throw ConfigError(fmt::format("{}: expected an array", join(path, key)));
    return &*it;
}

std::vector<GroundStation> read_stations(const json& arr, std::string_view path) {
    std::vector<GroundStation> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = fmt::format("{}[{}]", path, i);
        const json& s = arr[i];
        reject_unknown(s, p, {"name", "latitude_deg", "longitude_deg", "range_km"});
        if (!s.contains("name")) throw ConfigError(fmt::format("{}.name: required", p));
        GroundStation gs;
        gs.name = read_string(s, p, "name", "");
        gs.latitude_deg = read_number(s, p, "latitude_deg", 0.0);
        gs.longitude_deg = read_number(s, p, "longitude_deg", 0.0);
        gs.range_km = read_number(s, p, "range_km", 1000.0);
        out.push_back(gs);
    }
    return out;
}

std::vector<GroundStation> read_stations_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError(fmt::format("stations_file: cannot read {}", file.string()));
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("stations_file {}: {}", file.string(), e.what()));
    }
    if (!doc.is_array()) throw ConfigError(fmt::format("stations_file {}: expected an array", file.string()));
    return read_stations(doc, "stations_file");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.stations = bundled_stations();
    cfg.scenarios = default_scenarios();
    return cfg;
}

void RunConfig::validate() const {
    constellation.validate();
    constants.validate();
    if (constellation.earth_radius_km != constants.earth_radius_km)
        throw ConfigError("constellation.earth_radius_km and constants.earth_radius_km disagree");
    if (!(permanence_step_s > 0.0)) throw ConfigError("permanence_step_s must be positive");

    std::set<std::string> names;
    for (std::size_t i = 0; i < stations.size(); ++i) {
        try {
            stations[i].validate();
        } catch (const ConfigError& e) {
            throw ConfigError(fmt::format("stations[{}]: {}", i, e.what()));
        }
        if (!names.insert(stations[i].name).second)
            throw ConfigError(fmt::format("stations[{}].name: duplicate station '{}'", i, stations[i].name));
    }

    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const ScenarioSpec& s = scenarios[i];
        const std::string p = fmt::format("scenarios[{}]", i);
        if (!names.count(s.src)) throw ConfigError(fmt::format("{}.src: unknown station '{}'", p, s.src));
        if (!names.count(s.dst)) throw ConfigError(fmt::format("{}.dst: unknown station '{}'", p, s.dst));
        if (s.src == s.dst) throw ConfigError(fmt::format("{}: src and dst must differ", p));
        if (s.ranges_km.empty()) throw ConfigError(fmt::format("{}.ranges_km: must not be empty", p));
        for (std::size_t r = 0; r < s.ranges_km.size(); ++r)
            if (!(s.ranges_km[r] > 0.0))
                throw ConfigError(fmt::format("{}.ranges_km[{}]: range must be positive", p, r));
        if (s.modes.empty()) throw ConfigError(fmt::format("{}.modes: must not be empty", p));
        if (s.slot_count < 1) throw ConfigError(fmt::format("{}.slot_count: must be >= 1", p));
        if (!(s.slot_duration_s > 0.0)) throw ConfigError(fmt::format("{}.slot_duration_s: must be positive", p));
        for (std::size_t j = 0; j < i; ++j)
            if (scenarios[j].name == s.name) throw ConfigError(fmt::format("{}.name: duplicate '{}'", p, s.name));
    }
}

const GroundStation& RunConfig::station(std::string_view name) const { return find_station(stations, name); }

const ScenarioSpec& RunConfig::scenario(std::string_view name) const {
    for (const ScenarioSpec& s : scenarios)
        if (s.name == name) return s;
    throw ConfigError(fmt::format("unknown scenario '{}'", name));
}

std::vector<ScenarioConfig> RunConfig::expand(const ScenarioSpec& spec) const {
    std::vector<double> ranges = spec.ranges_km;
    std::sort(ranges.begin(), ranges.end());
    std::vector<ScenarioConfig> out;
    for (double range : ranges)
        for (NetworkMode mode : spec.modes) {
            ScenarioConfig cfg;
            cfg.name = spec.name;
            cfg.src = station(spec.src);
            cfg.dst = station(spec.dst);
            cfg.lisl_range_km = range;
            cfg.mode = mode;
            cfg.slot_duration_s = spec.slot_duration_s;
            cfg.slot_count = spec.slot_count;
            cfg.node_delay_ms = constants.node_delay_ms;
            out.push_back(cfg);
        }
    return out;
}

RunConfig parse_config_text(std::string_view text, const std::filesystem::path& base_dir) {
    RunConfig cfg = default_config();
    if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); })) {
        cfg.validate();
        return cfg;
    }

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
    }
    reject_unknown(doc, "", {"constellation", "epoch", "constants", "permanence_step_s", "stations",
                             "stations_file", "scenarios", "output_dir", "parallelism"});

    std::optional<double> constellation_radius;
    if (doc.contains("constellation")) {
        const json& c = doc["constellation"];
        const std::string p = "constellation";
        reject_unknown(c, p, {"plane_count", "sats_per_plane", "altitude_km", "inclination_deg", "phasing_offset",
                              "raan_spread_deg", "earth_radius_km", "mu_km3s2"});
        ConstellationSpec& s = cfg.constellation;
        s.plane_count = read_int(c, p, "plane_count", s.plane_count);
        s.sats_per_plane = read_int(c, p, "sats_per_plane", s.sats_per_plane);
        s.altitude_km = read_number(c, p, "altitude_km", s.altitude_km);
        s.inclination_deg = read_number(c, p, "inclination_deg", s.inclination_deg);
        s.phasing_offset = read_int(c, p, "phasing_offset", s.phasing_offset);
        s.raan_spread_deg = read_number(c, p, "raan_spread_deg", s.raan_spread_deg);
        s.mu_km3s2 = read_number(c, p, "mu_km3s2", s.mu_km3s2);
        if (c.contains("earth_radius_km")) constellation_radius = read_number(c, p, "earth_radius_km", 0.0);
    }
    if (doc.contains("epoch")) {
        const json& e = doc["epoch"];
        reject_unknown(e, "epoch", {"start_offset_s", "earth_rotation_deg"});
        cfg.epoch.start_offset_s = read_number(e, "epoch", "start_offset_s", 0.0);
        cfg.epoch.earth_rotation_deg = read_number(e, "epoch", "earth_rotation_deg", 0.0);
    }
    std::optional<double> constants_radius;
    if (doc.contains("constants")) {
        const json& k = doc["constants"];
        reject_unknown(k, "constants", {"c_mps", "earth_radius_km", "occlusion_clearance_km", "node_delay_ms"});
        PhysicalConstants& c = cfg.constants;
        c.c_mps = read_number(k, "constants", "c_mps", c.c_mps);
        c.occlusion_clearance_km = read_number(k, "constants", "occlusion_clearance_km", c.occlusion_clearance_km);
        c.node_delay_ms = read_number(k, "constants", "node_delay_ms", c.node_delay_ms);
        if (k.contains("earth_radius_km")) constants_radius = read_number(k, "constants", "earth_radius_km", 0.0);
    }
    // One Earth radius governs both; supplying it in one section sets it for the other.
    if (constellation_radius && constants_radius && *constellation_radius != *constants_radius)
        throw ConfigError("constants.earth_radius_km: disagrees with constellation.earth_radius_km");
    if (const auto r = constellation_radius ? constellation_radius : constants_radius) {
        cfg.constellation.earth_radius_km = *r;
        cfg.constants.earth_radius_km = *r;
    }

    cfg.permanence_step_s = read_number(doc, "", "permanence_step_s", cfg.permanence_step_s);

    if (doc.contains("stations") && doc.contains("stations_file"))
        throw ConfigError("stations_file: cannot be combined with stations");
    if (const json* arr = read_array(doc, "", "stations")) cfg.stations = read_stations(*arr, "stations");
    if (doc.contains("stations_file"))
        cfg.stations = read_stations_file(resolve(base_dir, read_string(doc, "", "stations_file", "")));

    if (const json* arr = read_array(doc, "", "scenarios")) {
        cfg.scenarios.clear();
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const std::string p = fmt::format("scenarios[{}]", i);
            const json& s = (*arr)[i];
            reject_unknown(s, p, {"name", "src", "dst", "ranges_km", "modes", "slot_count", "slot_duration_s"});
            ScenarioSpec spec;
            spec.src = read_string(s, p, "src", "");
            spec.dst = read_string(s, p, "dst", "");
            if (spec.src.empty()) throw ConfigError(fmt::format("{}.src: required", p));
            if (spec.dst.empty()) throw ConfigError(fmt::format("{}.dst: required", p));
            spec.name = read_string(s, p, "name", spec.src + "-" + spec.dst);
            spec.ranges_km = study_ranges();
            if (const json* ranges = read_array(s, p, "ranges_km")) {
                spec.ranges_km.clear();
                for (std::size_t r = 0; r < ranges->size(); ++r) {
                    if (!(*ranges)[r].is_number())
                        throw ConfigError(fmt::format("{}.ranges_km[{}]: expected a number", p, r));
                    spec.ranges_km.push_back((*ranges)[r].get<double>());
                }
            }
            if (const json* modes = read_array(s, p, "modes")) {
                spec.modes.clear();
                for (std::size_t m = 0; m < modes->size(); ++m) {
                    if (!(*modes)[m].is_string()) throw ConfigError(fmt::format("{}.modes[{}]: expected a string", p, m));
                    try {
                        spec.modes.push_back(parse_mode((*modes)[m].get<std::string>()));
                    } catch (const ConfigError& e) {
                        throw ConfigError(fmt::format("{}.modes[{}]: {}", p, m, e.what()));
                    }
                }
            }
            spec.slot_count = read_int(s, p, "slot_count", spec.slot_count);
            spec.slot_duration_s = read_number(s, p, "slot_duration_s", spec.slot_duration_s);
            cfg.scenarios.push_back(std::move(spec));
        }
    }

    if (doc.contains("output_dir")) cfg.output_dir = resolve(base_dir, read_string(doc, "", "output_dir", ""));
    const int parallelism = read_int(doc, "", "parallelism", 0);
    if (parallelism < 0) throw ConfigError("parallelism: must be >= 0");
    cfg.parallelism = static_cast<unsigned>(parallelism);

    cfg.validate();
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot read config file {}", path.string()));
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), path.parent_path());
}

std::string describe_config_keys() {
    return R"(Config file keys (JSON object; every key optional, an empty file means all defaults):
  constellation.plane_count          24       orbital planes (Starlink Phase I)
  constellation.sats_per_plane       66       satellites per plane
  constellation.altitude_km          550      circular orbit altitude
  constellation.inclination_deg      53       plane inclination
  constellation.phasing_offset       15       Walker phasing F in [0, plane_count); `validate` scans for it
  constellation.raan_spread_deg      360      RAAN spread of the planes
  constellation.earth_radius_km      6378     spherical Earth radius (shared with constants)
  constellation.mu_km3s2             398600.4418  Earth gravitational parameter
  epoch.start_offset_s               0        clock offset applied to satellites and Earth
  epoch.earth_rotation_deg           0        Earth rotation angle at t = 0
  constants.c_mps                    299792458  speed of light in vacuum
  constants.earth_radius_km          6378     spherical Earth radius
  constants.occlusion_clearance_km   80       grazing height for laser links (gives 5,016 km max range)
  constants.node_delay_ms            10       per-satellite processing/queueing/transmission delay
  permanence_step_s                  1        sampling step over one period for permanent-link tests
  stations                           bundled  [{name, latitude_deg, longitude_deg, range_km=1000}]
  stations_file                      -        JSON array of stations, relative to the config file
  scenarios                          4 pairs  [{name, src, dst, ranges_km, modes, slot_count=3600, slot_duration_s=1}]
                                              ranges_km defaults to 659.5,1319,1500,1700,2500,3500,5016;
                                              modes defaults to ["NG","NNG"]
  output_dir                         results  directory for CSV/JSON outputs
  parallelism                        0        worker threads (0 = all hardware threads)
)";
}

}  // namespace fsosn
