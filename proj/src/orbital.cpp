#include "fsosn/orbital.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fsosn/errors.hpp"
#include "fsosn/geometry.hpp"

namespace fsosn {

void ConstellationSpec::validate() const {
    if (plane_count < 1) throw ConfigError("constellation.plane_count must be >= 1");
    if (sats_per_plane < 1) throw ConfigError("constellation.sats_per_plane must be >= 1");
    if (!(altitude_km > 0.0)) throw ConfigError("constellation.altitude_km must be positive");
    if (phasing_offset < 0 || phasing_offset >= plane_count)
        throw ConfigError(fmt::format("constellation.phasing_offset must lie in [0, {})", plane_count));
    if (!(earth_radius_km > 0.0)) throw ConfigError("constellation.earth_radius_km must be positive");
    if (!(mu_km3s2 > 0.0)) throw ConfigError("constellation.mu_km3s2 must be positive");
    if (!(raan_spread_deg > 0.0 && raan_spread_deg <= 360.0))
        throw ConfigError("constellation.raan_spread_deg must lie in (0, 360]");
    if (!(inclination_deg >= 0.0 && inclination_deg <= 180.0))
        throw ConfigError("constellation.inclination_deg must lie in [0, 180]");
}

std::string format_id(SatelliteId id) {
    if (id.plane < 0 || id.slot < 0 || id.plane >= 99 || id.slot >= 99)
        throw FormatError(fmt::format("satellite ({}, {}) does not fit the x1PPSS scheme", id.plane, id.slot));
    return fmt::format("x1{:02d}{:02d}", id.plane + 1, id.slot + 1);
}

std::vector<PlacedSatellite> build_constellation(const ConstellationSpec& spec) {
    spec.validate();
    const double slot_step = 360.0 / spec.sats_per_plane;
    const double phasing_step = 360.0 / (static_cast<double>(spec.plane_count) * spec.sats_per_plane);

    std::vector<PlacedSatellite> out;
    out.reserve(static_cast<std::size_t>(spec.satellite_count()));
    for (int p = 0; p < spec.plane_count; ++p) {
        const double raan = p * spec.raan_spread_deg / spec.plane_count;
        for (int s = 0; s < spec.sats_per_plane; ++s) {
            const double phase = s * slot_step + p * spec.phasing_offset * phasing_step;
            out.push_back({{p, s}, {raan, spec.inclination_deg, phase}});
        }
    }
    return out;
}

Constellation::Constellation(ConstellationSpec spec, SimulationEpoch epoch)
    : spec_(spec), epoch_(epoch), placed_(build_constellation(spec)) {
    radius_ = spec_.orbit_radius_km();
    mean_motion_ = std::sqrt(spec_.mu_km3s2 / (radius_ * radius_ * radius_));
    basis_.reserve(placed_.size());
    for (const auto& sat : placed_) {
        const double raan = deg_to_rad(sat.elements.raan_deg);
        const double inc = deg_to_rad(sat.elements.inclination_deg);
        PlaneBasis b;
        b.node = {std::cos(raan), std::sin(raan), 0.0};
        b.normal = {-std::sin(raan) * std::cos(inc), std::cos(raan) * std::cos(inc), std::sin(inc)};
        b.phase0 = deg_to_rad(sat.elements.initial_phase_deg);
        basis_.push_back(b);
    }
}

double Constellation::orbital_period_s() const { return 2.0 * kPi / mean_motion_; }

bool Constellation::contains(SatelliteId id) const {
    return id.plane >= 0 && id.plane < spec_.plane_count && id.slot >= 0 && id.slot < spec_.sats_per_plane;
}

std::size_t Constellation::index_of(SatelliteId id) const {
    if (!contains(id))
        throw LookupError(fmt::format("satellite (plane {}, slot {}) is not in the constellation", id.plane, id.slot));
    return static_cast<std::size_t>(id.plane) * spec_.sats_per_plane + id.slot;
}

SatelliteId Constellation::id_at(std::size_t index) const {
    if (index >= size()) throw LookupError(fmt::format("satellite index {} out of range", index));
    return placed_[index].id;
}

StateVector Constellation::state_at(SatelliteId id, double t_s) const {
    return state_at_index(index_of(id), t_s);
}

StateVector Constellation::state_at_index(std::size_t index, double t_s) const {
    if (index >= size()) throw LookupError(fmt::format("satellite index {} out of range", index));
    const PlaneBasis& b = basis_[index];
    const double u = b.phase0 + mean_motion_ * (t_s + epoch_.start_offset_s);
    const double c = std::cos(u);
    const double s = std::sin(u);
    const double speed = radius_ * mean_motion_;
    return {t_s, radius_ * (c * b.node + s * b.normal), speed * (c * b.normal - s * b.node)};
}

void Constellation::positions_at(double t_s, std::span<Vec3> positions, std::span<Vec3> velocities) const {
    const double advance = mean_motion_ * (t_s + epoch_.start_offset_s);
    const double speed = radius_ * mean_motion_;
    const bool want_velocity = !velocities.empty();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const PlaneBasis& b = basis_[i];
        const double u = b.phase0 + advance;
        const double c = std::cos(u);
        const double s = std::sin(u);
        positions[i] = radius_ * (c * b.node + s * b.normal);
        if (want_velocity) velocities[i] = speed * (c * b.normal - s * b.node);
    }
}

void GroundStation::validate() const {
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
        throw ConfigError(fmt::format("station '{}': latitude_deg must lie in [-90, 90]", name));
    if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0))
        throw ConfigError(fmt::format("station '{}': longitude_deg must lie in [-180, 180]", name));
    if (!(range_km > 0.0)) throw ConfigError(fmt::format("station '{}': range_km must be positive", name));
}

Vec3 ground_station_position(const GroundStation& gs, double t_s, double earth_radius_km,
                             const SimulationEpoch& epoch) {
    const double lat = deg_to_rad(gs.latitude_deg);
    const double lon = deg_to_rad(gs.longitude_deg + epoch.earth_rotation_deg) +
                       kEarthRotationRateRadS * (t_s + epoch.start_offset_s);
    return {earth_radius_km * std::cos(lat) * std::cos(lon), earth_radius_km * std::cos(lat) * std::sin(lon),
            earth_radius_km * std::sin(lat)};
}

}  // namespace fsosn
