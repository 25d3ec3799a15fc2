#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fsosn/vec3.hpp"

namespace fsosn {

inline constexpr double kEarthRotationRateRadS = 7.2921159e-5;

// Walker-delta shell: plane_count equally spaced planes over raan_spread_deg,
// sats_per_plane equally spaced slots, inter-plane phasing F.
struct ConstellationSpec {
    int plane_count = 24;
    int sats_per_plane = 66;
    double altitude_km = 550.0;
    double inclination_deg = 53.0;
    int phasing_offset = 15;
    double raan_spread_deg = 360.0;
    double earth_radius_km = 6'378.0;
    double mu_km3s2 = 398'600.4418;

    void validate() const;

    int satellite_count() const { return plane_count * sats_per_plane; }
    double orbit_radius_km() const { return earth_radius_km + altitude_km; }
};

// Where the simulation clock starts. start_offset_s advances both satellites
// and Earth; earth_rotation_deg is the Greenwich angle at t = 0.
struct SimulationEpoch {
    double start_offset_s = 0.0;
    double earth_rotation_deg = 0.0;
};

struct SatelliteId {
    int plane = 0;
    int slot = 0;

    friend constexpr bool operator==(const SatelliteId&, const SatelliteId&) = default;
    friend constexpr auto operator<=>(const SatelliteId&, const SatelliteId&) = default;
};

// "x1" + two-digit plane + two-digit slot, both one-based (x10101 is the
// first satellite of the first plane). Throws FormatError for indices >= 99.
std::string format_id(SatelliteId id);

struct OrbitalElements {
    double raan_deg = 0.0;
    double inclination_deg = 0.0;
    // Argument of latitude at t = 0, measured from the ascending node.
    double initial_phase_deg = 0.0;
};

struct StateVector {
    double time_s = 0.0;
    Vec3 position_km;
    Vec3 velocity_kms;
};

struct PlacedSatellite {
    SatelliteId id;
    OrbitalElements elements;
};

// Throws ConfigError if the spec is invalid.
std::vector<PlacedSatellite> build_constellation(const ConstellationSpec& spec);

class Constellation {
public:
    explicit Constellation(ConstellationSpec spec, SimulationEpoch epoch = {});

    const ConstellationSpec& spec() const { return spec_; }
    const SimulationEpoch& epoch() const { return epoch_; }
    std::size_t size() const { return basis_.size(); }

    double orbit_radius_km() const { return radius_; }
    double mean_motion_rad_s() const { return mean_motion_; }
    double orbital_period_s() const;

    bool contains(SatelliteId id) const;
    // Both throw LookupError outside the constellation.
    std::size_t index_of(SatelliteId id) const;
    SatelliteId id_at(std::size_t index) const;

    const std::vector<PlacedSatellite>& satellites() const { return placed_; }

    StateVector state_at(SatelliteId id, double t_s) const;
    StateVector state_at_index(std::size_t index, double t_s) const;

    // Bulk evaluation for every satellite in flat-index order. Both spans must
    // have size() elements; velocities may be empty to skip them.
    void positions_at(double t_s, std::span<Vec3> positions, std::span<Vec3> velocities = {}) const;

private:
    struct PlaneBasis {
        Vec3 node;    // unit vector to the ascending node
        Vec3 normal;  // in-plane, 90 degrees ahead of the node
        double phase0 = 0.0;
    };

    ConstellationSpec spec_;
    SimulationEpoch epoch_;
    double radius_ = 0.0;
    double mean_motion_ = 0.0;
    std::vector<PlacedSatellite> placed_;
    std::vector<PlaneBasis> basis_;
};

struct GroundStation {
    std::string name;
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double range_km = 1'000.0;

    void validate() const;
};

// Inertial position of an Earth-fixed station at time t, on a sphere of
// radius earth_radius_km rotating about +z at the sidereal rate.
Vec3 ground_station_position(const GroundStation& gs, double t_s, double earth_radius_km,
                             const SimulationEpoch& epoch = {});

}  // namespace fsosn
