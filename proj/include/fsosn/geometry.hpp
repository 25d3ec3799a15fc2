#pragma once

#include "fsosn/vec3.hpp"

namespace fsosn {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct PhysicalConstants {
    double c_mps = 299'792'458.0;
    double earth_radius_km = 6'378.0;
    // Grazing height a laser beam must keep above the surface.
    double occlusion_clearance_km = 80.0;
    double node_delay_ms = 10.0;

    // Throws ConfigError unless every field is strictly positive.
    void validate() const;

    double occlusion_radius_km() const { return earth_radius_km + occlusion_clearance_km; }
};

struct LatLon {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
};

double distance(const Vec3& p, const Vec3& q);

// True iff the closed segment p-q stays at least occlusion_radius_km from
// Earth's centre. Throws DomainError if an endpoint lies inside that sphere.
bool has_line_of_sight(const Vec3& p, const Vec3& q, double occlusion_radius_km);

// Longest chord between two satellites at the given altitude whose segment
// clears Earth by clearance_km.
double max_lisl_range(double altitude_km, double clearance_km, double earth_radius_km = 6'378.0);

// Haversine form; stable for nearly coincident points, atan2 keeps it stable
// near antipodes as well.
double great_circle_distance(const LatLon& a, const LatLon& b, double radius_km);

// Geocentric latitude in degrees. Throws DomainError on the zero vector.
double latitude_of(const Vec3& position);

// Elevation of target above the local horizon of a station at station_pos
// on a spherical Earth, in degrees.
double elevation_deg(const Vec3& station_pos, const Vec3& target);

// One-way light time over length_km, in milliseconds.
constexpr double propagation_delay_ms(double length_km, double c_mps) {
    return length_km * 1e6 / c_mps;
}

}  // namespace fsosn
