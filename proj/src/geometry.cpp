#include "fsosn/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "fsosn/errors.hpp"

namespace fsosn {

void PhysicalConstants::validate() const {
    if (!(c_mps > 0.0)) throw ConfigError("constants.c_mps must be positive");
    if (!(earth_radius_km > 0.0)) throw ConfigError("constants.earth_radius_km must be positive");
    if (!(occlusion_clearance_km > 0.0))
        throw ConfigError("constants.occlusion_clearance_km must be positive");
    if (!(node_delay_ms > 0.0)) throw ConfigError("constants.node_delay_ms must be positive");
}

double distance(const Vec3& p, const Vec3& q) { return norm(p - q); }

bool has_line_of_sight(const Vec3& p, const Vec3& q, double occlusion_radius_km) {
    const double r2 = occlusion_radius_km * occlusion_radius_km;
    if (norm_squared(p) < r2 || norm_squared(q) < r2)
        throw DomainError("line-of-sight endpoint lies inside the occlusion sphere");

    const Vec3 d = q - p;
    const double len2 = norm_squared(d);
    if (len2 == 0.0) return true;
    // Closest point of the segment to the origin.
    const double s = std::clamp(-dot(p, d) / len2, 0.0, 1.0);
    return norm_squared(p + s * d) >= r2;
}

double max_lisl_range(double altitude_km, double clearance_km, double earth_radius_km) {
    const double orbit = earth_radius_km + altitude_km;
    const double graze = earth_radius_km + clearance_km;
    return 2.0 * std::sqrt(std::max(0.0, orbit * orbit - graze * graze));
}

double great_circle_distance(const LatLon& a, const LatLon& b, double radius_km) {
    const double phi1 = deg_to_rad(a.latitude_deg);
    const double phi2 = deg_to_rad(b.latitude_deg);
    const double dphi = phi2 - phi1;
    const double dlambda = deg_to_rad(b.longitude_deg - a.longitude_deg);
    const double s1 = std::sin(dphi / 2.0);
    const double s2 = std::sin(dlambda / 2.0);
    const double h = std::clamp(s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2, 0.0, 1.0);
    return radius_km * 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

double latitude_of(const Vec3& position) {
    const double r = norm(position);
    if (r == 0.0) throw DomainError("latitude of the zero vector is undefined");
    return rad_to_deg(std::asin(std::clamp(position.z / r, -1.0, 1.0)));
}

double elevation_deg(const Vec3& station_pos, const Vec3& target) {
    const double r = norm(station_pos);
    const Vec3 los = target - station_pos;
    const double range = norm(los);
    if (r == 0.0 || range == 0.0) throw DomainError("elevation needs distinct, non-central points");
    return rad_to_deg(std::asin(std::clamp(dot(los, station_pos) / (range * r), -1.0, 1.0)));
}

}  // namespace fsosn
