#include "fsosn/links.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "fsosn/errors.hpp"

namespace fsosn {

std::string_view to_string(LinkType type) {
    switch (type) {
        case LinkType::IntraOP: return "IntraOP";
        case LinkType::AdjacentOP: return "AdjacentOP";
        case LinkType::NearbyOP: return "NearbyOP";
        case LinkType::CrossingOP: return "CrossingOP";
        case LinkType::GroundLink: return "GroundLink";
    }
    return "?";
}

std::string_view to_string(Permanence permanence) {
    return permanence == Permanence::Permanent ? "Permanent" : "Temporary";
}

std::string_view to_string(NetworkMode mode) { return mode == NetworkMode::NG ? "NG" : "NNG"; }

NetworkMode parse_mode(std::string_view text) {
    if (text == "NG") return NetworkMode::NG;
    if (text == "NNG") return NetworkMode::NNG;
    throw ConfigError(fmt::format("unknown network mode '{}' (expected NG or NNG)", text));
}

namespace {

std::size_t sample_count(double period_s, double step_s) {
    return static_cast<std::size_t>(std::floor(period_s / step_s)) + 1;
}

double intra_plane_chord(double radius_km, int slot_a, int slot_b, int per_plane) {
    int k = std::abs(slot_a - slot_b) % per_plane;
    k = std::min(k, per_plane - k);
    return 2.0 * radius_km * std::sin(kPi * k / per_plane);
}

}  // namespace

PermanenceTable::PermanenceTable(const Constellation& constellation, double sample_step_s)
    : planes_(constellation.spec().plane_count),
      per_plane_(constellation.spec().sats_per_plane),
      phasing_(constellation.spec().phasing_offset),
      count_(constellation.size()),
      step_(sample_step_s),
      symmetric_(constellation.spec().raan_spread_deg == 360.0) {
    if (!(sample_step_s > 0.0)) throw ConfigError("permanence sample step must be positive");

    const std::size_t samples = sample_count(constellation.orbital_period_s(), step_);
    std::vector<Vec3> pos(count_);

    if (symmetric_) {
        table_.assign(count_, 0.0);
        for (std::size_t k = 0; k < samples; ++k) {
            constellation.positions_at(static_cast<double>(k) * step_, pos);
            for (std::size_t j = 1; j < count_; ++j)
                table_[j] = std::max(table_[j], norm_squared(pos[j] - pos[0]));
        }
    } else {
        table_.assign(count_ * (count_ - 1) / 2, 0.0);
        for (std::size_t k = 0; k < samples; ++k) {
            constellation.positions_at(static_cast<double>(k) * step_, pos);
            std::size_t cell = 0;
            for (std::size_t a = 0; a < count_; ++a)
                for (std::size_t b = a + 1; b < count_; ++b, ++cell)
                    table_[cell] = std::max(table_[cell], norm_squared(pos[b] - pos[a]));
        }
    }
    for (double& v : table_) v = std::sqrt(v);

    // Intra-plane separations are constant; replace samples with the exact chord.
    const double radius = constellation.orbit_radius_km();
    for (int p = 0; p < planes_; ++p)
        for (int s1 = 0; s1 < per_plane_; ++s1)
            for (int s2 = s1 + 1; s2 < per_plane_; ++s2) {
                const std::size_t a = static_cast<std::size_t>(p * per_plane_ + s1);
                const std::size_t b = static_cast<std::size_t>(p * per_plane_ + s2);
                table_[relative_index(a, b)] = intra_plane_chord(radius, s1, s2, per_plane_);
            }
}

std::size_t PermanenceTable::relative_index(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    if (symmetric_) {
        const int pa = static_cast<int>(a) / per_plane_, sa = static_cast<int>(a) % per_plane_;
        const int pb = static_cast<int>(b) / per_plane_, sb = static_cast<int>(b) % per_plane_;
        // pb >= pa here since indices are plane-major.
        const int dp = pb - pa;
        const int ds = ((sb - sa) % per_plane_ + per_plane_) % per_plane_;
        return static_cast<std::size_t>(dp * per_plane_ + ds);
    }
    // Packed upper triangle, row a starts after rows 0..a-1.
    return a * count_ - a * (a + 1) / 2 + (b - a - 1);
}

double PermanenceTable::max_separation_km(std::size_t a, std::size_t b) const {
    if (a >= count_ || b >= count_) throw LookupError("satellite index out of range for permanence table");
    if (a == b) return 0.0;
    return table_[relative_index(a, b)];
}

bool is_permanent(const Constellation& constellation, SatelliteId a, SatelliteId b, double lisl_range_km,
                  double sample_step_s) {
    const std::size_t ia = constellation.index_of(a);
    const std::size_t ib = constellation.index_of(b);
    if (a.plane == b.plane)
        return intra_plane_chord(constellation.orbit_radius_km(), a.slot, b.slot,
                                 constellation.spec().sats_per_plane) <= lisl_range_km;
    const std::size_t samples = sample_count(constellation.orbital_period_s(), sample_step_s);
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) * sample_step_s;
        const double d = distance(constellation.state_at_index(ia, t).position_km,
                                  constellation.state_at_index(ib, t).position_km);
        if (d > lisl_range_km) return false;
    }
    return true;
}

int plane_offset(int plane_a, int plane_b, int plane_count) {
    const int d = std::abs(plane_a - plane_b) % plane_count;
    return std::min(d, plane_count - d);
}

LinkType classify_satellite_link(int plane_a, int plane_b, int plane_count, const Vec3& velocity_a,
                                 const Vec3& velocity_b) {
    if (plane_a == plane_b) return LinkType::IntraOP;
    if (dot(velocity_a, velocity_b) <= 0.0) return LinkType::CrossingOP;
    return plane_offset(plane_a, plane_b, plane_count) == 1 ? LinkType::AdjacentOP : LinkType::NearbyOP;
}

LinkType link_type_at(const Constellation& constellation, SatelliteId a, SatelliteId b, double t_s) {
    const StateVector sa = constellation.state_at(a, t_s);
    const StateVector sb = constellation.state_at(b, t_s);
    return classify_satellite_link(a.plane, b.plane, constellation.spec().plane_count, sa.velocity_kms,
                                   sb.velocity_kms);
}

NodeId GraphSnapshot::satellite_node(SatelliteId id) const {
    if (id.plane < 0 || id.plane >= plane_count || id.slot < 0 || id.slot >= sats_per_plane)
        throw LookupError(fmt::format("satellite (plane {}, slot {}) is not in the snapshot", id.plane, id.slot));
    return NodeId{static_cast<std::uint32_t>(id.plane * sats_per_plane + id.slot)};
}

NodeId GraphSnapshot::station_node(std::string_view name) const {
    for (std::size_t k = 0; k < stations.size(); ++k)
        if (stations[k].name == name) return NodeId{static_cast<std::uint32_t>(satellite_count() + k)};
    throw LookupError(fmt::format("ground station '{}' is not in the snapshot", name));
}

std::string GraphSnapshot::node_name(NodeId node) const {
    if (node.value >= node_count()) throw LookupError(fmt::format("node {} is not in the snapshot", node.value));
    if (is_satellite(node))
        return format_id({static_cast<int>(node.value) / sats_per_plane, static_cast<int>(node.value) % sats_per_plane});
    return stations[node.value - satellite_count()].name;
}

namespace {

const ConstellationSpec& checked(const ConstellationSpec& spec, const PhysicalConstants& constants) {
    constants.validate();
    if (spec.earth_radius_km != constants.earth_radius_km)
        throw ConfigError("constellation.earth_radius_km and constants.earth_radius_km disagree");
    return spec;
}

}  // namespace

NetworkModel::NetworkModel(ConstellationSpec spec, PhysicalConstants constants, SimulationEpoch epoch,
                           double permanence_step_s)
    : constellation_(checked(spec, constants), epoch),
      constants_(constants),
      permanence_(constellation_, permanence_step_s) {}

GraphSnapshot NetworkModel::snapshot(double t_s, double lisl_range_km, NetworkMode mode,
                                     std::span<const GroundStation> stations) const {
    const ConstellationSpec& spec = constellation_.spec();
    GraphSnapshot snap;
    snap.time_s = t_s;
    snap.lisl_range_km = lisl_range_km;
    snap.mode = mode;
    snap.plane_count = spec.plane_count;
    snap.sats_per_plane = spec.sats_per_plane;
    snap.stations.assign(stations.begin(), stations.end());

    const std::size_t n = constellation_.size();
    std::vector<Vec3> pos(n);
    std::vector<Vec3> vel(n);
    constellation_.positions_at(t_s, pos, vel);

    const double range2 = lisl_range_km * lisl_range_km;
    const double occlusion = constants_.occlusion_radius_km();
    const int per_plane = spec.sats_per_plane;

    for (std::size_t a = 0; a < n; ++a) {
        const Vec3 pa = pos[a];
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vec3 d = pos[b] - pa;
            const double len2 = norm_squared(d);
            if (len2 > range2) continue;
            const bool permanent = permanence_.is_permanent(a, b, lisl_range_km);
            if (mode == NetworkMode::NG && !permanent) continue;
            if (!has_line_of_sight(pa, pos[b], occlusion)) continue;
            const int plane_a = static_cast<int>(a) / per_plane;
            const int plane_b = static_cast<int>(b) / per_plane;
            const double len = std::sqrt(len2);
            snap.links.push_back({NodeId{static_cast<std::uint32_t>(a)}, NodeId{static_cast<std::uint32_t>(b)}, len,
                                  propagation_delay_ms(len, constants_.c_mps),
                                  classify_satellite_link(plane_a, plane_b, spec.plane_count, vel[a], vel[b]),
                                  permanent ? Permanence::Permanent : Permanence::Temporary});
        }
    }

    for (std::size_t k = 0; k < stations.size(); ++k) {
        const GroundStation& gs = stations[k];
        const Vec3 gpos = ground_station_position(gs, t_s, constants_.earth_radius_km, constellation_.epoch());
        const double gs_range2 = gs.range_km * gs.range_km;
        const NodeId gs_node{static_cast<std::uint32_t>(n + k)};
        for (std::size_t s = 0; s < n; ++s) {
            const Vec3 d = pos[s] - gpos;
            const double len2 = norm_squared(d);
            // Above the local horizon: positive component along the zenith.
            if (len2 > gs_range2 || dot(d, gpos) <= 0.0) continue;
            const double len = std::sqrt(len2);
            snap.links.push_back({NodeId{static_cast<std::uint32_t>(s)}, gs_node, len,
                                  propagation_delay_ms(len, constants_.c_mps), LinkType::GroundLink,
                                  Permanence::Temporary});
        }
    }
    return snap;
}

GraphSnapshot restrict_snapshot(const GraphSnapshot& full, const PermanenceTable& permanence, double lisl_range_km,
                                NetworkMode mode) {
    if (lisl_range_km > full.lisl_range_km)
        throw DomainError("cannot restrict a snapshot to a larger LISL range");
    if (mode == NetworkMode::NNG && full.mode == NetworkMode::NG)
        throw DomainError("cannot restrict an NG snapshot to NNG");

    GraphSnapshot out;
    out.time_s = full.time_s;
    out.lisl_range_km = lisl_range_km;
    out.mode = mode;
    out.plane_count = full.plane_count;
    out.sats_per_plane = full.sats_per_plane;
    out.stations = full.stations;
    out.links.reserve(full.links.size());
    for (const Link& link : full.links) {
        if (link.type == LinkType::GroundLink) {
            out.links.push_back(link);
            continue;
        }
        if (link.length_km > lisl_range_km) continue;
        const bool permanent = permanence.is_permanent(link.a.value, link.b.value, lisl_range_km);
        if (mode == NetworkMode::NG && !permanent) continue;
        Link kept = link;
        kept.permanence = permanent ? Permanence::Permanent : Permanence::Temporary;
        out.links.push_back(kept);
    }
    return out;
}

int degree(const GraphSnapshot& snapshot, SatelliteId sat) {
    const NodeId node = snapshot.satellite_node(sat);
    int count = 0;
    for (const Link& link : snapshot.links)
        if (link.type != LinkType::GroundLink && (link.a == node || link.b == node)) ++count;
    return count;
}

std::vector<int> satellite_degrees(const GraphSnapshot& snapshot) {
    std::vector<int> deg(snapshot.satellite_count(), 0);
    for (const Link& link : snapshot.links) {
        if (link.type == LinkType::GroundLink) continue;
        ++deg[link.a.value];
        ++deg[link.b.value];
    }
    return deg;
}

LinkCensus link_census(const GraphSnapshot& snapshot) {
    LinkCensus census;
    for (const Link& link : snapshot.links) {
        ++census.counts[static_cast<std::size_t>(link.type)][static_cast<std::size_t>(link.permanence)];
        if (link.type == LinkType::GroundLink)
            ++census.ground_links;
        else
            ++census.satellite_links;
    }
    return census;
}

}  // namespace fsosn
