#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsosn/geometry.hpp"
#include "fsosn/orbital.hpp"

namespace fsosn {

enum class LinkType : std::uint8_t { IntraOP, AdjacentOP, NearbyOP, CrossingOP, GroundLink };
enum class Permanence : std::uint8_t { Permanent, Temporary };

// NG: permanent links only. NNG: permanent and temporary links.
enum class NetworkMode : std::uint8_t { NG, NNG };

inline constexpr std::array kAllLinkTypes{LinkType::IntraOP, LinkType::AdjacentOP, LinkType::NearbyOP,
                                          LinkType::CrossingOP, LinkType::GroundLink};

std::string_view to_string(LinkType type);
std::string_view to_string(Permanence permanence);
std::string_view to_string(NetworkMode mode);
// Throws ConfigError on anything other than "NG" / "NNG".
NetworkMode parse_mode(std::string_view text);

// Graph vertex. Satellites occupy [0, satellite_count) in flat-index order,
// ground stations follow in the order they were supplied.
struct NodeId {
    std::uint32_t value = 0;

    friend constexpr bool operator==(NodeId, NodeId) = default;
    friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

struct Link {
    NodeId a;  // a < b
    NodeId b;
    double length_km = 0.0;
    double propagation_delay_ms = 0.0;
    LinkType type = LinkType::IntraOP;
    Permanence permanence = Permanence::Temporary;
};

// Largest separation each satellite pair reaches over one orbital period,
// sampled at a fixed step. A pair is permanent at range R iff that maximum is
// within R, so one table serves every range.
//
// For a full Walker-delta shell (raan_spread 360) the relative motion of a
// pair depends only on its plane and slot offsets, so a single reference
// satellite is sampled against every other. Any other shell falls back to
// sampling every pair.
class PermanenceTable {
public:
    explicit PermanenceTable(const Constellation& constellation, double sample_step_s = 1.0);

    double max_separation_km(std::size_t a, std::size_t b) const;
    bool is_permanent(std::size_t a, std::size_t b, double lisl_range_km) const {
        return max_separation_km(a, b) <= lisl_range_km;
    }
    bool uses_symmetry() const { return symmetric_; }
    double sample_step_s() const { return step_; }

private:
    std::size_t relative_index(std::size_t a, std::size_t b) const;

    int planes_ = 0;
    int per_plane_ = 0;
    int phasing_ = 0;
    std::size_t count_ = 0;
    double step_ = 1.0;
    bool symmetric_ = false;
    // symmetric: indexed by relative satellite; otherwise packed upper triangle.
    std::vector<double> table_;
};

// Direct evaluation for one pair: intra-plane pairs use the constant chord,
// the rest sample one orbital period at sample_step_s.
bool is_permanent(const Constellation& constellation, SatelliteId a, SatelliteId b, double lisl_range_km,
                  double sample_step_s = 1.0);

// Circular distance between two plane indices.
int plane_offset(int plane_a, int plane_b, int plane_count);

LinkType classify_satellite_link(int plane_a, int plane_b, int plane_count, const Vec3& velocity_a,
                                 const Vec3& velocity_b);

LinkType link_type_at(const Constellation& constellation, SatelliteId a, SatelliteId b, double t_s);

struct GraphSnapshot {
    double time_s = 0.0;
    double lisl_range_km = 0.0;
    NetworkMode mode = NetworkMode::NNG;
    int plane_count = 0;
    int sats_per_plane = 0;
    std::vector<GroundStation> stations;
    std::vector<Link> links;

    std::size_t satellite_count() const {
        return static_cast<std::size_t>(plane_count) * static_cast<std::size_t>(sats_per_plane);
    }
    std::size_t node_count() const { return satellite_count() + stations.size(); }
    bool is_satellite(NodeId node) const { return node.value < satellite_count(); }

    // Both throw LookupError for nodes outside the snapshot.
    NodeId satellite_node(SatelliteId id) const;
    NodeId station_node(std::string_view name) const;
    std::string node_name(NodeId node) const;
};

// Constellation, constants and the precomputed permanence table: everything
// needed to build snapshots. Immutable once constructed.
class NetworkModel {
public:
    NetworkModel(ConstellationSpec spec, PhysicalConstants constants, SimulationEpoch epoch = {},
                 double permanence_step_s = 1.0);

    const Constellation& constellation() const { return constellation_; }
    const PhysicalConstants& constants() const { return constants_; }
    const PermanenceTable& permanence() const { return permanence_; }

    GraphSnapshot snapshot(double t_s, double lisl_range_km, NetworkMode mode,
                           std::span<const GroundStation> stations = {}) const;

private:
    Constellation constellation_;
    PhysicalConstants constants_;
    PermanenceTable permanence_;
};

// Sub-snapshot of `full` for a range no larger than full's and a mode no
// wider than full's. Equivalent to building the snapshot from scratch.
GraphSnapshot restrict_snapshot(const GraphSnapshot& full, const PermanenceTable& permanence,
                                double lisl_range_km, NetworkMode mode);

// Satellite-to-satellite links incident on the satellite; ground links are
// not counted. Throws LookupError for an unknown satellite.
int degree(const GraphSnapshot& snapshot, SatelliteId sat);
std::vector<int> satellite_degrees(const GraphSnapshot& snapshot);

struct LinkCensus {
    // counts[type][permanence]
    std::array<std::array<std::size_t, 2>, kAllLinkTypes.size()> counts{};
    std::size_t satellite_links = 0;
    std::size_t ground_links = 0;

    std::size_t count(LinkType type, Permanence permanence) const {
        return counts[static_cast<std::size_t>(type)][static_cast<std::size_t>(permanence)];
    }
    std::size_t undirected_total() const { return satellite_links + ground_links; }
    // Every link counted once per direction.
    std::size_t directed_total() const { return 2 * undirected_total(); }
};

LinkCensus link_census(const GraphSnapshot& snapshot);

}  // namespace fsosn
