#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fsosn/links.hpp"

namespace fsosn {

struct PathResult {
    std::vector<NodeId> nodes;  // station, satellites..., station
    int hop_count = 0;          // satellites on the path
    double propagation_delay_ms = 0.0;
    double node_delay_ms = 0.0;
    double latency_ms = 0.0;
};

// Compressed adjacency of a snapshot. Ground stations never relay traffic:
// only the source station's edges are expanded.
class RoutingGraph {
public:
    struct Edge {
        NodeId to;
        double propagation_delay_ms;
    };

    explicit RoutingGraph(const GraphSnapshot& snapshot);

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t satellite_count() const { return satellite_count_; }
    bool is_satellite(NodeId node) const { return node.value < satellite_count_; }
    std::span<const Edge> neighbors(NodeId node) const {
        return {edges_.data() + offsets_[node.value], edges_.data() + offsets_[node.value + 1]};
    }

private:
    std::size_t satellite_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Edge> edges_;
};

// Minimum-latency station-to-station path, latency = sum of link propagation
// delays + node_delay_ms per satellite visited. Equal latencies resolve to
// fewer hops, then the lexicographically smallest node sequence. Returns
// nullopt when no path exists. Throws LookupError for nodes outside the graph
// and DomainError unless src and dst are distinct ground stations.
std::optional<PathResult> shortest_path(const RoutingGraph& graph, NodeId src, NodeId dst, double node_delay_ms);
std::optional<PathResult> shortest_path(const GraphSnapshot& snapshot, NodeId src, NodeId dst,
                                        double node_delay_ms);

inline constexpr std::size_t kOracleNodeLimit = 12;

// Exhaustive enumeration of simple paths with the same objective and
// tie-breaking as shortest_path. Throws OracleLimitError above
// kOracleNodeLimit nodes.
std::optional<PathResult> oracle_shortest_path(const GraphSnapshot& snapshot, NodeId src, NodeId dst,
                                               double node_delay_ms);

// Fills the delay fields from the node sequence; propagation is summed in path order.
PathResult make_path_result(const RoutingGraph& graph, std::vector<NodeId> nodes, double node_delay_ms);

}  // namespace fsosn
