#include "fsosn/routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include <fmt/format.h>

#include "fsosn/errors.hpp"

namespace fsosn {

RoutingGraph::RoutingGraph(const GraphSnapshot& snapshot) : satellite_count_(snapshot.satellite_count()) {
    const std::size_t n = snapshot.node_count();
    offsets_.assign(n + 1, 0);
    for (const Link& link : snapshot.links) {
        ++offsets_[link.a.value + 1];
        ++offsets_[link.b.value + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    edges_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Link& link : snapshot.links) {
        edges_[fill[link.a.value]++] = {link.b, link.propagation_delay_ms};
        edges_[fill[link.b.value]++] = {link.a, link.propagation_delay_ms};
    }
}

namespace {

void check_endpoints(std::size_t node_count, std::size_t satellite_count, NodeId src, NodeId dst) {
    if (src.value >= node_count || dst.value >= node_count)
        throw LookupError(fmt::format("path endpoints ({}, {}) are not in the graph", src.value, dst.value));
    if (src == dst) throw DomainError("path endpoints must differ");
    if (src.value < satellite_count || dst.value < satellite_count)
        throw DomainError("path endpoints must be ground stations");
}

struct Label {
    double cost = std::numeric_limits<double>::infinity();
    int hops = 0;
    std::uint32_t pred = std::numeric_limits<std::uint32_t>::max();
    bool done = false;
};

constexpr std::uint32_t kNoPred = std::numeric_limits<std::uint32_t>::max();

std::vector<NodeId> trace(const std::vector<Label>& labels, std::uint32_t node) {
    std::vector<NodeId> path;
    for (std::uint32_t v = node; v != kNoPred; v = labels[v].pred) path.push_back(NodeId{v});
    std::reverse(path.begin(), path.end());
    return path;
}

// Is (path to u) + v lexicographically smaller than the recorded path to v?
bool lex_smaller_via(const std::vector<Label>& labels, std::uint32_t u, std::uint32_t v) {
    std::vector<NodeId> candidate = trace(labels, u);
    candidate.push_back(NodeId{v});
    return candidate < trace(labels, v);
}

}  // namespace

PathResult make_path_result(const RoutingGraph& graph, std::vector<NodeId> nodes, double node_delay_ms) {
    PathResult r;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const auto edges = graph.neighbors(nodes[i]);
        const auto it = std::find_if(edges.begin(), edges.end(),
                                     [&](const RoutingGraph::Edge& e) { return e.to == nodes[i + 1]; });
        if (it == edges.end())
            throw LookupError(fmt::format("nodes {} and {} are not linked", nodes[i].value, nodes[i + 1].value));
        r.propagation_delay_ms += it->propagation_delay_ms;
    }
    r.hop_count = static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                                 [&](NodeId v) { return graph.is_satellite(v); }));
    r.node_delay_ms = r.hop_count * node_delay_ms;
    r.latency_ms = r.propagation_delay_ms + r.node_delay_ms;
    r.nodes = std::move(nodes);
    return r;
}

std::optional<PathResult> shortest_path(const RoutingGraph& graph, NodeId src, NodeId dst, double node_delay_ms) {
    check_endpoints(graph.node_count(), graph.satellite_count(), src, dst);

    std::vector<Label> labels(graph.node_count());
    using Entry = std::tuple<double, int, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    labels[src.value].cost = 0.0;
    heap.emplace(0.0, 0, src.value);

    while (!heap.empty()) {
        const auto [cost, hops, u] = heap.top();
        heap.pop();
        Label& lu = labels[u];
        if (lu.done || cost != lu.cost || hops != lu.hops) continue;
        lu.done = true;
        if (u == dst.value) break;
        // Stations other than the source are endpoints only.
        if (u != src.value && !graph.is_satellite(NodeId{u})) continue;

        for (const RoutingGraph::Edge& e : graph.neighbors(NodeId{u})) {
            const std::uint32_t v = e.to.value;
            Label& lv = labels[v];
            if (lv.done) continue;
            const bool enters_satellite = graph.is_satellite(e.to);
            const double nc = cost + e.propagation_delay_ms + (enters_satellite ? node_delay_ms : 0.0);
            const int nh = hops + (enters_satellite ? 1 : 0);
            bool better = nc < lv.cost || (nc == lv.cost && nh < lv.hops);
            if (!better && nc == lv.cost && nh == lv.hops) better = lex_smaller_via(labels, u, v);
            if (!better) continue;
            lv.cost = nc;
            lv.hops = nh;
            lv.pred = u;
            heap.emplace(nc, nh, v);
        }
    }

    if (!labels[dst.value].done) return std::nullopt;
    return make_path_result(graph, trace(labels, dst.value), node_delay_ms);
}

std::optional<PathResult> shortest_path(const GraphSnapshot& snapshot, NodeId src, NodeId dst,
                                        double node_delay_ms) {
    return shortest_path(RoutingGraph(snapshot), src, dst, node_delay_ms);
}

std::optional<PathResult> oracle_shortest_path(const GraphSnapshot& snapshot, NodeId src, NodeId dst,
                                               double node_delay_ms) {
    if (snapshot.node_count() > kOracleNodeLimit)
        throw OracleLimitError(fmt::format("oracle handles at most {} nodes, snapshot has {}", kOracleNodeLimit,
                                           snapshot.node_count()));
    const RoutingGraph graph(snapshot);
    check_endpoints(graph.node_count(), graph.satellite_count(), src, dst);

    std::optional<PathResult> best;
    std::vector<NodeId> path{src};
    std::vector<bool> on_path(graph.node_count(), false);
    on_path[src.value] = true;

    const auto consider = [&] {
        PathResult r = make_path_result(graph, path, node_delay_ms);
        if (!best || std::tie(r.latency_ms, r.hop_count, r.nodes) < std::tie(best->latency_ms, best->hop_count, best->nodes))
            best = std::move(r);
    };

    const std::function<void(NodeId)> extend = [&](NodeId u) {
        for (const RoutingGraph::Edge& e : graph.neighbors(u)) {
            if (on_path[e.to.value]) continue;
            path.push_back(e.to);
            if (e.to == dst) {
                consider();
            } else if (graph.is_satellite(e.to)) {
                on_path[e.to.value] = true;
                extend(e.to);
                on_path[e.to.value] = false;
            }
            path.pop_back();
        }
    };
    extend(src);
    return best;
}

}  // namespace fsosn
