#include "fsosn/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "fsosn/errors.hpp"

namespace fsosn {

void ScenarioConfig::validate() const {
    if (!(slot_duration_s > 0.0)) throw ConfigError(fmt::format("scenario '{}': slot_duration_s must be positive", name));
    if (slot_count < 1) throw ConfigError(fmt::format("scenario '{}': slot_count must be >= 1", name));
    if (!(lisl_range_km > 0.0)) throw ConfigError(fmt::format("scenario '{}': range must be positive", name));
    if (!(node_delay_ms >= 0.0)) throw ConfigError(fmt::format("scenario '{}': node_delay_ms must be >= 0", name));
    if (src.name == dst.name) throw ConfigError(fmt::format("scenario '{}': src and dst must differ", name));
    src.validate();
    dst.validate();
}

MetricsSummary summarize(std::span<const SlotRecord> records) {
    MetricsSummary s;
    s.slot_count = static_cast<int>(records.size());
    double latency = 0.0, propagation = 0.0, hops = 0.0;
    for (const SlotRecord& r : records) {
        if (!r.path) continue;
        ++s.slots_with_path;
        latency += r.path->latency_ms;
        propagation += r.path->propagation_ms;
        hops += r.path->hop_count;
    }
    if (s.slots_with_path > 0) {
        s.avg_latency_ms = latency / s.slots_with_path;
        s.avg_propagation_ms = propagation / s.slots_with_path;
        s.avg_hops = hops / s.slots_with_path;
    }
    return s;
}

Simulator::Simulator(const NetworkModel& model, unsigned parallelism) : model_(model) {
    workers_ = parallelism != 0 ? parallelism : std::max(1u, std::thread::hardware_concurrency());
}

ScenarioResult Simulator::run(const ScenarioConfig& cfg) const {
    return std::move(run_batch(std::span(&cfg, 1)).front());
}

namespace {

// Scenarios that can share per-slot snapshots.
struct TimingGroup {
    double slot_duration_s = 0.0;
    int slot_count = 0;
    std::vector<std::size_t> members;
};

void add_station(std::vector<GroundStation>& stations, const GroundStation& gs) {
    for (const GroundStation& known : stations) {
        if (known.name != gs.name) continue;
        if (known.latitude_deg != gs.latitude_deg || known.longitude_deg != gs.longitude_deg ||
            known.range_km != gs.range_km)
            throw ConfigError(fmt::format("station '{}' appears with two different definitions", gs.name));
        return;
    }
    stations.push_back(gs);
}

template <class Fn>
void for_each_slot(int slot_count, unsigned workers, Fn&& fn) {
    const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(slot_count));
    if (n <= 1) {
        for (int i = 0; i < slot_count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < slot_count; i = next++) fn(i);
        });
}

}  // namespace

std::vector<ScenarioResult> Simulator::run_batch(std::span<const ScenarioConfig> configs) const {
    std::vector<ScenarioResult> results(configs.size());
    std::vector<TimingGroup> groups;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        configs[c].validate();
        results[c].config = configs[c];
        results[c].slots.resize(static_cast<std::size_t>(configs[c].slot_count));
        auto it = std::find_if(groups.begin(), groups.end(), [&](const TimingGroup& g) {
            return g.slot_duration_s == configs[c].slot_duration_s && g.slot_count == configs[c].slot_count;
        });
        if (it == groups.end()) {
            groups.push_back({configs[c].slot_duration_s, configs[c].slot_count, {}});
            it = groups.end() - 1;
        }
        it->members.push_back(c);
    }

    for (const TimingGroup& group : groups) {
        std::vector<GroundStation> stations;
        double max_range = 0.0;
        NetworkMode widest = NetworkMode::NG;
        // (range, mode) -> scenarios evaluated on that graph
        std::map<std::pair<double, NetworkMode>, std::vector<std::size_t>> graphs;
        for (std::size_t c : group.members) {
            add_station(stations, configs[c].src);
            add_station(stations, configs[c].dst);
            max_range = std::max(max_range, configs[c].lisl_range_km);
            if (configs[c].mode == NetworkMode::NNG) widest = NetworkMode::NNG;
            graphs[{configs[c].lisl_range_km, configs[c].mode}].push_back(c);
        }

        for_each_slot(group.slot_count, workers_, [&](int slot) {
            const double t = slot * group.slot_duration_s;
            const GraphSnapshot full = model_.snapshot(t, max_range, widest, stations);
            for (const auto& [key, members] : graphs) {
                const auto& [range, mode] = key;
                const bool reuse = range == max_range && mode == widest;
                const RoutingGraph graph = reuse ? RoutingGraph(full)
                                                 : RoutingGraph(restrict_snapshot(full, model_.permanence(), range, mode));
                for (std::size_t c : members) {
                    const ScenarioConfig& cfg = configs[c];
                    SlotRecord& rec = results[c].slots[static_cast<std::size_t>(slot)];
                    rec.slot_index = slot;
                    rec.time_s = t;
                    const auto path = shortest_path(graph, full.station_node(cfg.src.name),
                                                    full.station_node(cfg.dst.name), cfg.node_delay_ms);
                    if (!path) continue;
                    SlotPath sp{path->latency_ms, path->propagation_delay_ms, path->node_delay_ms, path->hop_count, {}};
                    sp.nodes.reserve(path->nodes.size());
                    for (NodeId node : path->nodes) sp.nodes.push_back(full.node_name(node));
                    rec.path = std::move(sp);
                }
            }
        });
    }

    for (ScenarioResult& r : results) r.summary = summarize(r.slots);
    return results;
}

Comparison make_comparison(ScenarioResult ng, ScenarioResult nng) {
    Comparison cmp;
    cmp.lisl_range_km = nng.config.lisl_range_km;
    if (ng.summary.slots_with_path > 0 && nng.summary.slots_with_path > 0) {
        cmp.latency_improvement_ms = *ng.summary.avg_latency_ms - *nng.summary.avg_latency_ms;
        cmp.hop_improvement = *ng.summary.avg_hops - *nng.summary.avg_hops;
    }
    cmp.ng = std::move(ng);
    cmp.nng = std::move(nng);
    return cmp;
}

Comparison Simulator::compare(const ScenarioConfig& base) const {
    return std::move(range_sweep(base, std::span(&base.lisl_range_km, 1)).front());
}

std::vector<Comparison> Simulator::range_sweep(const ScenarioConfig& base, std::span<const double> ranges) const {
    if (ranges.empty()) throw ConfigError("range sweep needs at least one range");
    std::vector<double> sorted(ranges.begin(), ranges.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<ScenarioConfig> configs;
    configs.reserve(2 * sorted.size());
    for (double range : sorted)
        for (NetworkMode mode : {NetworkMode::NG, NetworkMode::NNG}) {
            ScenarioConfig cfg = base;
            cfg.lisl_range_km = range;
            cfg.mode = mode;
            configs.push_back(cfg);
        }
    std::vector<ScenarioResult> runs = run_batch(configs);

    std::vector<Comparison> out;
    out.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        out.push_back(make_comparison(std::move(runs[2 * i]), std::move(runs[2 * i + 1])));
    return out;
}

}  // namespace fsosn
