#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsosn/links.hpp"
#include "fsosn/routing.hpp"

namespace fsosn {

struct ScenarioConfig {
    std::string name;
    GroundStation src;
    GroundStation dst;
    double lisl_range_km = 1'700.0;
    NetworkMode mode = NetworkMode::NNG;
    double slot_duration_s = 1.0;
    int slot_count = 3'600;
    double node_delay_ms = 10.0;

    // Throws ConfigError on a non-positive duration, range or slot count.
    void validate() const;
};

struct SlotPath {
    double latency_ms = 0.0;
    double propagation_ms = 0.0;
    double node_delay_ms = 0.0;
    int hop_count = 0;
    std::vector<std::string> nodes;
};

struct SlotRecord {
    int slot_index = 0;
    double time_s = 0.0;
    std::optional<SlotPath> path;  // empty when the stations were disconnected

    bool path_found() const { return path.has_value(); }
};

// Averages run over the slots that had a path; they are empty when none did.
struct MetricsSummary {
    std::optional<double> avg_latency_ms;
    std::optional<double> avg_propagation_ms;
    std::optional<double> avg_hops;
    int slots_with_path = 0;
    int slot_count = 0;
};

MetricsSummary summarize(std::span<const SlotRecord> records);

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<SlotRecord> slots;
    MetricsSummary summary;
};

// NG against NNG on identical geometry. Improvements are NG minus NNG and
// are empty when either mode found no path in any slot.
struct Comparison {
    double lisl_range_km = 0.0;
    ScenarioResult ng;
    ScenarioResult nng;
    std::optional<double> latency_improvement_ms;
    std::optional<double> hop_improvement;
};

class Simulator {
public:
    // parallelism 0 means one worker per hardware thread.
    explicit Simulator(const NetworkModel& model, unsigned parallelism = 0);

    const NetworkModel& model() const { return model_; }
    unsigned parallelism() const { return workers_; }

    ScenarioResult run(const ScenarioConfig& cfg) const;

    // Runs several scenarios, sharing one snapshot per slot among all of them
    // that use the same slot timing. Results come back in input order.
    std::vector<ScenarioResult> run_batch(std::span<const ScenarioConfig> configs) const;

    Comparison compare(const ScenarioConfig& base) const;

    // One comparison per range, ascending.
    std::vector<Comparison> range_sweep(const ScenarioConfig& base, std::span<const double> ranges) const;

private:
    const NetworkModel& model_;
    unsigned workers_ = 1;
};

Comparison make_comparison(ScenarioResult ng, ScenarioResult nng);

}  // namespace fsosn
