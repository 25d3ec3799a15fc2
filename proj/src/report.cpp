#include "fsosn/report.hpp"

#include <fmt/format.h>

namespace fsosn {

using nlohmann::ordered_json;

namespace {

std::string fixed(double v) { return fmt::format("{:.6f}", v); }

std::string fixed_or_empty(const std::optional<double>& v) { return v ? fixed(*v) : std::string(); }

ordered_json number_or_null(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

}  // namespace

std::string format_range(double km) { return fmt::format("{}", km); }

CensusRow make_census_row(const GraphSnapshot& snapshot) {
    CensusRow row;
    row.time_s = snapshot.time_s;
    row.lisl_range_km = snapshot.lisl_range_km;
    row.mode = snapshot.mode;
    row.census = link_census(snapshot);
    for (int d : satellite_degrees(snapshot)) ++row.degree_histogram[d];
    return row;
}

void write_census_csv(std::ostream& os, std::span<const CensusRow> rows) {
    os << "time_s,range_km,mode,link_type,permanence,count\n";
    for (const CensusRow& r : rows) {
        const std::string prefix = fmt::format("{},{},{}", fmt::format("{}", r.time_s), format_range(r.lisl_range_km),
                                               to_string(r.mode));
        for (LinkType type : kAllLinkTypes)
            for (Permanence p : {Permanence::Permanent, Permanence::Temporary})
                os << fmt::format("{},{},{},{}\n", prefix, to_string(type), to_string(p), r.census.count(type, p));
        os << fmt::format("{},TotalUndirected,Any,{}\n", prefix, r.census.undirected_total());
        os << fmt::format("{},TotalDirected,Any,{}\n", prefix, r.census.directed_total());
    }
}

void write_degree_csv(std::ostream& os, std::span<const CensusRow> rows) {
    os << "time_s,range_km,mode,degree,satellites\n";
    for (const CensusRow& r : rows)
        for (const auto& [deg, count] : r.degree_histogram)
            os << fmt::format("{},{},{},{},{}\n", r.time_s, format_range(r.lisl_range_km), to_string(r.mode), deg, count);
}

void write_slots_csv(std::ostream& os, const ScenarioResult& result) {
    os << "slot_index,path_found,latency_ms,propagation_ms,node_delay_ms,hop_count,path\n";
    for (const SlotRecord& rec : result.slots) {
        if (!rec.path) {
            os << fmt::format("{},false,,,,,\n", rec.slot_index);
            continue;
        }
        const SlotPath& p = *rec.path;
        os << fmt::format("{},true,{},{},{},{},{}\n", rec.slot_index, fixed(p.latency_ms), fixed(p.propagation_ms),
                          fixed(p.node_delay_ms), p.hop_count, fmt::join(p.nodes, ";"));
    }
}

void write_summary_csv(std::ostream& os, std::span<const ScenarioResult> results) {
    os << "scenario,mode,range_km,avg_latency_ms,avg_hops,slots_with_path,slot_count\n";
    for (const ScenarioResult& r : results)
        os << fmt::format("{},{},{},{},{},{},{}\n", r.config.name, to_string(r.config.mode),
                          format_range(r.config.lisl_range_km), fixed_or_empty(r.summary.avg_latency_ms),
                          fixed_or_empty(r.summary.avg_hops), r.summary.slots_with_path, r.summary.slot_count);
}

void write_comparison_csv(std::ostream& os, std::span<const Comparison> rows) {
    os << "scenario,range_km,ng_avg_latency_ms,nng_avg_latency_ms,latency_improvement_ms,"
          "ng_avg_hops,nng_avg_hops,hop_improvement,ng_slots_with_path,nng_slots_with_path,slot_count\n";
    for (const Comparison& c : rows)
        os << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", c.nng.config.name, format_range(c.lisl_range_km),
                          fixed_or_empty(c.ng.summary.avg_latency_ms), fixed_or_empty(c.nng.summary.avg_latency_ms),
                          fixed_or_empty(c.latency_improvement_ms), fixed_or_empty(c.ng.summary.avg_hops),
                          fixed_or_empty(c.nng.summary.avg_hops), fixed_or_empty(c.hop_improvement),
                          c.ng.summary.slots_with_path, c.nng.summary.slots_with_path, c.nng.summary.slot_count);
}

ordered_json summary_json(std::span<const ScenarioResult> results) {
    ordered_json out = ordered_json::array();
    for (const ScenarioResult& r : results)
        out.push_back({{"scenario", r.config.name},
                       {"src", r.config.src.name},
                       {"dst", r.config.dst.name},
                       {"mode", to_string(r.config.mode)},
                       {"range_km", r.config.lisl_range_km},
                       {"avg_latency_ms", number_or_null(r.summary.avg_latency_ms)},
                       {"avg_propagation_ms", number_or_null(r.summary.avg_propagation_ms)},
                       {"avg_hops", number_or_null(r.summary.avg_hops)},
                       {"slots_with_path", r.summary.slots_with_path},
                       {"slot_count", r.summary.slot_count}});
    return out;
}

ordered_json comparison_json(std::span<const Comparison> rows) {
    ordered_json out = ordered_json::array();
    for (const Comparison& c : rows)
        out.push_back({{"scenario", c.nng.config.name},
                       {"range_km", c.lisl_range_km},
                       {"ng", summary_json(std::span(&c.ng, 1)).front()},
                       {"nng", summary_json(std::span(&c.nng, 1)).front()},
                       {"latency_improvement_ms", number_or_null(c.latency_improvement_ms)},
                       {"hop_improvement", number_or_null(c.hop_improvement)}});
    return out;
}

ordered_json census_json(std::span<const CensusRow> rows) {
    ordered_json out = ordered_json::array();
    for (const CensusRow& r : rows) {
        ordered_json counts = ordered_json::object();
        for (LinkType type : kAllLinkTypes)
            for (Permanence p : {Permanence::Permanent, Permanence::Temporary})
                counts[fmt::format("{}/{}", to_string(type), to_string(p))] = r.census.count(type, p);
        ordered_json histogram = ordered_json::object();
        for (const auto& [deg, n] : r.degree_histogram) histogram[std::to_string(deg)] = n;
        out.push_back({{"time_s", r.time_s},
                       {"range_km", r.lisl_range_km},
                       {"mode", to_string(r.mode)},
                       {"counts", counts},
                       {"undirected_total", r.census.undirected_total()},
                       {"directed_total", r.census.directed_total()},
                       {"degree_histogram", histogram}});
    }
    return out;
}

}  // namespace fsosn
