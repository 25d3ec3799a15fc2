#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "fsosn/links.hpp"
#include "fsosn/scenario.hpp"

namespace fsosn {

struct CensusRow {
    double time_s = 0.0;
    double lisl_range_km = 0.0;
    NetworkMode mode = NetworkMode::NNG;
    LinkCensus census;
    std::map<int, std::size_t> degree_histogram;  // degree -> satellites
};

CensusRow make_census_row(const GraphSnapshot& snapshot);

// time_s,range_km,mode,link_type,permanence,count. Each snapshot contributes
// one row per (type, permanence) plus TotalUndirected and TotalDirected rows
// with permanence "Any".
void write_census_csv(std::ostream& os, std::span<const CensusRow> rows);
// time_s,range_km,mode,degree,satellites
void write_degree_csv(std::ostream& os, std::span<const CensusRow> rows);

// slot_index,path_found,latency_ms,propagation_ms,node_delay_ms,hop_count,path
void write_slots_csv(std::ostream& os, const ScenarioResult& result);
// scenario,mode,range_km,avg_latency_ms,avg_hops,slots_with_path,slot_count
void write_summary_csv(std::ostream& os, std::span<const ScenarioResult> results);
// NG against NNG per range.
void write_comparison_csv(std::ostream& os, std::span<const Comparison> rows);

nlohmann::ordered_json summary_json(std::span<const ScenarioResult> results);
nlohmann::ordered_json comparison_json(std::span<const Comparison> rows);
nlohmann::ordered_json census_json(std::span<const CensusRow> rows);

// Shortest round-trip form, so 659.5 stays 659.5.
std::string format_range(double km);

}  // namespace fsosn
