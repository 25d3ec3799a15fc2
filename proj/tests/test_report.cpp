#include <sstream>
#include <string>

#include "doctest.h"
#include "fsosn/report.hpp"

using namespace fsosn;

namespace {

ScenarioResult sample_result() {
    ScenarioResult r;
    r.config.name = "A-B";
    r.config.src = {"A", 0.0, 0.0, 1000.0};
    r.config.dst = {"B", 0.0, 10.0, 1000.0};
    r.config.lisl_range_km = 659.5;
    r.config.mode = NetworkMode::NNG;
    r.config.slot_count = 2;
    r.slots.push_back({0, 0.0, SlotPath{21.5, 1.5, 20.0, 2, {"A", "x10101", "x10102", "B"}}});
    r.slots.push_back({1, 1.0, std::nullopt});
    r.summary = summarize(r.slots);
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("range formatting keeps short forms") {
    CHECK(format_range(659.5) == "659.5");
    CHECK(format_range(1700.0) == "1700");
    CHECK(format_range(5016.5406) == "5016.5406");
}

TEST_CASE("slot csv") {
    std::ostringstream os;
    write_slots_csv(os, sample_result());
    const auto l = lines(os.str());
    REQUIRE(l.size() == 3);
    CHECK(l[0] == "slot_index,path_found,latency_ms,propagation_ms,node_delay_ms,hop_count,path");
    CHECK(l[1] == "0,true,21.500000,1.500000,20.000000,2,A;x10101;x10102;B");
    CHECK(l[2] == "1,false,,,,,");
}

TEST_CASE("summary csv and json") {
    const ScenarioResult r = sample_result();
    std::ostringstream os;
    write_summary_csv(os, std::span(&r, 1));
    const auto l = lines(os.str());
    REQUIRE(l.size() == 2);
    CHECK(l[1] == "A-B,NNG,659.5,21.500000,2.000000,1,2");

    const auto doc = summary_json(std::span(&r, 1));
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["scenario"] == "A-B");
    CHECK(doc[0]["mode"] == "NNG");
    CHECK(doc[0]["range_km"] == 659.5);
}

TEST_CASE("comparison csv leaves missing improvements empty") {
    ScenarioResult nng = sample_result();
    ScenarioResult ng = nng;
    ng.config.mode = NetworkMode::NG;
    ng.slots = {{0, 0.0, std::nullopt}, {1, 1.0, std::nullopt}};
    ng.summary = summarize(ng.slots);
    const Comparison c = make_comparison(ng, nng);
    CHECK_FALSE(c.latency_improvement_ms);

    std::ostringstream os;
    write_comparison_csv(os, std::span(&c, 1));
    const auto l = lines(os.str());
    REQUIRE(l.size() == 2);
    CHECK(l[1] == "A-B,659.5,,21.500000,,,2.000000,,0,1,2");
    CHECK(comparison_json(std::span(&c, 1))[0]["latency_improvement_ms"].is_null());
}

TEST_CASE("census csv lists every type with both totals") {
    GraphSnapshot g;
    g.plane_count = 2;
    g.sats_per_plane = 2;
    g.lisl_range_km = 1700.0;
    g.mode = NetworkMode::NG;
    g.links.push_back({NodeId{0}, NodeId{1}, 100.0, 0.3, LinkType::IntraOP, Permanence::Permanent});
    g.links.push_back({NodeId{0}, NodeId{2}, 200.0, 0.6, LinkType::AdjacentOP, Permanence::Temporary});
    const CensusRow row = make_census_row(g);
    CHECK(row.degree_histogram.at(0) == 1);
    CHECK(row.degree_histogram.at(1) == 2);
    CHECK(row.degree_histogram.at(2) == 1);

    std::ostringstream os;
    write_census_csv(os, std::span(&row, 1));
    const auto l = lines(os.str());
    CHECK(l.size() == 1 + kAllLinkTypes.size() * 2 + 2);
    CHECK(l[1] == "0,1700,NG,IntraOP,Permanent,1");
    CHECK(l[l.size() - 2] == "0,1700,NG,TotalUndirected,Any,2");
    CHECK(l.back() == "0,1700,NG,TotalDirected,Any,4");

    std::ostringstream deg;
    write_degree_csv(deg, std::span(&row, 1));
    CHECK(lines(deg.str()) == std::vector<std::string>{"time_s,range_km,mode,degree,satellites", "0,1700,NG,0,1",
                                                       "0,1700,NG,1,2", "0,1700,NG,2,1"});
}
