#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsosn/links.hpp"

namespace fsosn {

// First slot within one orbital period at which the satellite's latitude is
// closest to target_deg.
int slot_nearest_latitude(const Constellation& constellation, SatelliteId sat, double target_deg,
                          double slot_duration_s = 1.0);

struct ConnectivityRow {
    double lisl_range_km = 0.0;
    int permanent_degree = 0;     // NG degree of the satellite at t = 0
    bool permanent_uniform = false;  // every satellite shares that NG degree
    int equator_degree = 0;       // NNG degree at the slot nearest 0 deg latitude
    int north_degree = 0;         // NNG degree at the slot nearest the northern reference latitude
};

struct ConnectivityProfile {
    int equator_slot = 0;
    int north_slot = 0;
    std::vector<ConnectivityRow> rows;
};

ConnectivityProfile satellite_connectivity(const NetworkModel& model, SatelliteId sat, std::span<const double> ranges,
                                           double north_latitude_deg);

struct PhasingCandidate {
    int phasing_offset = 0;
    ConnectivityProfile profile;
    bool permanent_matches = false;
    int temporary_deviation = 0;  // summed |degree - reference| over both latitude columns
};

struct PhasingScan {
    std::vector<PhasingCandidate> candidates;
    std::optional<int> pinned;
};

// Tries every phasing offset. A candidate matches when its NG degrees equal
// the reference exactly at the four shortest ranges and within +-2 beyond.
// The pinned offset is the matching candidate with the smallest temporary
// deviation, lowest offset first on ties.
PhasingScan scan_phasing(const ConstellationSpec& base, const PhysicalConstants& constants,
                         const SimulationEpoch& epoch = {});

struct CensusRatio {
    double lisl_range_km = 0.0;
    LinkCensus ng;
    LinkCensus nng;
    double ratio() const;
};

std::vector<CensusRatio> census_ratios(const NetworkModel& model, std::span<const double> ranges, double t_s = 0.0);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Fast self-checks behind `validate`: geometry constants, the phasing scan
// and the connectivity censuses, and the terrestrial distances.
std::vector<CheckResult> quick_validation(const ConstellationSpec& spec, const PhysicalConstants& constants,
                                          const SimulationEpoch& epoch, std::optional<int>* pinned = nullptr);

}  // namespace fsosn
