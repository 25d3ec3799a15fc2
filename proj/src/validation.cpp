#include "fsosn/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "fsosn/reference.hpp"
#include "fsosn/stations.hpp"

namespace fsosn {

int slot_nearest_latitude(const Constellation& constellation, SatelliteId sat, double target_deg,
                          double slot_duration_s) {
    const int slots = static_cast<int>(std::ceil(constellation.orbital_period_s() / slot_duration_s));
    int best = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < slots; ++k) {
        const double gap =
            std::abs(latitude_of(constellation.state_at(sat, k * slot_duration_s).position_km) - target_deg);
        if (gap < best_gap) {
            best_gap = gap;
            best = k;
        }
    }
    return best;
}

ConnectivityProfile satellite_connectivity(const NetworkModel& model, SatelliteId sat, std::span<const double> ranges,
                                           double north_latitude_deg) {
    ConnectivityProfile profile;
    profile.equator_slot = slot_nearest_latitude(model.constellation(), sat, 0.0);
    profile.north_slot = slot_nearest_latitude(model.constellation(), sat, north_latitude_deg);

    const double widest = *std::max_element(ranges.begin(), ranges.end());
    const GraphSnapshot pl = model.snapshot(0.0, widest, NetworkMode::NG);
    const GraphSnapshot equator = model.snapshot(profile.equator_slot, widest, NetworkMode::NNG);
    const GraphSnapshot north = model.snapshot(profile.north_slot, widest, NetworkMode::NNG);

    for (double range : ranges) {
        ConnectivityRow row;
        row.lisl_range_km = range;
        const auto degrees = satellite_degrees(restrict_snapshot(pl, model.permanence(), range, NetworkMode::NG));
        row.permanent_degree = degrees[model.constellation().index_of(sat)];
        row.permanent_uniform =
            std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == row.permanent_degree; });
        row.equator_degree = degree(restrict_snapshot(equator, model.permanence(), range, NetworkMode::NNG), sat);
        row.north_degree = degree(restrict_snapshot(north, model.permanence(), range, NetworkMode::NNG), sat);
        profile.rows.push_back(row);
    }
    return profile;
}

namespace {

bool permanent_column_matches(const ConnectivityProfile& profile) {
    for (std::size_t i = 0; i < profile.rows.size(); ++i) {
        const ConnectivityRow& row = profile.rows[i];
        const int gap = std::abs(row.permanent_degree - reference::kPermanentDegree[i]);
        if (!row.permanent_uniform || gap > (i < 4 ? 0 : 2)) return false;
    }
    return true;
}

int temporary_deviation(const ConnectivityProfile& profile) {
    int total = 0;
    for (std::size_t i = 0; i < profile.rows.size(); ++i)
        total += std::abs(profile.rows[i].equator_degree - reference::kEquatorDegree[i]) +
                 std::abs(profile.rows[i].north_degree - reference::kNorthDegree[i]);
    return total;
}

}  // namespace

PhasingScan scan_phasing(const ConstellationSpec& base, const PhysicalConstants& constants,
                         const SimulationEpoch& epoch) {
    PhasingScan scan;
    for (int f = 0; f < base.plane_count; ++f) {
        ConstellationSpec spec = base;
        spec.phasing_offset = f;
        const NetworkModel model(spec, constants, epoch);
        PhasingCandidate c;
        c.phasing_offset = f;
        c.profile = satellite_connectivity(model, {0, 0}, reference::kLislRangesKm, reference::kNorthLatitudeDeg);
        c.permanent_matches = permanent_column_matches(c.profile);
        c.temporary_deviation = temporary_deviation(c.profile);
        scan.candidates.push_back(std::move(c));
    }
    const PhasingCandidate* best = nullptr;
    for (const PhasingCandidate& c : scan.candidates)
        if (c.permanent_matches && (!best || c.temporary_deviation < best->temporary_deviation)) best = &c;
    if (best) scan.pinned = best->phasing_offset;
    return scan;
}

double CensusRatio::ratio() const {
    return ng.undirected_total() == 0 ? std::numeric_limits<double>::infinity()
                                      : static_cast<double>(nng.undirected_total()) / ng.undirected_total();
}

std::vector<CensusRatio> census_ratios(const NetworkModel& model, std::span<const double> ranges, double t_s) {
    const double widest = *std::max_element(ranges.begin(), ranges.end());
    const GraphSnapshot full = model.snapshot(t_s, widest, NetworkMode::NNG);
    std::vector<CensusRatio> out;
    for (double range : ranges) {
        CensusRatio r;
        r.lisl_range_km = range;
        r.ng = link_census(restrict_snapshot(full, model.permanence(), range, NetworkMode::NG));
        r.nng = link_census(restrict_snapshot(full, model.permanence(), range, NetworkMode::NNG));
        out.push_back(r);
    }
    return out;
}

std::vector<CheckResult> quick_validation(const ConstellationSpec& spec, const PhysicalConstants& constants,
                                          const SimulationEpoch& epoch, std::optional<int>* pinned_out) {
    std::vector<CheckResult> checks;

    {
        const Constellation c{spec, epoch};
        const double chord = distance(c.state_at({0, 0}, 0.0).position_km, c.state_at({0, 1}, 0.0).position_km);
        const double max_range = max_lisl_range(spec.altitude_km, constants.occlusion_clearance_km,
                                                constants.earth_radius_km);
        checks.push_back({"minimum LISL range (neighbour chord)", std::abs(chord - 659.5) <= 1.0,
                          fmt::format("{:.3f} km, expected 659.5 +- 1", chord)});
        checks.push_back({"maximum LISL range", std::abs(max_range - 5016.0) <= 1.0,
                          fmt::format("{:.3f} km, expected 5016 +- 1", max_range)});
    }

    const PhasingScan scan = scan_phasing(spec, constants, epoch);
    if (pinned_out) *pinned_out = scan.pinned;
    checks.push_back({"phasing scan", scan.pinned.has_value(),
                      scan.pinned ? fmt::format("pinned F = {}", *scan.pinned) : "no offset reproduces the NG degrees"});

    if (scan.pinned) {
        const PhasingCandidate& c = scan.candidates[static_cast<std::size_t>(*scan.pinned)];
        std::string pl, eq, north;
        bool north_exceeds = true;
        for (std::size_t i = 0; i < c.profile.rows.size(); ++i) {
            const ConnectivityRow& row = c.profile.rows[i];
            pl += fmt::format("{}{}", i ? "/" : "", row.permanent_degree);
            eq += fmt::format("{}{}", i ? "/" : "", row.equator_degree);
            north += fmt::format("{}{}", i ? "/" : "", row.north_degree);
            if (row.lisl_range_km >= 1319.0 && row.north_degree <= row.equator_degree) north_exceeds = false;
        }
        checks.push_back({"NG degree census", c.permanent_matches, pl});
        const ConnectivityRow& at1700 = c.profile.rows[3];
        checks.push_back({"NNG degree of x10101 at 1,700 km",
                          std::abs(at1700.equator_degree - 22) <= 3 && std::abs(at1700.north_degree - 40) <= 3,
                          fmt::format("equator {} (22 +- 3), north {} (40 +- 3)", at1700.equator_degree,
                                      at1700.north_degree)});
        checks.push_back({"more temporary neighbours near the pole", north_exceeds,
                          fmt::format("equator {} vs north {}", eq, north)});

        ConstellationSpec pinned_spec = spec;
        pinned_spec.phasing_offset = *scan.pinned;
        const NetworkModel model(pinned_spec, constants, epoch);
        bool ratios_ok = true;
        std::string ratios;
        for (const CensusRatio& r : census_ratios(model, reference::kLislRangesKm)) {
            ratios_ok = ratios_ok && r.ratio() >= 2.0;
            ratios += fmt::format("{}{:.2f}", ratios.empty() ? "" : "/", r.ratio());
        }
        checks.push_back({"NNG/NG link census ratio >= 2", ratios_ok, ratios});
    }

    const auto& stations = bundled_stations();
    const auto gc = [&](const char* a, const char* b) {
        const GroundStation& sa = find_station(stations, a);
        const GroundStation& sb = find_station(stations, b);
        return great_circle_distance({sa.latitude_deg, sa.longitude_deg}, {sb.latitude_deg, sb.longitude_deg},
                                     constants.earth_radius_km);
    };
    const struct {
        const char* a;
        const char* b;
        double expected;
    } pairs[] = {{"Toronto", "Istanbul", reference::kTorontoIstanbulKm},
                 {"Madrid", "Tokyo", reference::kMadridTokyoKm},
                 {"NewYork", "Jakarta", reference::kNewYorkJakartaKm}};
    for (const auto& p : pairs) {
        const double d = gc(p.a, p.b);
        checks.push_back({fmt::format("great-circle {}-{}", p.a, p.b), std::abs(d - p.expected) <= 0.01 * p.expected,
                          fmt::format("{:.1f} km, expected {:.0f} +- 1%", d, p.expected)});
    }
    return checks;
}

}  // namespace fsosn
