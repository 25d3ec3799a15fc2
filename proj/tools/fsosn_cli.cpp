// Command-line front end: link censuses, scenario runs, NG/NNG comparisons,
// range sweeps and the self-validation suite.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fsosn/config.hpp"
#include "fsosn/errors.hpp"
#include "fsosn/report.hpp"
#include "fsosn/scenario.hpp"
#include "fsosn/validation.hpp"

namespace fs = std::filesystem;
using namespace fsosn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Writer>
void write_file(const fs::path& path, Writer&& writer) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(fmt::format("cannot create {}: {}", path.parent_path().string(), ec.message()));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(fmt::format("cannot open {} for writing", path.string()));
    writer(out);
    out.flush();
    if (!out) throw IoError(fmt::format("failed writing {}", path.string()));
    std::cout << "wrote " << path.string() << '\n';
}

void write_json(const fs::path& path, const nlohmann::ordered_json& doc) {
    write_file(path, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
}

std::string file_stem(const ScenarioConfig& cfg) {
    return fmt::format("slots_{}_{}_{}", cfg.name, to_string(cfg.mode), format_range(cfg.lisl_range_km));
}

struct Options {
    std::string config_path;
    std::string out_dir;
    int parallelism = -1;

    // census
    std::vector<double> census_ranges;
    std::vector<std::string> census_modes;
    double census_time = 0.0;
    bool census_stations = false;

    // run / compare / sweep
    std::string scenario;
    std::optional<double> range;
    std::string mode = "NNG";
    int slots = 0;
    bool write_slots = false;
};

RunConfig load(const Options& opt) {
    RunConfig cfg = opt.config_path.empty() ? parse_config_text("") : parse_config(opt.config_path);
    if (!opt.out_dir.empty()) cfg.output_dir = opt.out_dir;
    if (opt.parallelism >= 0) cfg.parallelism = static_cast<unsigned>(opt.parallelism);
    return cfg;
}

NetworkModel make_model(const RunConfig& cfg) {
    return NetworkModel(cfg.constellation, cfg.constants, cfg.epoch, cfg.permanence_step_s);
}

ScenarioSpec selected_scenario(const RunConfig& cfg, const Options& opt) {
    if (cfg.scenarios.empty()) throw ConfigError("scenarios: the config defines none");
    ScenarioSpec spec = opt.scenario.empty() ? cfg.scenarios.front() : cfg.scenario(opt.scenario);
    if (opt.slots > 0) spec.slot_count = opt.slots;
    return spec;
}

int cmd_census(const Options& opt) {
    const RunConfig cfg = load(opt);
    const NetworkModel model = make_model(cfg);
    std::vector<double> ranges = opt.census_ranges;
    if (ranges.empty()) ranges = {659.5, 1319.0, 1500.0, 1700.0, 2500.0, 3500.0, 5016.0};
    std::vector<NetworkMode> modes;
    for (const std::string& m : opt.census_modes) modes.push_back(parse_mode(m));
    if (modes.empty()) modes = {NetworkMode::NG, NetworkMode::NNG};
    for (double r : ranges)
        if (!(r >= 0.0)) throw ConfigError(fmt::format("--range: {} is not a valid range", r));

    const std::span<const GroundStation> stations =
        opt.census_stations ? std::span<const GroundStation>(cfg.stations) : std::span<const GroundStation>();
    std::vector<CensusRow> rows;
    for (double range : ranges)
        for (NetworkMode mode : modes) {
            rows.push_back(make_census_row(model.snapshot(opt.census_time, range, mode, stations)));
            const CensusRow& r = rows.back();
            std::cout << fmt::format("range {:>7} km  {:<3}  links {:>7} (directed {:>7})  degrees", format_range(range),
                                     to_string(mode), r.census.undirected_total(), r.census.directed_total());
            for (const auto& [deg, n] : r.degree_histogram) std::cout << fmt::format(" {}x{}", deg, n);
            std::cout << '\n';
        }
    write_file(cfg.output_dir / "census.csv", [&](std::ostream& os) { write_census_csv(os, rows); });
    write_file(cfg.output_dir / "degrees.csv", [&](std::ostream& os) { write_degree_csv(os, rows); });
    write_json(cfg.output_dir / "census.json", census_json(rows));
    return kExitOk;
}

void print_summary(const ScenarioResult& r) {
    const MetricsSummary& s = r.summary;
    std::cout << fmt::format("{:<18} {:<3} {:>7} km  paths {:>4}/{:<4}  latency {:>10}  hops {:>6}\n", r.config.name,
                             to_string(r.config.mode), format_range(r.config.lisl_range_km), s.slots_with_path,
                             s.slot_count, s.avg_latency_ms ? fmt::format("{:.2f} ms", *s.avg_latency_ms) : "--",
                             s.avg_hops ? fmt::format("{:.2f}", *s.avg_hops) : "--");
}

int cmd_run(const Options& opt) {
    const RunConfig cfg = load(opt);
    const NetworkModel model = make_model(cfg);
    const Simulator sim(model, cfg.parallelism);
    const ScenarioSpec spec = selected_scenario(cfg, opt);

    ScenarioConfig sc = cfg.expand(spec).front();
    sc.lisl_range_km = opt.range.value_or(spec.ranges_km.front());
    sc.mode = parse_mode(opt.mode);
    sc.validate();
    const ScenarioResult result = sim.run(sc);
    print_summary(result);

    write_file(cfg.output_dir / (file_stem(sc) + ".csv"), [&](std::ostream& os) { write_slots_csv(os, result); });
    write_file(cfg.output_dir / "summary.csv", [&](std::ostream& os) { write_summary_csv(os, std::span(&result, 1)); });
    write_json(cfg.output_dir / "summary.json", summary_json(std::span(&result, 1)));
    return kExitOk;
}

void write_comparisons(const RunConfig& cfg, const Options& opt, const std::vector<Comparison>& rows,
                       const std::string& stem) {
    std::vector<ScenarioResult> flat;
    for (const Comparison& c : rows) {
        flat.push_back(c.ng);
        flat.push_back(c.nng);
        std::cout << fmt::format("{:<18} {:>7} km  improvement {:>10}  hops {:>6}\n", c.nng.config.name,
                                 format_range(c.lisl_range_km),
                                 c.latency_improvement_ms ? fmt::format("{:.2f} ms", *c.latency_improvement_ms) : "--",
                                 c.hop_improvement ? fmt::format("{:.2f}", *c.hop_improvement) : "--");
    }
    for (const ScenarioResult& r : flat) print_summary(r);
    write_file(cfg.output_dir / (stem + ".csv"), [&](std::ostream& os) { write_comparison_csv(os, rows); });
    write_json(cfg.output_dir / (stem + ".json"), comparison_json(rows));
    write_file(cfg.output_dir / "summary.csv", [&](std::ostream& os) { write_summary_csv(os, flat); });
    write_json(cfg.output_dir / "summary.json", summary_json(flat));
    if (opt.write_slots)
        for (const ScenarioResult& r : flat)
            write_file(cfg.output_dir / (file_stem(r.config) + ".csv"), [&](std::ostream& os) { write_slots_csv(os, r); });
}

int cmd_compare(const Options& opt) {
    const RunConfig cfg = load(opt);
    const NetworkModel model = make_model(cfg);
    const Simulator sim(model, cfg.parallelism);
    const ScenarioSpec spec = selected_scenario(cfg, opt);
    ScenarioConfig sc = cfg.expand(spec).front();
    sc.lisl_range_km = opt.range.value_or(spec.ranges_km.front());
    sc.validate();
    write_comparisons(cfg, opt, {sim.compare(sc)}, "comparison");
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    const RunConfig cfg = load(opt);
    const NetworkModel model = make_model(cfg);
    const Simulator sim(model, cfg.parallelism);

    std::vector<ScenarioSpec> specs;
    if (opt.scenario.empty()) {
        specs = cfg.scenarios;
        if (opt.slots > 0)
            for (ScenarioSpec& s : specs) s.slot_count = opt.slots;
    } else {
        specs.push_back(selected_scenario(cfg, opt));
    }

    // Every scenario and range runs in one batch so slots share snapshots.
    std::vector<ScenarioConfig> configs;
    for (const ScenarioSpec& spec : specs)
        for (ScenarioConfig sc : cfg.expand(spec))
            for (NetworkMode mode : {NetworkMode::NG, NetworkMode::NNG}) {
                sc.mode = mode;
                if (std::find_if(configs.begin(), configs.end(), [&](const ScenarioConfig& c) {
                        return c.name == sc.name && c.lisl_range_km == sc.lisl_range_km && c.mode == mode;
                    }) == configs.end())
                    configs.push_back(sc);
            }
    std::vector<ScenarioResult> runs = sim.run_batch(configs);
    std::vector<Comparison> rows;
    for (std::size_t i = 0; i + 1 < runs.size(); i += 2) rows.push_back(make_comparison(runs[i], runs[i + 1]));
    write_comparisons(cfg, opt, rows, "sweep");
    return kExitOk;
}

int cmd_validate(const Options& opt) {
    const RunConfig cfg = load(opt);
    std::optional<int> pinned;
    const auto checks = quick_validation(cfg.constellation, cfg.constants, cfg.epoch, &pinned);
    bool ok = true;
    for (const CheckResult& c : checks) {
        std::cout << fmt::format("[{}] {}: {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
        ok = ok && c.passed;
    }
    if (pinned) {
        std::cout << fmt::format("pinned phasing offset F = {}", *pinned);
        if (*pinned != cfg.constellation.phasing_offset)
            std::cout << fmt::format(" (config uses F = {})", cfg.constellation.phasing_offset);
        std::cout << '\n';
    }
    return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laser inter-satellite link network simulator (permanent vs temporary links)"};
    app.footer(describe_config_keys() +
               "\nExit codes: 0 success, 1 runtime error, 2 configuration error, 3 validation failure.");
    app.require_subcommand(1);

    Options opt;
    app.add_option("-c,--config", opt.config_path, "JSON run configuration (defaults when omitted)");
    app.add_option("-o,--out", opt.out_dir, "output directory (overrides output_dir)");
    app.add_option("-j,--parallelism", opt.parallelism, "worker threads, 0 = all cores (overrides parallelism)");

    CLI::App* census = app.add_subcommand("census", "link census and degree histogram of single snapshots");
    census->add_option("--range", opt.census_ranges, "LISL range(s) in km (default: the seven study ranges)");
    census->add_option("--mode", opt.census_modes, "NG and/or NNG (default: both)");
    census->add_option("--time", opt.census_time, "snapshot time in seconds");
    census->add_flag("--with-stations", opt.census_stations, "include links to the configured ground stations");

    CLI::App* run = app.add_subcommand("run", "one scenario at one range and mode");
    CLI::App* compare = app.add_subcommand("compare", "NG against NNG for one scenario at one range");
    CLI::App* sweep = app.add_subcommand("sweep", "NG against NNG over every configured range");
    for (CLI::App* sub : {run, compare, sweep}) {
        sub->add_option("--scenario", opt.scenario, "scenario name (default: first configured)");
        sub->add_option("--slots", opt.slots, "override slot_count");
    }
    for (CLI::App* sub : {run, compare}) sub->add_option("--range", opt.range, "LISL range in km");
    run->add_option("--mode", opt.mode, "NG or NNG")->capture_default_str();
    for (CLI::App* sub : {compare, sweep}) sub->add_flag("--slots-files", opt.write_slots, "also write per-slot CSVs");

    CLI::App* validate = app.add_subcommand("validate", "self-checks: geometry constants, phasing scan, censuses, distances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (census->parsed()) return cmd_census(opt);
        if (run->parsed()) return cmd_run(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (validate->parsed()) return cmd_validate(opt);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const LookupError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitRuntime;
}
