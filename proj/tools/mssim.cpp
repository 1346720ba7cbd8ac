// Command-line front end: single runs, parameter sweeps, and the
// scenario preset table.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mssim/engine.hpp"
#include "mssim/sweep.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

int cmd_simulate(const std::string& config_path, int scenario, std::uint64_t seed, bool seed_set,
                 std::uint64_t ticks, bool ticks_set, const std::string& out_dir,
                 int snapshot_every, bool plot) {
    mssim::SimParams params;
    if (!config_path.empty())
        params = mssim::parse_config(read_file(config_path));
    else
        params = mssim::preset(scenario);
    if (seed_set) params.master_seed = seed;
    if (ticks_set) params.ticks = ticks;

    const fs::path out{out_dir};
    fs::create_directories(out);
    if (snapshot_every > 0) fs::create_directories(out / "snapshots");

    const auto observer = [&](const mssim::WorldState& w) {
        if (snapshot_every <= 0) return;
        if (w.tick % static_cast<std::uint64_t>(snapshot_every) != 0) return;
        const fs::path file = out / "snapshots" / ("tick_" + std::to_string(w.tick) + ".txt");
        write_file(file, mssim::write_snapshot(w, params.show_energy));
    };

    const mssim::RunOutput result = mssim::run(params, params.ticks, observer);
    write_file(out / "metrics.csv", mssim::write_csv(result.records));

    if (plot) {
        const std::vector<std::string> series = {"virus", "treg_act", "teff_act", "cytokine",
                                                 "unrecoverable"};
        write_file(out / "plot.svg", mssim::emit_plot(result.records, series));
    }

    const mssim::MetricsRecord& last = result.records.back();
    std::printf("completed %llu ticks: unrecoverable=%d recoverable=%d agents=%d\n",
                static_cast<unsigned long long>(last.tick), last.unrecoverable, last.recoverable,
                result.final_world.live_agents());
    return 0;
}

int cmd_sweep(const std::string& spec_path, int parallel, const std::string& out_dir) {
    const mssim::SweepSpec spec = mssim::parse_sweep_spec(read_file(spec_path));

    const fs::path out{out_dir};
    fs::create_directories(out / "runs");

    const auto sink = [&](const mssim::RunPlan& plan, const mssim::RunOutput& run_out) {
        const fs::path dir = out / "runs" / std::to_string(plan.index);
        fs::create_directories(dir);
        write_file(dir / "metrics.csv", mssim::write_csv(run_out.records));
    };

    const mssim::SweepOutcome outcome = mssim::run_sweep(spec, parallel, sink);
    write_file(out / "aggregate.csv", outcome.aggregate_csv);

    int failures = 0;
    for (const auto& r : outcome.results) {
        if (r.error.empty()) continue;
        ++failures;
        std::fprintf(stderr, "run %zu (seed %llu) failed: %s\n", r.index,
                     static_cast<unsigned long long>(r.seed), r.error.c_str());
    }
    std::printf("completed %zu runs (%d failed); aggregate in %s\n", outcome.results.size(),
                failures, (out / "aggregate.csv").string().c_str());
    return failures == 0 ? 0 : 1;
}

int cmd_presets() {
    std::printf("%-18s", "parameter");
    for (int id = 1; id <= 6; ++id) std::printf(" %12s", ("scenario_" + std::to_string(id)).c_str());
    std::printf("\n");
    for (const auto& key : mssim::config_keys()) {
        if (key == "master_seed" || key == "ticks" || key == "grid_extent") continue;
        std::printf("%-18s", key.c_str());
        for (int id = 1; id <= 6; ++id)
            std::printf(" %12s", mssim::get_config_value(mssim::preset(id), key).c_str());
        std::printf("\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agent-based simulator of Treg/Teff cross-regulation on a zoned grid"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run one simulation");
    std::string config_path;
    int scenario = 1;
    std::uint64_t seed = 0;
    std::uint64_t ticks = 0;
    std::string out_dir = "out";
    int snapshot_every = 0;
    bool plot = false;
    auto* config_opt = simulate->add_option("--config", config_path, "config file (key = value)");
    auto* scenario_opt =
        simulate->add_option("--scenario", scenario, "scenario preset (1..6)")->check(CLI::Range(1, 6));
    config_opt->excludes(scenario_opt);
    scenario_opt->excludes(config_opt);
    auto* seed_opt = simulate->add_option("--seed", seed, "master RNG seed");
    auto* ticks_opt = simulate->add_option("--ticks", ticks, "number of ticks");
    simulate->add_option("--out", out_dir, "output directory (default: out)");
    simulate->add_option("--snapshot-every", snapshot_every, "write a grid snapshot every K ticks")
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--plot", plot, "write plot.svg");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    std::string spec_path;
    int parallel = 1;
    std::string sweep_out = "sweep_out";
    sweep->add_option("--spec", spec_path, "sweep spec file")->required();
    sweep->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_out, "output directory (default: sweep_out)");

    // presets
    auto* presets = app.add_subcommand("presets", "print the scenario preset table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            if (config_path.empty() && scenario_opt->count() == 0)
                throw std::runtime_error("simulate needs --config or --scenario");
            return cmd_simulate(config_path, scenario, seed, seed_opt->count() > 0, ticks,
                                ticks_opt->count() > 0, out_dir, snapshot_every, plot);
        }
        if (sweep->parsed()) return cmd_sweep(spec_path, parallel, sweep_out);
        if (presets->parsed()) return cmd_presets();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
