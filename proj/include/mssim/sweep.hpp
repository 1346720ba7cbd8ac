// Cartesian parameter sweeps with seeded replicates, optional worker
// threads, and per-cell aggregate statistics.
//
// Sweep spec files use the config format plus list syntax for axes:
//
//   scenario = [1, 2, 3]        # axis over presets
//   ate_mye = [2, 5]            # axis over one parameter
//   replicates = 20
//   base_seed = 1000
//   ticks = 2000                # scalar keys override the base params
//
// Axes expand in lexicographic key order; replicates cycle fastest.
// Run seeds are base_seed + enumeration index, so they are distinct
// and independent of how many workers execute the sweep.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mssim/config.hpp"
#include "mssim/engine.hpp"

namespace mssim {

struct SweepSpec {
    SimParams base;
    // scalar overrides from the spec file, applied after a preset when
    // a `scenario` axis selects one
    std::vector<std::pair<std::string, std::string>> overrides;
    // axis key -> values (text form), sorted by key
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;
    int replicates = 1;
    std::uint64_t base_seed = 0;
    std::uint64_t ticks = 2000;
};

/// Parse a sweep spec document. Axis keys must be config keys or
/// `scenario` (preset 1..6 as the cell's starting point).
SweepSpec parse_sweep_spec(std::string_view text);

struct RunPlan {
    std::size_t index = 0; // enumeration index; seed = base_seed + index
    std::map<std::string, std::string> cell;
    int replicate = 0;
    std::uint64_t seed = 0;
    SimParams params;
};

/// Deterministic enumeration of every (cell, replicate) pair.
std::vector<RunPlan> expand_sweep(const SweepSpec& spec);

struct RunResult {
    std::size_t index = 0;
    std::map<std::string, std::string> cell;
    int replicate = 0;
    std::uint64_t seed = 0;
    MetricsRecord final_record;
    int peak_teff_act = 0;
    std::optional<std::uint64_t> first_unrecoverable_tick;
    std::string error; // empty on success
};

struct SweepOutcome {
    std::vector<RunResult> results; // in expand_sweep order
    std::string aggregate_csv;
};

/// Execute every planned run on up to `parallelism` workers. Results
/// (and aggregate bytes) are identical for any parallelism level. A
/// failed run carries its error per-result; the sweep continues. The
/// optional sink receives each finished run's trajectory (called from
/// worker threads; runs are independent, so writing per-run files needs
/// no locking).
SweepOutcome run_sweep(const SweepSpec& spec, int parallelism,
                       const std::function<void(const RunPlan&, const RunOutput&)>& sink = {});

/// Aggregate table over results: per cell, median/min/max of final
/// unrecoverable and of peak active-Teff count.
std::string aggregate_csv(const std::vector<RunResult>& results);

} // namespace mssim
