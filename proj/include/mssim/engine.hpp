// Tick scheduler and run loop.
//
// Phase order inside one tick (RNG draws consumed in ascending agent
// id within each pass):
//   1. influx (three Bernoulli draws: Treg, Teff, Virus)
//   2. Teff group:     move, then active-Teff attacks
//   3. Cytokine group: move, then barrier damage
//   4. Treg group:     move, policing, reproduction rolls
//   5. Virus group:    move, contact/activation, contact deaths
//   6. energy decrement + reaping, all breeds
//   7. myelin regrowth, barrier countdown
//   8. tick counter + 1
// Per-tick metric censuses consume no RNG and are taken by run()
// around tick().

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mssim/metrics.hpp"
#include "mssim/state.hpp"

namespace mssim {

/// Fresh world at tick 0: zoned grid, initial agent batches (Tregs,
/// then Teffs, then viruses), RNG seeded from master_seed. Throws
/// ConfigError when validate(params) reports violations.
WorldState init_run(const SimParams& params);

/// Advance the world by one tick.
void tick(WorldState& w);

struct RunOutput {
    std::vector<MetricsRecord> records; // one per tick, plus tick 0
    WorldState final_world;
};

/// init_run + `ticks` tick() calls, collecting a census after setup and
/// after every tick (ticks + 1 records). The optional observer runs at
/// the same points, after the census.
RunOutput run(const SimParams& params, std::uint64_t ticks,
              const std::function<void(const WorldState&)>& observer = {});

/// run() with params.ticks as the length.
RunOutput run(const SimParams& params);

/// Canonical full-state dump (hexfloat fields), for determinism checks
/// and debugging. Equal strings mean bit-identical states.
std::string dump_state(const WorldState& w);

} // namespace mssim
