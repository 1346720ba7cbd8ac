// Complete state of one simulation run: grid, agent population, tick
// counter and the run's RNG stream. Mutations go through the helpers so
// the per-patch occupancy and per-breed counts stay consistent.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mssim/agents.hpp"
#include "mssim/config.hpp"
#include "mssim/rng.hpp"
#include "mssim/world.hpp"

namespace mssim {

// Births/deaths bookkeeping for the most recent tick; used by the
// population-ledger checks and handy when debugging a run.
struct TickStats {
    int influx_spawned = 0;
    int treg_activations = 0;
    int teff_activations = 0;
    int teff_attacks = 0;
    int teff_duplications = 0;
    int cytokines_emitted = 0;
    int treg_kills = 0; // Teffs removed by policing
    int treg_police_duplications = 0;
    int treg_repro_duplications = 0;
    int virus_contact_deaths = 0;
    int cytokine_barrier_deaths = 0;
    int bbb_damage_events = 0;
    int energy_deaths = 0;

    int births() const {
        return influx_spawned + teff_duplications + cytokines_emitted +
               treg_police_duplications + treg_repro_duplications;
    }
    int deaths() const {
        return treg_kills + virus_contact_deaths + cytokine_barrier_deaths + energy_deaths;
    }
};

struct WorldState {
    SimParams params;
    Grid grid;
    std::vector<AgentState> agents; // ascending by id; may hold dead entries mid-tick
    std::uint64_t tick = 0;
    RngStream rng;
    std::uint64_t next_agent_id = 1;
    TickStats last_tick;

    std::array<std::uint16_t, kPatchCount> patch_occupancy{}; // live agents per patch
    std::array<int, kBreedCount> breed_counts{};              // live agents per breed

    std::uint64_t spawn(Breed breed, Position pos, double heading, double energy);
    void kill(std::uint32_t index);
    void set_position(std::uint32_t index, Position pos);
    void transition(std::uint32_t index, Breed to);

    /// Drop dead entries (order, and hence id ordering, preserved).
    void compact();

    int live_agents() const;
    int occupancy_at(Position p) const {
        return patch_occupancy[Grid::patch_index(p.patch_x(), p.patch_y())];
    }
};

} // namespace mssim
