#include "mssim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "mssim/detmath.hpp"

namespace mssim {

namespace {

/// Indices of live agents whose breed matches, ascending (agent order
/// is id order). This is the pass snapshot.
std::vector<std::uint32_t> snapshot(const WorldState& w, BreedMask mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < w.agents.size(); ++i) {
        const AgentState& a = w.agents[i];
        if (a.alive && mask_has(mask, a.breed)) out.push_back(i);
    }
    return out;
}

double heading_towards(Position from, Position to) {
    // Display-only heading (overwritten by the next move's random
    // draw); std::atan2 is fine here.
    const double deg = std::atan2(to.y - from.y, to.x - from.x) * (180.0 / 3.141592653589793);
    return norm_deg(deg);
}

} // namespace

double teff_duplication_probability(double myelin, const SimParams& params, int treg_here) {
    if (myelin <= 0.0) return 0.0;
    const double myelin_term =
        pow_det(myelin, params.hill1) / pow_det(params.init_mye, params.hill1);
    const double mean_pow = pow_det(params.mean_treg, params.hill2);
    const double denom = pow_det(static_cast<double>(treg_here), params.hill2) + mean_pow;
    const double treg_term = denom > 0.0 ? mean_pow / denom : 0.0;
    const double p = params.effector_dupl() * myelin_term * treg_term;
    return std::clamp(p, 0.0, 1.0);
}

void move_pass(WorldState& w, BreedMask which) {
    for (std::uint32_t i : snapshot(w, which)) {
        AgentState& a = w.agents[i];
        a.heading = w.rng.heading_deg();
        if (auto target = attempt_move(w.grid, a, w.rng)) w.set_position(i, *target);
    }
}

void teff_attack_phase(WorldState& w) {
    const SimParams& p = w.params;
    SpatialIndex index;
    index.build(w.agents);

    for (std::uint32_t i : snapshot(w, kMaskTeffActive)) {
        // spawn() may reallocate the agent array; keep scalars, not a reference
        const std::uint64_t id = w.agents[i].id;
        const Position pos = w.agents[i].pos;
        const double heading = w.agents[i].heading;

        PatchState& patch = w.grid.at(pos);
        if (patch.zone != Zone::WhiteMatter) continue;
        // Any remaining myelin can be attacked; the bite is capped by
        // what is left, so patches do reach exactly 0.
        if (!(patch.myelin > 0.0)) continue;

        patch.myelin = std::max(0.0, patch.myelin - p.ate_mye);
        w.agents[i].energy += p.ate_mye;
        ++w.last_tick.teff_attacks;

        for (int c = 0; c < p.cytokine_n; ++c) {
            w.spawn(Breed::Cytokine, pos, heading, p.cytokine_energy);
            ++w.last_tick.cytokines_emitted;
        }

        const int treg_here = index.count(w.agents, pos, p.treg_radius, kMaskTregs, id);
        const double dup = teff_duplication_probability(patch.myelin, p, treg_here);
        if (w.rng.uniform01() < dup) {
            w.spawn(Breed::TeffActive, pos, heading, w.agents[i].energy);
            ++w.last_tick.teff_duplications;
        }
    }
}

void cytokine_phase(WorldState& w) {
    for (std::uint32_t i : snapshot(w, kMaskCytokine)) {
        AgentState& a = w.agents[i];
        PatchState& patch = w.grid.at(a.pos);
        if (!patch.intact_barrier()) continue;
        patch.damaged = true;
        patch.countdown = w.params.bbb_countdown;
        ++w.last_tick.bbb_damage_events;
        w.kill(i);
        ++w.last_tick.cytokine_barrier_deaths;
    }
}

void treg_police_phase(WorldState& w) {
    const SimParams& p = w.params;
    if (p.disable_treg) return;

    SpatialIndex index;
    index.build(w.agents);

    for (std::uint32_t i : snapshot(w, kMaskTregActive)) {
        AgentState& a = w.agents[i];
        const auto prey = index.query(w.agents, a.pos, p.treg_radius, kMaskTeffActive, a.id);
        if (!prey.empty()) {
            // nearest, ties to the lower id (= first seen, ids ascend)
            std::uint32_t victim = prey[0];
            double best = 0.0;
            for (std::uint32_t c : prey) {
                const double dx = w.agents[c].pos.x - a.pos.x;
                const double dy = w.agents[c].pos.y - a.pos.y;
                const double d2 = dx * dx + dy * dy;
                if (c == prey[0] || d2 < best) {
                    victim = c;
                    best = d2;
                }
            }
            w.kill(victim);
            ++w.last_tick.treg_kills;
            a.energy += p.kill_energy_gain;
            w.spawn(Breed::TregActive, a.pos, a.heading, a.energy);
            ++w.last_tick.treg_police_duplications;
        } else if (auto target = index.nearest(w.agents, a.pos, kMaskTeffActive, a.id)) {
            a.heading = heading_towards(a.pos, w.agents[*target].pos);
        }
    }
}

bool treg_reproduce(WorldState& w, std::uint32_t index) {
    const SimParams& p = w.params;
    AgentState& a = w.agents[index];
    const double roll = 100.0 * w.rng.uniform01(); // always drawn
    if (roll >= p.treg_repro_pct) return false;
    if (w.occupancy_at(a.pos) >= p.patch_density) return false;
    a.energy *= 0.5;
    w.spawn(a.breed, a.pos, a.heading, a.energy);
    ++w.last_tick.treg_repro_duplications;
    return true;
}

void treg_reproduce_pass(WorldState& w) {
    for (std::uint32_t i : snapshot(w, kMaskTregs)) treg_reproduce(w, i);
}

void virus_contact_phase(WorldState& w) {
    const SimParams& p = w.params;
    SpatialIndex index;
    index.build(w.agents);

    for (std::uint32_t v : snapshot(w, kMaskVirus)) {
        AgentState& virus = w.agents[v];
        const auto cells =
            index.query(w.agents, virus.pos, p.v_radius, kMaskRestingTCells, virus.id);
        bool activated_any = false;
        for (std::uint32_t c : cells) {
            AgentState& cell = w.agents[c];
            if (!cell.alive) continue;
            // a cell activated by an earlier virus is no longer a target
            if (cell.breed != Breed::TregResting && cell.breed != Breed::TeffResting) continue;
            if (w.rng.uniform01() < p.mimicry) {
                if (cell.breed == Breed::TregResting) {
                    w.transition(c, Breed::TregActive);
                    ++w.last_tick.treg_activations;
                } else {
                    w.transition(c, Breed::TeffActive);
                    ++w.last_tick.teff_activations;
                }
                activated_any = true;
            }
        }
        if (activated_any) {
            w.kill(v);
            ++w.last_tick.virus_contact_deaths;
        }
    }
}

std::uint64_t spawn_at_random(WorldState& w, Breed breed, double energy) {
    const auto& spots = non_barrier_patches();
    const int patch = spots[w.rng.uniform_below(spots.size())];
    const int px = patch % kGridExtent;
    const int py = patch / kGridExtent;
    const double dx = w.rng.uniform01();
    const double dy = w.rng.uniform01();
    const double heading = w.rng.heading_deg();
    return w.spawn(breed, Position{px + dx, py + dy}, heading, energy);
}

void influx_phase(WorldState& w) {
    const SimParams& p = w.params;
    struct Wave {
        Breed breed;
        int count;
        double energy;
    };
    const Wave waves[] = {
        {Breed::TregResting, p.init_treg_n, p.treg_life},
        {Breed::TeffResting, p.init_teff_n, p.teff_life},
        {Breed::Virus, p.init_virus_n, p.v_energy},
    };
    for (const Wave& wave : waves) {
        if (w.rng.uniform01() < p.influx_prob) {
            for (int k = 0; k < wave.count; ++k) spawn_at_random(w, wave.breed, wave.energy);
            w.last_tick.influx_spawned += wave.count;
        }
    }
}

void energy_and_reap_pass(WorldState& w) {
    for (std::uint32_t i = 0; i < w.agents.size(); ++i) {
        AgentState& a = w.agents[i];
        if (!a.alive) continue;
        a.energy -= 1.0;
        if (a.energy <= 0.0) {
            w.kill(i);
            ++w.last_tick.energy_deaths;
        }
    }
    w.compact();
}

void grow_myelin_phase(Grid& grid, const SimParams& params, std::uint64_t tick) {
    if (params.mye_regrow_time <= 0) return;
    if (tick % static_cast<std::uint64_t>(params.mye_regrow_time) != 0) return;
    for (PatchState& p : grid.patches) {
        if (p.zone != Zone::WhiteMatter) continue;
        if (p.myelin > 0.0 && p.myelin < params.init_mye)
            p.myelin = std::min(params.init_mye, p.myelin + params.rec_mye);
    }
}

void bbb_recovery_phase(Grid& grid) {
    for (PatchState& p : grid.patches) {
        if (p.zone != Zone::Barrier || !p.damaged) continue;
        if (p.countdown > 1) {
            --p.countdown;
        } else {
            p.damaged = false;
            p.countdown = 0;
        }
    }
}

} // namespace mssim
