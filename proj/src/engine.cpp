#include "mssim/engine.hpp"

#include <cinttypes>
#include <cstdio>

#include "mssim/dynamics.hpp"

namespace mssim {

WorldState init_run(const SimParams& params) {
    if (auto violations = validate(params); !violations.empty()) {
        std::string msg = "invalid parameters:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw ConfigError(msg);
    }

    WorldState w;
    w.params = params;
    w.grid = build_grid(params);
    w.rng = RngStream(params.master_seed);

    for (int i = 0; i < params.init_treg_n; ++i)
        spawn_at_random(w, Breed::TregResting, params.treg_life);
    for (int i = 0; i < params.init_teff_n; ++i)
        spawn_at_random(w, Breed::TeffResting, params.teff_life);
    for (int i = 0; i < params.init_virus_n; ++i)
        spawn_at_random(w, Breed::Virus, params.v_energy);

    return w;
}

void tick(WorldState& w) {
    w.last_tick = TickStats{};

    influx_phase(w);

    move_pass(w, kMaskTeffs);
    teff_attack_phase(w);

    move_pass(w, kMaskCytokine);
    cytokine_phase(w);

    move_pass(w, kMaskTregs);
    treg_police_phase(w);
    treg_reproduce_pass(w);

    move_pass(w, kMaskVirus);
    virus_contact_phase(w);

    energy_and_reap_pass(w);

    grow_myelin_phase(w.grid, w.params, w.tick);
    bbb_recovery_phase(w.grid);

    ++w.tick;
}

RunOutput run(const SimParams& params, std::uint64_t ticks,
              const std::function<void(const WorldState&)>& observer) {
    RunOutput out;
    out.final_world = init_run(params);
    WorldState& w = out.final_world;
    out.records.reserve(ticks + 1);
    out.records.push_back(collect_metrics(w));
    if (observer) observer(w);
    for (std::uint64_t t = 0; t < ticks; ++t) {
        tick(w);
        out.records.push_back(collect_metrics(w));
        if (observer) observer(w);
    }
    return out;
}

RunOutput run(const SimParams& params) { return run(params, params.ticks); }

std::string dump_state(const WorldState& w) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "tick %" PRIu64 " next_id %" PRIu64 "\n", w.tick,
                  w.next_agent_id);
    out += buf;
    const auto& s = w.rng.state();
    std::snprintf(buf, sizeof(buf), "rng %016" PRIx64 " %016" PRIx64 " %016" PRIx64 " %016" PRIx64 "\n",
                  s[0], s[1], s[2], s[3]);
    out += buf;
    for (int i = 0; i < kPatchCount; ++i) {
        const PatchState& p = w.grid.patches[i];
        if (p.zone == Zone::WhiteMatter) {
            if (p.myelin != w.params.init_mye) {
                std::snprintf(buf, sizeof(buf), "wm %d %a\n", i, p.myelin);
                out += buf;
            }
        } else if (p.zone == Zone::Barrier && p.damaged) {
            std::snprintf(buf, sizeof(buf), "bbb %d %d\n", i, p.countdown);
            out += buf;
        }
    }
    for (const AgentState& a : w.agents) {
        if (!a.alive) continue;
        std::snprintf(buf, sizeof(buf), "agent %" PRIu64 " %s %a %a %a %a\n", a.id,
                      breed_name(a.breed), a.pos.x, a.pos.y, a.heading, a.energy);
        out += buf;
    }
    return out;
}

} // namespace mssim
