// Per-breed behavior rules, each written as a whole-population pass.
//
// Every pass snapshots its target group at entry (agents born during a
// pass do not act in it) and walks the group in ascending agent id, so
// the RNG draw order is fully determined by (state, seed).

#pragma once

#include <cstdint>

#include "mssim/state.hpp"

namespace mssim {

/// Bernoulli duplication probability for an attacking active Teff:
///   P = effector_dupl * (myelin/init_mye)^hill1
///       * mean_treg^hill2 / (treg_here^hill2 + mean_treg^hill2)
/// clamped to [0,1]; treg_here is the Treg count (either state) within
/// treg_radius of the attacker. Degenerate 0/0 in the Treg term yields 0.
double teff_duplication_probability(double myelin, const SimParams& params, int treg_here);

/// Random-walk step for every live agent in `which`: new uniform
/// heading, then a unit step with bounce (see attempt_move).
void move_pass(WorldState& w, BreedMask which);

/// Active Teffs on a white-matter patch with myelin > 0 bite ate_mye
/// off the patch (floor 0), gain ate_mye energy, emit cytokine_n
/// cytokines, then roll for duplication against the post-attack myelin.
void teff_attack_phase(WorldState& w);

/// Cytokines standing on an intact barrier patch open it
/// (Damaged(bbb_countdown)) and die. A patch already open is passed
/// through without resetting its countdown.
void cytokine_phase(WorldState& w);

/// Each active Treg kills the nearest active Teff within treg_radius
/// (ties to the lower id), gains kill_energy_gain and duplicates;
/// otherwise it turns toward the nearest active Teff on the grid, if
/// any. No-op when disable_treg is set.
void treg_police_phase(WorldState& w);

/// Reproduction roll for one Treg (either state): with probability
/// treg_repro_pct/100, and only while its patch holds fewer than
/// patch_density agents, halve the parent's energy and hatch a copy.
/// The roll is drawn before the density gate, as in the source model.
/// Returns true if a child was hatched.
bool treg_reproduce(WorldState& w, std::uint32_t index);

/// treg_reproduce over every live Treg.
void treg_reproduce_pass(WorldState& w);

/// Each virus offers activation to every resting T-cell within
/// v_radius (ascending id, one mimicry roll each); a virus that
/// activated at least one cell dies.
void virus_contact_phase(WorldState& w);

/// Three Bernoulli(influx_prob) draws in the order Treg, Teff, Virus;
/// each success spawns the breed's full initial batch (init_*_n agents
/// at full energy, uniform over non-barrier patches, random heading).
void influx_phase(WorldState& w);

/// Every live agent pays 1 energy; agents at energy <= 0 are removed
/// and the population is compacted.
void energy_and_reap_pass(WorldState& w);

/// Myelin regrowth: when mye_regrow_time > 0 and tick is a multiple of
/// it, every white-matter patch with 0 < myelin < init_mye gains
/// rec_mye (capped at init_mye). Patches at exactly 0 never regrow.
void grow_myelin_phase(Grid& grid, const SimParams& params, std::uint64_t tick);

/// Damaged barrier patches count down; Damaged(c<=1) turns intact.
void bbb_recovery_phase(Grid& grid);

/// Helper shared by setup and influx: spawn one agent of `breed` with
/// `energy` at a uniform spot over non-barrier patches (3 draws:
/// patch, dx, dy) plus a uniform heading (1 draw).
std::uint64_t spawn_at_random(WorldState& w, Breed breed, double energy);

} // namespace mssim
