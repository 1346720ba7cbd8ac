// Simulation parameter set, scenario presets, and the flat key = value
// config format.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mssim {

// Defaults are scenario preset 1; the last block holds engine-level
// settings and values the scenario table leaves unspecified.
struct SimParams {
    int init_treg_n = 100;          // initial resting Tregs
    double treg_life = 60.0;        // starting Treg energy
    double treg_repro_pct = 25.0;   // Treg reproduction chance per tick, percent
    double treg_radius = 3.0;       // Treg sensing/kill radius, patch lengths

    int init_teff_n = 100;          // initial resting Teffs
    double teff_life = 60.0;        // starting Teff energy
    double teff_repro_pct = 25.0;   // max Teff duplication rate, percent
    int init_virus_n = 100;
    double v_energy = 20.0;         // starting virus energy
    double v_radius = 3.0;          // virus/T-cell mutual sensing radius

    double mimicry = 1.0;           // per-contact activation probability
    std::uint64_t master_seed = 100;
    bool show_energy = false;       // annotate snapshots with the agent list
    bool disable_treg = false;      // skip the Treg policing phase

    double init_mye = 100.0;        // myelin per white-matter patch at setup
    double ate_mye = 2.0;           // myelin removed per Teff attack
    double rec_mye = 1.5;           // myelin regrown per regrowth event
    int mye_regrow_time = 2;        // ticks between regrowth events; 0 disables
    int bbb_countdown = 50;         // ticks a damaged barrier patch stays open
    double cytokine_energy = 25.0;
    int cytokine_n = 1;             // cytokines emitted per myelin attack
    double hill1 = 2.0;             // duplication-law exponent, myelin term
    double hill2 = 1.0;             // duplication-law exponent, Treg term
    int patch_density = 3;          // max agents per patch gating Treg reproduction

    double mean_treg = 10.0;        // Treg-count threshold in the duplication law
    double kill_energy_gain = 5.0;  // energy a Treg gains per Teff kill
    double influx_prob = 10.0 / 365.0; // per-tick, per-breed influx probability
    std::uint64_t ticks = 2000;     // default run length
    int grid_extent = 51;           // fixed world size

    /// Duplication constant in the Teff duplication law.
    double effector_dupl() const { return teff_repro_pct / 100.0; }

    bool operator==(const SimParams&) const = default;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario presets 1..6. Throws ConfigError for any other id.
SimParams preset(int id);

/// Parse a flat `key = value` document ('#' comments, blank lines ok).
/// Unknown keys, malformed lines and out-of-range values throw
/// ConfigError naming the offending key/line. Missing keys keep their
/// defaults (preset 1).
SimParams parse_config(std::string_view text);

/// Canonical text form; parse_config(serialize_config(p)) == p exactly.
std::string serialize_config(const SimParams& p);

/// All violated invariants (empty means valid).
std::vector<std::string> validate(const SimParams& p);

/// Config keys in canonical order.
const std::vector<std::string>& config_keys();

/// Set one field from its text form. Throws ConfigError on an unknown
/// key or unparsable value. Does not run validate().
void set_config_value(SimParams& p, const std::string& key, const std::string& value);

/// Text form of one field.
std::string get_config_value(const SimParams& p, const std::string& key);

} // namespace mssim
