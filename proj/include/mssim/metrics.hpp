// Per-tick census records, the metrics CSV format, text grid
// snapshots, and SVG time-series plots.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mssim/state.hpp"

namespace mssim {

struct MetricsRecord {
    std::uint64_t tick = 0;
    int n_virus = 0;
    int n_treg_rest = 0;
    int n_treg_act = 0;
    int n_teff_rest = 0;
    int n_teff_act = 0;
    int n_cytokine = 0;
    double total_myelin = 0.0;
    int recoverable = 0;   // white-matter patches with myelin > 0
    int unrecoverable = 0; // white-matter patches at exactly 0
    int bbb_damaged = 0;

    bool operator==(const MetricsRecord&) const = default;
};

/// Pure census of the current world state.
MetricsRecord collect_metrics(const WorldState& w);

/// CSV bytes: fixed header, one row per record, LF line endings.
/// Integers bare; total_myelin with up to two decimals.
std::string write_csv(std::span<const MetricsRecord> records);

/// Inverse of write_csv (integers exact, myelin to the printed
/// precision). Throws std::runtime_error on malformed input.
std::vector<MetricsRecord> parse_csv(std::string_view text);

/// 51 text rows (y = 50 at the top): 'B' blood, '#' intact barrier,
/// '=' damaged barrier; white matter by remaining myelin: '.' above
/// 2/3 of init_mye, ':' above 1/3, ',' above 0, 'X' at exactly 0.
/// With annotate_energy, one `id,breed,x,y,energy` line per live agent
/// follows the grid.
std::string write_snapshot(const WorldState& w, bool annotate_energy);

/// Names accepted by emit_plot, in CSV column order.
const std::vector<std::string>& metric_series_names();

/// Self-contained SVG line chart of the selected series against tick.
/// Throws std::invalid_argument on an empty selection or unknown name.
std::string emit_plot(std::span<const MetricsRecord> records,
                      std::span<const std::string> series);

/// Double formatter used across outputs: fixed precision, trailing
/// zeros (and a bare trailing dot) trimmed.
std::string format_trimmed(double v, int max_decimals);

} // namespace mssim
