// The zoned 51x51 grid: patch state, zone geometry, bounce-constrained
// movement, and Euclidean-radius spatial queries over agents.
//
// Zone layout (rows by y): blood 0..12 and 37..50, barrier 13..14 and
// 35..36, white matter 15..34. The layout is fixed; the world does not
// wrap and its edges bounce like barriers.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mssim/agents.hpp"
#include "mssim/config.hpp"
#include "mssim/rng.hpp"

namespace mssim {

inline constexpr int kGridExtent = 51;
inline constexpr int kPatchCount = kGridExtent * kGridExtent;
inline constexpr int kWmTotal = 20 * kGridExtent; // white-matter patch count

enum class Zone : std::uint8_t { Blood, Barrier, WhiteMatter };

struct PatchState {
    Zone zone = Zone::Blood;
    double myelin = 0.0;   // white matter only, in [0, init_mye]
    bool damaged = false;  // barrier only
    int countdown = 0;     // remaining open ticks while damaged

    bool intact_barrier() const { return zone == Zone::Barrier && !damaged; }
};

/// Zone for a grid row. Throws std::out_of_range outside 0..50.
Zone classify_zone(int y);

struct Grid {
    std::vector<PatchState> patches; // row-major, index = y * 51 + x

    PatchState& at(int x, int y) { return patches[static_cast<std::size_t>(y) * kGridExtent + x]; }
    const PatchState& at(int x, int y) const { return patches[static_cast<std::size_t>(y) * kGridExtent + x]; }
    PatchState& at(const Position& p) { return at(p.patch_x(), p.patch_y()); }
    const PatchState& at(const Position& p) const { return at(p.patch_x(), p.patch_y()); }

    static int patch_index(int x, int y) { return y * kGridExtent + x; }
};

/// Fresh grid: intact barriers, every white-matter patch at init_mye.
Grid build_grid(const SimParams& params);

/// Patch indices outside the barrier bands, ascending. Agents spawn
/// uniformly over these.
const std::vector<int>& non_barrier_patches();

/// One unit step along the agent's heading. Returns the new position,
/// or nullopt (bounced) when the step would leave the world or enter an
/// intact barrier patch the breed may not cross; bouncing re-draws the
/// agent's heading from rng.
std::optional<Position> attempt_move(const Grid& grid, AgentState& agent, RngStream& rng);

/// Per-patch bucket index over an agent array. Rebuild after positions
/// or membership change; queries skip dead agents and agents whose
/// current breed is outside the mask, so mid-pass kills and breed
/// transitions are handled without a rebuild.
class SpatialIndex {
public:
    void build(const std::vector<AgentState>& agents);

    /// Indices (into the agent array) of live agents matching `mask`
    /// within Euclidean distance r of center, excluding `exclude_id`,
    /// ascending by agent id.
    std::vector<std::uint32_t> query(const std::vector<AgentState>& agents, Position center,
                                     double r, BreedMask mask, std::uint64_t exclude_id) const;

    int count(const std::vector<AgentState>& agents, Position center, double r, BreedMask mask,
              std::uint64_t exclude_id) const;

    /// Nearest matching live agent anywhere on the grid (ties broken by
    /// lower id); nullopt when none exists.
    std::optional<std::uint32_t> nearest(const std::vector<AgentState>& agents, Position center,
                                         BreedMask mask, std::uint64_t exclude_id) const;

private:
    std::vector<std::vector<std::uint32_t>> buckets_;
};

/// Spec-level query used by tests and tools: ids of live agents within
/// r of center (excluding exclude_id), ascending. Matches brute-force
/// distance filtering exactly.
std::vector<std::uint64_t> agents_in_radius(const std::vector<AgentState>& agents, Position center,
                                            double r, BreedMask mask,
                                            std::uint64_t exclude_id = UINT64_MAX);

} // namespace mssim
