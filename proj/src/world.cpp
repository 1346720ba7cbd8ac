#include "mssim/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mssim/detmath.hpp"

namespace mssim {

Zone classify_zone(int y) {
    if (y < 0 || y >= kGridExtent)
        throw std::out_of_range("row outside grid: " + std::to_string(y));
    if (y <= 12 || y >= 37) return Zone::Blood;
    if (y <= 14 || y >= 35) return Zone::Barrier;
    return Zone::WhiteMatter;
}

Grid build_grid(const SimParams& params) {
    Grid g;
    g.patches.resize(kPatchCount);
    for (int y = 0; y < kGridExtent; ++y) {
        const Zone zone = classify_zone(y);
        for (int x = 0; x < kGridExtent; ++x) {
            PatchState& p = g.at(x, y);
            p.zone = zone;
            p.myelin = (zone == Zone::WhiteMatter) ? params.init_mye : 0.0;
            p.damaged = false;
            p.countdown = 0;
        }
    }
    return g;
}

const std::vector<int>& non_barrier_patches() {
    static const std::vector<int> indices = [] {
        std::vector<int> v;
        v.reserve(kPatchCount);
        for (int y = 0; y < kGridExtent; ++y) {
            if (classify_zone(y) == Zone::Barrier) continue;
            for (int x = 0; x < kGridExtent; ++x) v.push_back(Grid::patch_index(x, y));
        }
        return v;
    }();
    return indices;
}

std::optional<Position> attempt_move(const Grid& grid, AgentState& agent, RngStream& rng) {
    const Vec2 dir = heading_vector(agent.heading);
    const Position target{agent.pos.x + dir.x, agent.pos.y + dir.y};

    const bool outside = target.x < 0.0 || target.x >= kGridExtent ||
                         target.y < 0.0 || target.y >= kGridExtent;
    bool blocked = false;
    if (!outside && bounce_constrained(agent.breed))
        blocked = grid.at(target).intact_barrier();

    if (outside || blocked) {
        agent.heading = rng.heading_deg();
        return std::nullopt;
    }
    return target;
}

namespace {

double dist2(Position a, Position b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool candidate_matches(const AgentState& a, BreedMask mask, std::uint64_t exclude_id) {
    return a.alive && a.id != exclude_id && mask_has(mask, a.breed);
}

} // namespace

void SpatialIndex::build(const std::vector<AgentState>& agents) {
    if (buckets_.size() != kPatchCount) buckets_.resize(kPatchCount);
    for (auto& b : buckets_) b.clear();
    for (std::uint32_t i = 0; i < agents.size(); ++i) {
        const AgentState& a = agents[i];
        if (!a.alive) continue;
        buckets_[Grid::patch_index(a.pos.patch_x(), a.pos.patch_y())].push_back(i);
    }
}

std::vector<std::uint32_t> SpatialIndex::query(const std::vector<AgentState>& agents,
                                               Position center, double r, BreedMask mask,
                                               std::uint64_t exclude_id) const {
    std::vector<std::uint32_t> out;
    const double r2 = r * r;
    const int x0 = std::max(0, static_cast<int>(std::floor(center.x - r)));
    const int x1 = std::min(kGridExtent - 1, static_cast<int>(std::floor(center.x + r)));
    const int y0 = std::max(0, static_cast<int>(std::floor(center.y - r)));
    const int y1 = std::min(kGridExtent - 1, static_cast<int>(std::floor(center.y + r)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            for (std::uint32_t i : buckets_[Grid::patch_index(x, y)]) {
                const AgentState& a = agents[i];
                if (!candidate_matches(a, mask, exclude_id)) continue;
                if (dist2(a.pos, center) <= r2) out.push_back(i);
            }
        }
    }
    std::sort(out.begin(), out.end()); // index order == id order
    return out;
}

int SpatialIndex::count(const std::vector<AgentState>& agents, Position center, double r,
                        BreedMask mask, std::uint64_t exclude_id) const {
    int n = 0;
    const double r2 = r * r;
    const int x0 = std::max(0, static_cast<int>(std::floor(center.x - r)));
    const int x1 = std::min(kGridExtent - 1, static_cast<int>(std::floor(center.x + r)));
    const int y0 = std::max(0, static_cast<int>(std::floor(center.y - r)));
    const int y1 = std::min(kGridExtent - 1, static_cast<int>(std::floor(center.y + r)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            for (std::uint32_t i : buckets_[Grid::patch_index(x, y)]) {
                const AgentState& a = agents[i];
                if (!candidate_matches(a, mask, exclude_id)) continue;
                if (dist2(a.pos, center) <= r2) ++n;
            }
        }
    }
    return n;
}

std::optional<std::uint32_t> SpatialIndex::nearest(const std::vector<AgentState>& agents,
                                                   Position center, BreedMask mask,
                                                   std::uint64_t exclude_id) const {
    const int cx = std::clamp(center.patch_x(), 0, kGridExtent - 1);
    const int cy = std::clamp(center.patch_y(), 0, kGridExtent - 1);

    std::optional<std::uint32_t> best;
    double best_d2 = 0.0;

    auto consider_bucket = [&](int x, int y) {
        for (std::uint32_t i : buckets_[Grid::patch_index(x, y)]) {
            const AgentState& a = agents[i];
            if (!candidate_matches(a, mask, exclude_id)) continue;
            const double d2 = dist2(a.pos, center);
            // ties by lower id: index order inside buckets is id order,
            // but candidates from different buckets need the explicit check
            if (!best || d2 < best_d2 || (d2 == best_d2 && i < *best)) {
                best = i;
                best_d2 = d2;
            }
        }
    };

    // Expanding Chebyshev rings; any patch in ring k is at least (k-1)
    // patch-lengths away, so once a hit is found only one further ring
    // can contain something closer.
    for (int ring = 0; ring < kGridExtent; ++ring) {
        const double ring_min = ring - 1;
        if (best && ring_min > 0.0 && ring_min * ring_min > best_d2) break;

        const int x0 = cx - ring, x1 = cx + ring;
        const int y0 = cy - ring, y1 = cy + ring;
        if (x0 < 0 && y0 < 0 && x1 >= kGridExtent && y1 >= kGridExtent) break;

        if (ring == 0) {
            consider_bucket(cx, cy);
            continue;
        }
        for (int x = std::max(0, x0); x <= std::min(kGridExtent - 1, x1); ++x) {
            if (y0 >= 0) consider_bucket(x, y0);
            if (y1 < kGridExtent) consider_bucket(x, y1);
        }
        for (int y = std::max(0, y0 + 1); y <= std::min(kGridExtent - 1, y1 - 1); ++y) {
            if (x0 >= 0) consider_bucket(x0, y);
            if (x1 < kGridExtent) consider_bucket(x1, y);
        }
    }
    return best;
}

std::vector<std::uint64_t> agents_in_radius(const std::vector<AgentState>& agents, Position center,
                                            double r, BreedMask mask, std::uint64_t exclude_id) {
    SpatialIndex index;
    index.build(agents);
    std::vector<std::uint64_t> ids;
    for (std::uint32_t i : index.query(agents, center, r, mask, exclude_id))
        ids.push_back(agents[i].id);
    return ids;
}

} // namespace mssim
