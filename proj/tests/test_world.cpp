// Zone geometry, grid construction, movement/bounce, and the spatial
// query against its brute-force oracle.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "mssim/world.hpp"

using namespace mssim;

namespace {

// Brute-force oracle: plain distance filter over the whole agent list.
std::vector<std::uint64_t> brute_in_radius(const std::vector<AgentState>& agents, Position c,
                                           double r, BreedMask mask, std::uint64_t exclude) {
    std::vector<std::uint64_t> ids;
    for (const auto& a : agents) {
        if (!a.alive || a.id == exclude || !mask_has(mask, a.breed)) continue;
        const double dx = a.pos.x - c.x;
        const double dy = a.pos.y - c.y;
        if (dx * dx + dy * dy <= r * r) ids.push_back(a.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

AgentState make_agent(std::uint64_t id, Breed breed, double x, double y, double heading = 0.0) {
    AgentState a;
    a.id = id;
    a.breed = breed;
    a.pos = {x, y};
    a.heading = heading;
    a.energy = 10.0;
    return a;
}

} // namespace

TEST_CASE("zone classification: blood, barrier, white matter bands") {
    CHECK(classify_zone(10) == Zone::Blood);
    CHECK(classify_zone(14) == Zone::Barrier);
    CHECK(classify_zone(25) == Zone::WhiteMatter);
    // band edges
    CHECK(classify_zone(0) == Zone::Blood);
    CHECK(classify_zone(12) == Zone::Blood);
    CHECK(classify_zone(13) == Zone::Barrier);
    CHECK(classify_zone(15) == Zone::WhiteMatter);
    CHECK(classify_zone(34) == Zone::WhiteMatter);
    CHECK(classify_zone(35) == Zone::Barrier);
    CHECK(classify_zone(36) == Zone::Barrier);
    CHECK(classify_zone(37) == Zone::Blood);
    CHECK(classify_zone(50) == Zone::Blood);
    CHECK_THROWS(classify_zone(-1));
    CHECK_THROWS(classify_zone(51));
}

TEST_CASE("zone partition counts: 26/4/20 rows of 51") {
    int blood = 0, barrier = 0, wm = 0;
    for (int y = 0; y < kGridExtent; ++y) {
        switch (classify_zone(y)) {
            case Zone::Blood: blood += kGridExtent; break;
            case Zone::Barrier: barrier += kGridExtent; break;
            case Zone::WhiteMatter: wm += kGridExtent; break;
        }
    }
    CHECK(blood == 26 * 51);
    CHECK(barrier == 4 * 51);
    CHECK(wm == 20 * 51);
    CHECK(wm == kWmTotal);
}

TEST_CASE("build_grid fills myelin and intact barriers") {
    const Grid g = build_grid(preset(1));
    CHECK(g.at(0, 20).myelin == 100.0);
    CHECK(g.at(25, 13).zone == Zone::Barrier);
    CHECK_FALSE(g.at(25, 13).damaged);
    CHECK(g.at(25, 13).intact_barrier());
    CHECK(g.at(10, 5).zone == Zone::Blood);
    CHECK(g.at(10, 5).myelin == 0.0);

    int wm = 0;
    for (const auto& p : g.patches)
        if (p.zone == Zone::WhiteMatter) {
            ++wm;
            CHECK(p.myelin == 100.0);
        }
    CHECK(wm == 1020);
}

TEST_CASE("non-barrier patch list covers everything but the bands") {
    const auto& list = non_barrier_patches();
    CHECK(list.size() == static_cast<std::size_t>((26 + 20) * 51));
    CHECK(std::is_sorted(list.begin(), list.end()));
    const Grid g = build_grid(preset(1));
    for (int idx : list) CHECK(g.patches[idx].zone != Zone::Barrier);
}

TEST_CASE("bounce off an intact barrier; pass through a damaged one") {
    Grid g = build_grid(preset(1));
    RngStream rng(5);

    AgentState teff = make_agent(1, Breed::TeffResting, 25.0, 12.5, 90.0);
    auto moved = attempt_move(g, teff, rng);
    CHECK_FALSE(moved.has_value()); // (25,13) is intact barrier
    CHECK(teff.heading != 90.0);    // fresh heading assigned
    CHECK(teff.pos.x == 25.0);      // caller applies moves; position untouched

    g.at(25, 13).damaged = true;
    g.at(25, 13).countdown = 50;
    teff.heading = 90.0;
    moved = attempt_move(g, teff, rng);
    REQUIRE(moved.has_value());
    CHECK(moved->x == doctest::Approx(25.0));
    CHECK(moved->y == doctest::Approx(13.5));
}

TEST_CASE("cytokines ignore intact barriers but not the world edge") {
    Grid g = build_grid(preset(1));
    RngStream rng(6);

    AgentState cyto = make_agent(2, Breed::Cytokine, 25.0, 12.5, 90.0);
    auto moved = attempt_move(g, cyto, rng);
    REQUIRE(moved.has_value());
    CHECK(moved->y == doctest::Approx(13.5));

    cyto.pos = {0.5, 0.5};
    cyto.heading = 180.0;
    moved = attempt_move(g, cyto, rng);
    CHECK_FALSE(moved.has_value()); // x would go negative
}

TEST_CASE("any breed bounces at the world edge") {
    Grid g = build_grid(preset(1));
    RngStream rng(7);
    AgentState a = make_agent(3, Breed::Virus, 50.5, 50.5, 45.0);
    CHECK_FALSE(attempt_move(g, a, rng).has_value());
}

TEST_CASE("long random walk never enters an intact barrier nor leaves the world") {
    Grid g = build_grid(preset(1));
    RngStream rng(11);
    AgentState a = make_agent(4, Breed::TregResting, 25.5, 25.5);
    for (int step = 0; step < 10000; ++step) {
        a.heading = rng.heading_deg();
        if (auto target = attempt_move(g, a, rng)) a.pos = *target;
        CHECK(a.pos.x >= 0.0);
        CHECK(a.pos.x < 51.0);
        CHECK(a.pos.y >= 0.0);
        CHECK(a.pos.y < 51.0);
        CHECK_FALSE(g.at(a.pos).intact_barrier());
    }
    // started in white matter with intact barriers: stays inside
    CHECK(a.pos.y >= 15.0);
    CHECK(a.pos.y < 35.0);
}

TEST_CASE("agents_in_radius basics") {
    std::vector<AgentState> agents;
    CHECK(agents_in_radius(agents, {10, 10}, 0.0, kMaskAll).empty());

    agents.push_back(make_agent(1, Breed::TeffActive, 12.0, 10.0)); // distance 2.0
    agents.push_back(make_agent(2, Breed::TeffActive, 10.0, 13.5)); // distance 3.5
    const auto hits = agents_in_radius(agents, {10, 10}, 3.0, kMaskAll);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == 1);

    // boundary is inclusive
    const auto edge = agents_in_radius(agents, {10, 10}, 3.5, kMaskAll);
    CHECK(edge.size() == 2);

    // excluded querying agent
    const auto excl = agents_in_radius(agents, {12.0, 10.0}, 1.0, kMaskAll, 1);
    CHECK(excl.empty());

    // breed filter
    const auto none = agents_in_radius(agents, {10, 10}, 5.0, kMaskVirus);
    CHECK(none.empty());
}

TEST_CASE("agents_in_radius equals the brute-force filter on random worlds") {
    RngStream rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<AgentState> agents;
        const int n = static_cast<int>(rng.uniform_below(60));
        for (int i = 0; i < n; ++i) {
            agents.push_back(make_agent(
                static_cast<std::uint64_t>(i * 3 + 1),
                static_cast<Breed>(rng.uniform_below(6)),
                rng.uniform01() * 51.0, rng.uniform01() * 51.0));
            if (rng.uniform01() < 0.1) agents.back().alive = false;
        }
        const Position c{rng.uniform01() * 51.0, rng.uniform01() * 51.0};
        const double r = rng.uniform01() * 8.0;
        const auto mask = static_cast<BreedMask>(1 + rng.uniform_below(63));
        const std::uint64_t exclude = rng.uniform_below(2) ? 1 + rng.uniform_below(50) : UINT64_MAX;
        CHECK(agents_in_radius(agents, c, r, mask, exclude) ==
              brute_in_radius(agents, c, r, mask, exclude));
    }
}

TEST_CASE("nearest matches a brute-force scan, ties to the lower id") {
    RngStream rng(123);
    SpatialIndex index;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<AgentState> agents;
        const int n = static_cast<int>(rng.uniform_below(40));
        for (int i = 0; i < n; ++i) {
            auto a = make_agent(static_cast<std::uint64_t>(i + 1),
                                static_cast<Breed>(rng.uniform_below(6)),
                                rng.uniform01() * 51.0, rng.uniform01() * 51.0);
            // co-locate some agents to force distance ties
            if (i > 0 && rng.uniform01() < 0.2) a.pos = agents[i - 1].pos;
            agents.push_back(a);
        }
        index.build(agents);
        const Position c{rng.uniform01() * 51.0, rng.uniform01() * 51.0};
        const BreedMask mask = kMaskTeffActive | kMaskVirus;

        std::optional<std::uint32_t> expect;
        double best = 0.0;
        for (std::uint32_t i = 0; i < agents.size(); ++i) {
            const auto& a = agents[i];
            if (!a.alive || !mask_has(mask, a.breed)) continue;
            const double dx = a.pos.x - c.x, dy = a.pos.y - c.y;
            const double d2 = dx * dx + dy * dy;
            if (!expect || d2 < best) {
                expect = i;
                best = d2;
            }
        }
        CHECK(index.nearest(agents, c, mask, UINT64_MAX) == expect);
    }
}
