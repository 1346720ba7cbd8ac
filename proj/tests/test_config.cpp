// Parameter parsing, presets, validation, and the serialize round-trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "mssim/config.hpp"
#include "mssim/rng.hpp"

using namespace mssim;

TEST_CASE("preset 1 is the scenario table's first column") {
    const SimParams p = preset(1);
    CHECK(p.init_treg_n == 100);
    CHECK(p.treg_life == 60.0);
    CHECK(p.treg_repro_pct == 25.0);
    CHECK(p.treg_radius == 3.0);
    CHECK(p.init_teff_n == 100);
    CHECK(p.teff_life == 60.0);
    CHECK(p.teff_repro_pct == 25.0);
    CHECK(p.init_virus_n == 100);
    CHECK(p.v_energy == 20.0);
    CHECK(p.v_radius == 3.0);
    CHECK(p.mimicry == 1.0);
    CHECK(p.master_seed == 100);
    CHECK_FALSE(p.show_energy);
    CHECK_FALSE(p.disable_treg);
    CHECK(p.init_mye == 100.0);
    CHECK(p.ate_mye == 2.0);
    CHECK(p.rec_mye == 1.5);
    CHECK(p.mye_regrow_time == 2);
    CHECK(p.bbb_countdown == 50);
    CHECK(p.cytokine_energy == 25.0);
    CHECK(p.cytokine_n == 1);
    CHECK(p.hill1 == 2.0);
    CHECK(p.hill2 == 1.0);
    CHECK(p.patch_density == 3);
}

TEST_CASE("defaults equal preset 1") {
    CHECK(SimParams{} == preset(1));
}

TEST_CASE("preset 2 differs from preset 1 only in the four Treg knobs") {
    SimParams expected = preset(1);
    expected.init_treg_n = 50;
    expected.treg_life = 30.0;
    expected.treg_repro_pct = 12.0;
    expected.treg_radius = 2.0;
    CHECK(preset(2) == expected);
}

TEST_CASE("preset 3 weakens the Teff side") {
    SimParams expected = preset(1);
    expected.init_teff_n = 50;
    expected.teff_life = 30.0;
    expected.teff_repro_pct = 12.0;
    CHECK(preset(3) == expected);
}

TEST_CASE("preset 4 turns regrowth off and raises the bite") {
    const SimParams p = preset(4);
    CHECK(p.mye_regrow_time == 0);
    CHECK(p.ate_mye == 5.0);
    SimParams expected = preset(1);
    expected.mye_regrow_time = 0;
    expected.ate_mye = 5.0;
    CHECK(p == expected);
}

TEST_CASE("preset 5 combines weak Tregs with no regrowth") {
    SimParams expected = preset(2);
    expected.ate_mye = 5.0;
    expected.mye_regrow_time = 0;
    CHECK(preset(5) == expected);
}

TEST_CASE("preset 6 lowers the viral attack and cytokine strength") {
    const SimParams p = preset(6);
    CHECK(p.init_virus_n == 50);
    CHECK(p.v_energy == 10.0);
    CHECK(p.v_radius == 2.0);
    CHECK(p.cytokine_energy == 12.0);
    CHECK(p.patch_density == 1);
}

TEST_CASE("preset id out of range throws") {
    CHECK_THROWS_AS(preset(0), ConfigError);
    CHECK_THROWS_AS(preset(7), ConfigError);
    CHECK_THROWS_AS(preset(-3), ConfigError);
}

TEST_CASE("every preset validates clean") {
    for (int id = 1; id <= 6; ++id) CHECK(validate(preset(id)).empty());
}

TEST_CASE("parse applies listed keys and defaults the rest") {
    const SimParams p = parse_config("init_treg_n = 50\ntreg_life = 30\n");
    CHECK(p.init_treg_n == 50);
    CHECK(p.treg_life == 30.0);
    SimParams expected = preset(1);
    expected.init_treg_n = 50;
    expected.treg_life = 30.0;
    CHECK(p == expected);
}

TEST_CASE("empty document parses to preset 1") {
    CHECK(parse_config("") == preset(1));
    CHECK(parse_config("# just a comment\n\n") == preset(1));
}

TEST_CASE("out-of-range value names the key") {
    CHECK_THROWS_WITH_AS(parse_config("mimicry = 1.5\n"),
                         doctest::Contains("mimicry"), ConfigError);
}

TEST_CASE("unknown key is rejected with its line number") {
    CHECK_THROWS_WITH_AS(parse_config("init_treg_n = 5\nbogus_key = 1\n"),
                         doctest::Contains("line 2"), ConfigError);
}

TEST_CASE("malformed line is a syntax error") {
    CHECK_THROWS_WITH_AS(parse_config("init_treg_n 5\n"),
                         doctest::Contains("key = value"), ConfigError);
}

TEST_CASE("non-numeric value is rejected") {
    CHECK_THROWS_AS(parse_config("init_treg_n = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("mimicry = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("disable_treg = sometimes\n"), ConfigError);
}

TEST_CASE("comments and booleans parse") {
    const SimParams p = parse_config(
        "disable_treg = on # switch off policing\n"
        "show_energy = true\n"
        "master_seed = 42\n");
    CHECK(p.disable_treg);
    CHECK(p.show_energy);
    CHECK(p.master_seed == 42);
}

TEST_CASE("validate reports every violation, not just the first") {
    SimParams p = preset(1);
    p.ate_mye = 0.0;
    auto v = validate(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "ate_mye > 0");

    p = preset(1);
    p.hill1 = 0.0;
    p.patch_density = 0;
    v = validate(p);
    CHECK(v.size() == 2);

    p = preset(1);
    p.grid_extent = 50;
    v = validate(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "grid_extent = 51");
}

namespace {

SimParams random_valid_params(RngStream& rng) {
    SimParams p;
    p.init_treg_n = static_cast<int>(rng.uniform_below(2000));
    p.init_teff_n = static_cast<int>(rng.uniform_below(2000));
    p.init_virus_n = static_cast<int>(rng.uniform_below(100));
    p.treg_life = rng.uniform01() * 200.0;
    p.teff_life = rng.uniform01() * 200.0;
    p.v_energy = rng.uniform01() * 50.0;
    p.cytokine_energy = rng.uniform01() * 50.0;
    p.treg_repro_pct = rng.uniform01() * 100.0;
    p.teff_repro_pct = rng.uniform01() * 100.0;
    p.treg_radius = rng.uniform01() * 10.0;
    p.v_radius = rng.uniform01() * 10.0;
    p.mimicry = rng.uniform01();
    p.influx_prob = rng.uniform01();
    p.master_seed = rng.next_u64();
    p.show_energy = rng.uniform01() < 0.5;
    p.disable_treg = rng.uniform01() < 0.5;
    p.init_mye = 1.0 + rng.uniform01() * 500.0;
    p.ate_mye = 0.1 + rng.uniform01() * 10.0;
    p.rec_mye = rng.uniform01() * 5.0;
    p.mye_regrow_time = static_cast<int>(rng.uniform_below(10));
    p.bbb_countdown = static_cast<int>(rng.uniform_below(100));
    p.cytokine_n = static_cast<int>(rng.uniform_below(5));
    p.hill1 = 1.0 + rng.uniform01() * 4.0;
    p.hill2 = 1.0 + rng.uniform01() * 4.0;
    p.patch_density = 1 + static_cast<int>(rng.uniform_below(10));
    p.mean_treg = rng.uniform01() * 50.0;
    p.kill_energy_gain = rng.uniform01() * 20.0;
    p.ticks = rng.uniform_below(100000);
    return p;
}

} // namespace

TEST_CASE("serialize/parse round-trips exactly") {
    RngStream rng(20240809);
    for (int i = 0; i < 200; ++i) {
        const SimParams p = random_valid_params(rng);
        REQUIRE(validate(p).empty());
        const SimParams q = parse_config(serialize_config(p));
        CHECK(p == q);
    }
}

TEST_CASE("set/get config values cover every key") {
    SimParams p = preset(1);
    for (const auto& key : config_keys()) {
        const std::string v = get_config_value(p, key);
        SimParams q = p;
        set_config_value(q, key, v);
        CHECK(q == p);
    }
    CHECK_THROWS_AS(get_config_value(p, "nope"), ConfigError);
    CHECK_THROWS_AS(set_config_value(p, "nope", "1"), ConfigError);
}
