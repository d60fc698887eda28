#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gnlink/config.hpp"
#include "gnlink/error.hpp"

using namespace gnlink;

TEST_CASE("minimal config resolves every default") {
    SimulationConfig c = parse_config("[plan]\nchannels_c = 10\n", "inline");
    CHECK(c.channels_c == 10);
    CHECK(c.channels_s == 164);
    CHECK(c.attenuation_db_km == doctest::Approx(0.16));
    CHECK(c.raman_slope_w_km_thz == doctest::Approx(0.028));
    CHECK(c.spans == 100);
    CHECK(c.equalization == "ideal");
    CHECK(c.ase_polarizations == 2);
    CHECK(c.ase_gain_floor == "loss");
    CHECK(c.k_rates == 6);

    SUBCASE("echo reparses to the same resolved state") {
        std::string echoed = c.echo();
        SimulationConfig back = parse_config(echoed, "echo");
        CHECK(back.echo() == echoed);
    }
}

TEST_CASE("validation errors name the offending key") {
    CHECK_THROWS_WITH_AS(parse_config("[fiber]\nspan_length = -10\n", "inline"),
                         doctest::Contains("fiber.span_length"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[fiber]\nraman_slope = -1\n", "inline"),
                         doctest::Contains("fiber.raman_slope"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[amplifier]\ncompensation = 1.5\n", "inline"),
                         doctest::Contains("amplifier.compensation"), ConfigError);
}

TEST_CASE("unknown keys are rejected with position context") {
    CHECK_THROWS_WITH_AS(parse_config("[fiber]\nattenuationn = 0.2\n", "inline"),
                         doctest::Contains("unknown key fiber.attenuationn"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[nope]\nx = 1\n", "inline"),
                         doctest::Contains("nope.x"), ConfigError);
}

TEST_CASE("parse errors carry line context") {
    CHECK_THROWS_WITH_AS(parse_config("[plan\nchannels_c = 1\n", "cfg"),
                         doctest::Contains("cfg:1"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[plan]\nchannels_c\n", "cfg"),
                         doctest::Contains("cfg:2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("key = 1\n", "cfg"),
                         doctest::Contains("outside a [section]"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[plan]\nchannels_c = ten\n", "cfg"),
                         doctest::Contains("expected a number"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[plan]\nchannels_c = 1\nchannels_c = 2\n", "cfg"),
                         doctest::Contains("duplicate"), ConfigError);
}

TEST_CASE("comments and spacing") {
    SimulationConfig c = parse_config(
        "# leading comment\n"
        "[link]\n"
        "spans = 42   # trailing comment\n"
        "; another comment\n",
        "inline");
    CHECK(c.spans == 42);
}

TEST_CASE("modulation directives") {
    SimulationConfig c = parse_config(
        "[modulation]\ns = qpsk\nc = file:points.txt\nl = shaped64\n", "inline");
    CHECK(c.mod_s.kind == ModulationChoice::Kind::Qpsk);
    CHECK(c.mod_c.kind == ModulationChoice::Kind::File);
    CHECK(c.mod_c.file == "points.txt");
    CHECK(c.mod_l.kind == ModulationChoice::Kind::Shaped64);
    CHECK_THROWS_AS(parse_config("[modulation]\ns = 1024qam\n", "inline"), ConfigError);
}

TEST_CASE("paper config resolves to the full system") {
    SimulationConfig c = load_config(std::string(GNLINK_SOURCE_DIR) + "/configs/paper-scl.cfg");
    CHECK(c.channels_s + c.channels_c + c.channels_l == 364);
    CHECK(c.spans == 100);
    CHECK(c.symbol_rate_gbd == doctest::Approx(50.0));
    CHECK(c.center_wavelength_nm == doctest::Approx(1540.0));
    ChannelPlan plan = c.build_plan();
    CHECK(plan.size() == 364);
    LinkSpec link = c.build_link(plan.size());
    CHECK(link.n_spans == 100);
    CHECK(link.amplifier.noise_figure_db[0] == doctest::Approx(7.0));
    CHECK(link.amplifier.noise_figure_db[1] == doctest::Approx(4.0));
    CHECK(link.amplifier.noise_figure_db[2] == doctest::Approx(6.0));
}

TEST_CASE("seed override hits every stage") {
    SimulationConfig c = parse_config("[plan]\nchannels_c = 4\n", "inline");
    c.override_seeds(777);
    CHECK(c.optimizer_seed == 777);
    CHECK(c.oracle_seed == 777);
    CHECK(c.shaping_seed == 777);
}

TEST_CASE("attenuation table length is checked at link build") {
    SimulationConfig c = parse_config(
        "[plan]\nchannels_s = 0\nchannels_c = 3\nchannels_l = 0\n"
        "[fiber]\nattenuation_table = 0.16 0.17 0.18\n",
        "inline");
    ChannelPlan plan = c.build_plan();
    LinkSpec link = c.build_link(plan.size());
    CHECK(link.fiber.per_channel_attenuation_np_m.size() == 3);
    SimulationConfig bad = parse_config(
        "[plan]\nchannels_s = 0\nchannels_c = 3\nchannels_l = 0\n"
        "[fiber]\nattenuation_table = 0.16 0.17\n",
        "inline");
    CHECK_THROWS_AS(bad.build_link(3), ConfigError);
}
