#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gnlink/channel_plan.hpp"
#include "gnlink/units.hpp"

using namespace gnlink;

TEST_CASE("dbm/watt conversions") {
    CHECK(dbm_to_watt(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(dbm_to_watt(10.0) == doctest::Approx(10e-3).epsilon(1e-12));
    CHECK(dbm_to_watt(-11.2) == doctest::Approx(7.5858e-5).epsilon(1e-4));
    CHECK_THROWS_AS(watt_to_dbm(0.0), ConfigError);
    CHECK_THROWS_AS(watt_to_dbm(-1.0), ConfigError);
}

TEST_CASE("wavelength/frequency conversions") {
    CHECK(wavelength_to_frequency(1550e-9) == doctest::Approx(193.4144e12).epsilon(1e-5));
    CHECK(wavelength_to_frequency(1540e-9) == doctest::Approx(194.6704e12).epsilon(1e-5));
    CHECK_THROWS_AS(wavelength_to_frequency(0.0), ConfigError);
}

TEST_CASE("conversions are exact inverses") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dbm(-40.0, 20.0);
    std::uniform_real_distribution<double> lam(1.2e-6, 1.7e-6);
    for (int i = 0; i < 200; ++i) {
        double p = dbm(rng);
        CHECK(watt_to_dbm(dbm_to_watt(p)) == doctest::Approx(p).epsilon(1e-12));
        double w = lam(rng);
        CHECK(frequency_to_wavelength(wavelength_to_frequency(w)) ==
              doctest::Approx(w).epsilon(1e-12));
        double a = std::abs(dbm(rng)) * 0.01 + 0.01;
        CHECK(np_per_m_to_db_per_km(db_per_km_to_np_per_m(a)) ==
              doctest::Approx(a).epsilon(1e-12));
    }
}

TEST_CASE("attenuation conversion scale") {
    // 0.16 dB/km over 70 km is an 11.2 dB span loss.
    double alpha = db_per_km_to_np_per_m(0.16);
    double loss_db = 10.0 * std::log10(std::exp(alpha * 70e3));
    CHECK(loss_db == doctest::Approx(11.2).epsilon(1e-9));
}

TEST_CASE("dispersion coefficients") {
    // D = 18 ps/nm/km at 1550 nm -> beta2 = -22.958 ps^2/km.
    auto d = dispersion_coefficients(dispersion_to_si(18.0), dispersion_slope_to_si(0.067),
                                     1550e-9);
    CHECK(d.beta2 * 1e27 == doctest::Approx(-22.958).epsilon(1e-3));
    CHECK(d.beta3 > 0.0);

    auto zero = dispersion_coefficients(0.0, 0.0, 1550e-9);
    CHECK(zero.beta2 == 0.0);
    CHECK(zero.beta3 == 0.0);

    SUBCASE("linear in D and S separately") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.1, 30.0);
        for (int i = 0; i < 50; ++i) {
            double dd = u(rng), ss = u(rng) * 0.01, k = u(rng);
            auto a = dispersion_coefficients(dispersion_to_si(dd), dispersion_slope_to_si(ss),
                                             1550e-9);
            auto b = dispersion_coefficients(dispersion_to_si(k * dd),
                                             dispersion_slope_to_si(ss), 1550e-9);
            CHECK(b.beta2 == doctest::Approx(k * a.beta2).epsilon(1e-12));
            // beta3 decomposes into independent D and S parts.
            auto s_only = dispersion_coefficients(0.0, dispersion_slope_to_si(ss), 1550e-9);
            auto d_only = dispersion_coefficients(dispersion_to_si(dd), 0.0, 1550e-9);
            CHECK(a.beta3 == doctest::Approx(s_only.beta3 + d_only.beta3).epsilon(1e-12));
        }
    }
}
