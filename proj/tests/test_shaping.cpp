#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnlink/gmi.hpp"
#include "gnlink/shaping.hpp"
#include "gnlink/units.hpp"

using namespace gnlink;

TEST_CASE("zero iterations returns the normalized square QAM") {
    Constellation c = shape_constellation(4, db_to_linear(7.0), 1, 0);
    Constellation ref = Constellation::gray_qam(4);
    REQUIRE(c.size() == 16);
    CHECK(excess_kurtosis(c) == doctest::Approx(-0.68).epsilon(1e-12));
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(c.points()[i].real() == doctest::Approx(ref.points()[i].real()).epsilon(1e-15));
        CHECK(c.points()[i].imag() == doctest::Approx(ref.points()[i].imag()).epsilon(1e-15));
        CHECK(c.labels()[i] == ref.labels()[i]);
    }
    CHECK(c.mu2() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unsupported sizes are rejected") {
    CHECK_THROWS_AS(shape_constellation(2, 1.0, 1, 10), ConfigError);
    CHECK_THROWS_AS(shape_constellation(8, 1.0, 1, 10), ConfigError);
    CHECK_THROWS_AS(shape_constellation(4, 0.0, 1, 10), ConfigError);
}

TEST_CASE("shaping never loses GMI and is deterministic") {
    const double snr = db_to_linear(7.0);
    ShapingOptions quick;
    quick.restarts = 1;
    Constellation a = shape_constellation(4, snr, 7, 60, quick);
    Constellation b = shape_constellation(4, snr, 7, 60, quick);
    double g0 = gmi(Constellation::gray_qam(4), snr, GmiMethod::gauss_hermite(10)).bits;
    double ga = gmi(a, snr, GmiMethod::gauss_hermite(10)).bits;
    CHECK(ga >= g0 - 1e-12);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points()[i].real() == b.points()[i].real());
        CHECK(a.points()[i].imag() == b.points()[i].imag());
    }
}

TEST_CASE("shaped 16-point format lands in the committed kurtosis band") {
    // target 7 dB; the band contains the reference shaped format's -0.49
    Constellation c = shape_constellation(4, db_to_linear(7.0), 7, 250);
    double k = excess_kurtosis(c);
    CHECK(k >= -0.60);
    CHECK(k <= -0.40);
    double g0 = gmi(Constellation::gray_qam(4), db_to_linear(7.0),
                    GmiMethod::gauss_hermite(10)).bits;
    double g = gmi(c, db_to_linear(7.0), GmiMethod::gauss_hermite(10)).bits;
    CHECK(g > g0);
}
