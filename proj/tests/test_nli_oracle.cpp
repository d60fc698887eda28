#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/nli.hpp"
#include "gnlink/nli_oracle.hpp"
#include "gnlink/raman.hpp"
#include "gnlink/units.hpp"

using namespace gnlink;

namespace {

FiberSpec test_fiber(double cr_w_km_thz = 0.028) {
    FiberSpec f;
    f.attenuation_np_m = db_per_km_to_np_per_m(0.16);
    f.attenuation_bar_np_m = f.attenuation_np_m;
    f.dispersion_d = dispersion_to_si(18.0);
    f.dispersion_slope_s = dispersion_slope_to_si(0.067);
    f.gamma = gamma_to_si(1.2);
    f.raman_slope_cr = raman_slope_to_si(cr_w_km_thz);
    f.span_length_m = 70e3;
    f.ref_wavelength_m = 1540e-9;
    return f;
}

ChannelPlan uniform_plan(int n, double spacing_hz) {
    double fc = wavelength_to_frequency(1540e-9);
    std::vector<Channel> chans(n);
    for (int i = 0; i < n; ++i) {
        chans[i].index = i;
        chans[i].offset_frequency_hz = (i - (n - 1) / 2.0) * spacing_hz;
        chans[i].abs_frequency_hz = fc + chans[i].offset_frequency_hz;
        chans[i].bandwidth_hz = 50e9;
        chans[i].band = Band::C;
    }
    return ChannelPlan(std::move(chans), fc);
}

// Independent deterministic reference for the single-channel no-ISRS case:
// tensor-grid Simpson quadrature over the slot with the analytic lossy-span
// link function |(1 - e^{(-alpha + j phi)L}) / (alpha - j phi)|^2.
double eta_grid_single_channel(const FiberSpec& fiber, double bandwidth_hz, double power_w,
                               int grid) {
    const auto disp = dispersion_coefficients(fiber.dispersion_d, fiber.dispersion_slope_s,
                                              fiber.ref_wavelength_m);
    const double pi = constants::pi;
    const double alpha = fiber.attenuation_np_m;
    const double L = fiber.span_length_m;
    const double g = power_w / bandwidth_hz;
    const double half = bandwidth_hz / 2.0;

    auto simpson_weight = [grid](int i) {
        if (i == 0 || i == grid) return 1.0;
        return (i % 2 == 1) ? 4.0 : 2.0;
    };
    const double h = bandwidth_hz / grid;

    double sum = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double f1 = -half + i * h;
        for (int j = 0; j <= grid; ++j) {
            double f2 = -half + j * h;
            double f3 = f1 + f2;  // receiver frequency f = 0
            if (f3 < -half || f3 > half) continue;
            double phi =
                -4.0 * pi * pi * f1 * f2 * (disp.beta2 + pi * disp.beta3 * (f1 + f2));
            std::complex<double> denom(alpha, -phi);
            std::complex<double> zeta =
                (1.0 - std::exp(std::complex<double>(-alpha * L, phi * L))) / denom;
            sum += simpson_weight(i) * simpson_weight(j) * g * g * g * std::norm(zeta);
        }
    }
    sum *= (h / 3.0) * (h / 3.0);
    double g_nli = (16.0 / 27.0) * fiber.gamma * fiber.gamma * sum;
    return g_nli * bandwidth_hz / (power_w * power_w * power_w);
}

} // namespace

TEST_CASE("zero nonlinearity gives zero eta") {
    ChannelPlan plan = uniform_plan(1, 50e9);
    FiberSpec fiber = test_fiber(0.0);
    fiber.gamma = 0.0;
    PowerVector launch{1e-3};
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 71);
    fiber.gamma = 0.0;
    OracleResult r = eta_oracle(plan, launch, fiber, profile, 0, {20000, 1});
    CHECK(r.eta == 0.0);
}

TEST_CASE("single channel, no ISRS: Monte-Carlo matches the tensor-grid quadrature") {
    ChannelPlan plan = uniform_plan(1, 50e9);
    FiberSpec fiber = test_fiber(0.0);
    PowerVector launch{1e-3};
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 141);
    OracleResult mc = eta_oracle(plan, launch, fiber, profile, 0, {400000, 42});
    double grid = eta_grid_single_channel(fiber, 50e9, 1e-3, 2000);
    CHECK(std::abs(mc.eta - grid) <= 3.0 * mc.std_error);
    // and the estimate is meaningfully converged
    CHECK(mc.std_error / mc.eta < 0.05);
}

TEST_CASE("doubling n_mc halves the standard error across seeds") {
    ChannelPlan plan = uniform_plan(2, 100e9);
    FiberSpec fiber = test_fiber(0.0);
    PowerVector launch{1e-3, 1e-3};
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 51);

    auto spread = [&](std::size_t n_mc) {
        std::vector<double> etas;
        double se_sum = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            OracleResult r = eta_oracle(plan, launch, fiber, profile, 0, {n_mc, seed});
            etas.push_back(r.eta);
            se_sum += r.std_error;
        }
        double mean = 0.0;
        for (double e : etas) mean += e;
        mean /= etas.size();
        double var = 0.0;
        for (double e : etas) var += (e - mean) * (e - mean);
        return std::pair<double, double>{std::sqrt(var / (etas.size() - 1)),
                                         se_sum / etas.size()};
    };

    auto [sd1, se1] = spread(10000);
    auto [sd2, se2] = spread(20000);
    auto [sd4, se4] = spread(40000);
    // The reported standard error halves per quadrupling and shrinks by
    // sqrt(2) per doubling.
    CHECK(se1 / se2 == doctest::Approx(std::sqrt(2.0)).epsilon(0.08));
    CHECK(se1 / se4 == doctest::Approx(2.0).epsilon(0.08));
    // The cross-seed spread follows, up to the heavy-tailed sampling noise
    // of a 20-seed sd estimate.
    CHECK(sd1 / sd4 > 1.4);
    CHECK(sd1 / sd4 < 3.6);
    CHECK(sd1 / se1 > 0.4);
    CHECK(sd1 / se1 < 2.5);
}

TEST_CASE("reported standard error tracks the seed-to-seed spread") {
    ChannelPlan plan = uniform_plan(3, 100e9);
    FiberSpec fiber = test_fiber();
    PowerVector launch(3, 1e-3);
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 71);
    OracleResult a = eta_oracle(plan, launch, fiber, profile, 1, {50000, 7});
    OracleResult b = eta_oracle(plan, launch, fiber, profile, 1, {50000, 8});
    CHECK(std::abs(a.eta - b.eta) <= 6.0 * std::max(a.std_error, b.std_error));
    // Same seed reproduces bit-identically.
    OracleResult c = eta_oracle(plan, launch, fiber, profile, 1, {50000, 7});
    CHECK(a.eta == c.eta);
    CHECK(a.std_error == c.std_error);
}

TEST_CASE("closed form agrees with the oracle within 0.5 dB on a small instance") {
    ChannelPlan plan = uniform_plan(3, 50e9);
    FiberSpec fiber = test_fiber();
    PowerVector launch(3, 1e-3);
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 141);
    EffectiveRamanFit fit = fit_effective_cr(profile, plan, launch, fiber);
    std::vector<double> gaussian(3, 0.0);
    NliReport closed = eta_closed_form(plan, launch, fiber, fit, gaussian);
    for (std::size_t ch = 0; ch < 3; ++ch) {
        OracleResult oracle = eta_oracle(plan, launch, fiber, profile, ch, {300000, 42});
        double gap_db = std::abs(10.0 * std::log10(closed.eta_total(ch) / oracle.eta));
        CHECK(gap_db <= 0.5);
    }
}

TEST_CASE("oracle input validation") {
    ChannelPlan plan = uniform_plan(2, 100e9);
    FiberSpec fiber = test_fiber();
    PowerVector launch{1e-3, 1e-3};
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 31);
    CHECK_THROWS_AS(eta_oracle(plan, launch, fiber, profile, 0, {100, 1}), ConfigError);
    CHECK_THROWS_AS(eta_oracle(plan, launch, fiber, profile, 5, {20000, 1}), ConfigError);
    ChannelPlan other = uniform_plan(3, 100e9);
    PowerVector launch3(3, 1e-3);
    CHECK_THROWS_AS(eta_oracle(other, launch3, fiber, profile, 0, {20000, 1}), ConfigError);
}
