// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails. The heavyweight throughput criteria run the shipped
// configurations end to end, including launch-power optimization.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/config.hpp"
#include "gnlink/constellation.hpp"
#include "gnlink/gmi.hpp"
#include "gnlink/link_budget.hpp"
#include "gnlink/nli_oracle.hpp"
#include "gnlink/raman.hpp"
#include "gnlink/rates.hpp"
#include "gnlink/runner.hpp"
#include "gnlink/shaping.hpp"
#include "gnlink/units.hpp"

using namespace gnlink;
namespace fs = std::filesystem;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double elapsed(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

std::string src_path(const std::string& rel) {
    return std::string(GNLINK_SOURCE_DIR) + "/" + rel;
}

FiberSpec paper_fiber(double attenuation_db_km = 0.16) {
    FiberSpec f;
    f.attenuation_np_m = db_per_km_to_np_per_m(attenuation_db_km);
    f.attenuation_bar_np_m = f.attenuation_np_m;
    f.dispersion_d = dispersion_to_si(18.0);
    f.dispersion_slope_s = dispersion_slope_to_si(0.067);
    f.gamma = gamma_to_si(1.2);
    f.raman_slope_cr = raman_slope_to_si(0.028);
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

std::string tbps(double bps) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", bps / 1e12);
    return buf;
}

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * target;
}

void criterion_1_raman_conservation() {
    auto t0 = clk::now();
    ChannelPlan plan = uniform_plan(20, 500e9);  // 10 THz
    FiberSpec fiber = paper_fiber();
    fiber.attenuation_np_m = 0.0;
    fiber.attenuation_bar_np_m = 0.0;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> pw(0.1e-3, 4e-3);
    PowerVector launch(plan.size());
    double total0 = 0.0;
    for (double& p : launch) {
        p = pw(rng);
        total0 += p;
    }
    PowerProfile prof = solve_raman_ode(plan, launch, fiber);
    double worst = 0.0;
    for (std::size_t zi = 0; zi < prof.n_z(); ++zi) {
        double total = 0.0;
        for (std::size_t i = 0; i < plan.size(); ++i) total += prof.power(zi, i);
        worst = std::max(worst, std::abs(total - total0) / total0);
    }
    double dt = elapsed(t0);
    std::ostringstream d;
    d << "Raman conservation: max relative drift " << worst << " (<= 1e-6), runtime " << dt
      << " s (< 1 s)";
    report(1, worst <= 1e-6 && dt < 1.0, d.str());
}

void criterion_2_first_order_validity() {
    ChannelPlan plan = uniform_plan(100, 50e9);  // 5 THz C band
    FiberSpec fiber = paper_fiber();
    PowerVector launch(plan.size(), 1e-3);
    PowerProfile ode = solve_raman_ode(plan, launch, fiber);
    std::vector<double> model =
        first_order_profile(plan, launch, fiber, fiber.raman_slope_cr, fiber.span_length_m);
    double worst = 0.0;
    for (std::size_t i = 0; i < plan.size(); ++i)
        worst = std::max(worst,
                         std::abs(10.0 * std::log10(model[i] / ode.end_of_span()[i])));
    std::ostringstream d;
    d << "first-order vs ODE over 5 THz: max gap " << worst << " dB (<= 0.1 dB)";
    report(2, worst <= 0.1, d.str());
}

void criterion_3_closed_form_vs_oracle() {
    auto t0 = clk::now();
    PlanRequest req;
    req.channels_per_band = {0, 5, 0};
    ChannelPlan plan = build_channel_plan(req);
    FiberSpec fiber = paper_fiber();
    PowerVector launch(plan.size(), 1e-3);
    PowerProfile profile = solve_raman_ode(plan, launch, fiber, 141);
    EffectiveRamanFit fit = fit_effective_cr(profile, plan, launch, fiber);
    std::vector<double> gaussian(plan.size(), 0.0);
    NliReport closed = eta_closed_form(plan, launch, fiber, fit, gaussian);
    double worst = 0.0;
    for (std::size_t ch = 0; ch < plan.size(); ++ch) {
        OracleResult oracle = eta_oracle(plan, launch, fiber, profile, ch, {1000000, 42});
        worst = std::max(worst,
                         std::abs(10.0 * std::log10(closed.eta_total(ch) / oracle.eta)));
    }
    double dt = elapsed(t0);
    std::ostringstream d;
    d << "closed form vs oracle (5 ch, n_mc = 1e6): max gap " << worst
      << " dB (<= 0.5 dB), runtime " << dt << " s (< 120 s)";
    report(3, worst <= 0.5 && dt < 120.0, d.str());
}

void criterion_4_kurtosis() {
    double k_qpsk = excess_kurtosis(Constellation::gray_qam(2));
    double k_16 = excess_kurtosis(Constellation::gray_qam(4));
    bool exact = std::abs(k_qpsk + 1.0) < 1e-12 && std::abs(k_16 + 0.68) < 1e-12;

    ShapingOptions opts16;
    opts16.restarts = 3;
    Constellation s16 = shape_constellation(4, db_to_linear(7.0), 7, 250, opts16);
    ShapingOptions opts64;
    opts64.restarts = 2;
    Constellation s64 = shape_constellation(6, db_to_linear(11.0), 7, 250, opts64);
    double k_s16 = excess_kurtosis(s16);
    double k_s64 = excess_kurtosis(s64);
    bool bands = k_s16 >= -0.60 && k_s16 <= -0.40 && k_s64 >= -0.45 && k_s64 <= -0.20;

    std::ostringstream d;
    d << "kurtosis: qpsk " << k_qpsk << ", 16qam " << k_16 << ", shaped16 " << k_s16
      << " in [-0.60,-0.40], shaped64 " << k_s64 << " in [-0.45,-0.20]";
    report(4, exact && bands, d.str());
}

void criterion_5_gmi_asymptotes() {
    bool ok = true;
    std::ostringstream d;
    d << "GMI asymptotes:";
    for (int m : {2, 4, 6}) {
        Constellation c = Constellation::gray_qam(m);
        double hi = gmi(c, db_to_linear(40.0), GmiMethod::gauss_hermite(10)).bits;
        double lo = gmi(c, db_to_linear(-30.0), GmiMethod::gauss_hermite(10)).bits;
        ok = ok && std::abs(hi - m) <= 1e-3 && lo <= 0.01;
        d << " m=" << m << " hi=" << hi << " lo=" << lo << ";";
    }
    Constellation c16 = Constellation::gray_qam(4);
    for (double snr_db : {0.0, 7.0, 11.0}) {
        GmiResult gh = gmi(c16, db_to_linear(snr_db), GmiMethod::gauss_hermite(10));
        GmiResult mc = gmi(c16, db_to_linear(snr_db), GmiMethod::monte_carlo(1000000, 11));
        double gap = std::abs(gh.bits - mc.bits);
        bool pass = gap <= 3.0 * mc.std_error;
        ok = ok && pass;
        d << " GHvsMC@" << snr_db << "dB gap=" << gap << " (3se=" << 3.0 * mc.std_error << ");";
    }
    report(5, ok, d.str());
}

void criterion_6_rate_dp_exact() {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> nd(2, 12);
    std::uniform_int_distribution<int> kd(1, 3);
    std::uniform_int_distribution<int> md(2, 6);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        int n = nd(rng);
        int k = kd(rng);
        std::vector<double> ngmis(n);
        std::vector<int> bits(n);
        for (int i = 0; i < n; ++i) {
            ngmis[i] = unit(rng);
            bits[i] = md(rng);
        }
        RateAssignment dp = select_code_rates(ngmis, bits, 50e9, k);
        double best = 0.0;
        std::vector<double> chosen;
        std::function<void(int)> rec = [&](int start) {
            if (!chosen.empty()) {
                double total = 0.0;
                for (int i = 0; i < n; ++i) {
                    double r = 0.0;
                    for (double cand : chosen)
                        if (cand <= ngmis[i]) r = std::max(r, cand);
                    total += 2.0 * 50e9 * bits[i] * r;
                }
                best = std::max(best, total);
            }
            if (static_cast<int>(chosen.size()) == k) return;
            for (int j = start; j < n; ++j) {
                chosen.push_back(ngmis[j]);
                rec(j + 1);
                chosen.pop_back();
            }
        };
        rec(0);
        ok = std::abs(dp.total_throughput_bps - best) <= 1e-6 * std::max(best, 1.0);
    }
    report(6, ok, "rate-set DP equals exhaustive search on 100 seeded instances (N<=12, K<=3)");
}

struct HeadlineResults {
    OptimizeReport scl;
    OptimizeReport cl;
    OptimizeReport partial;
    double optimize_seconds = 0.0;
};

HeadlineResults run_headlines() {
    HeadlineResults r;
    auto t0 = clk::now();
    SimulationConfig scl = load_config(src_path("configs/paper-scl.cfg"));
    scl.output_directory = "acceptance-out/paper-scl";
    r.scl = run_optimize(scl);
    SimulationConfig cl = load_config(src_path("configs/paper-cl.cfg"));
    cl.output_directory = "acceptance-out/paper-cl";
    r.cl = run_optimize(cl);
    SimulationConfig partial = load_config(src_path("configs/paper-scl-partial.cfg"));
    partial.output_directory = "acceptance-out/paper-scl-partial";
    r.partial = run_optimize(partial);
    r.optimize_seconds = elapsed(t0);
    return r;
}

void criterion_7_headlines(const HeadlineResults& r) {
    const double t_scl = r.scl.simulation.gmi_bound_bps;
    const double t_cl = r.cl.simulation.gmi_bound_bps;
    const double t_scl_k6 = r.scl.simulation.total_throughput_bps;
    const double t_partial = r.partial.simulation.gmi_bound_bps;

    // Full-link closed-form evaluation time at the paper scale.
    SimulationConfig scl = load_config(src_path("configs/paper-scl.cfg"));
    ChannelPlan plan = scl.build_plan();
    LinkSpec link = scl.build_link(plan.size());
    std::vector<double> kurt(plan.size(), -0.32);
    PowerVector launch(plan.size(), 1e-3);
    auto t0 = clk::now();
    propagate_link(plan, launch, link, kurt);
    double eval_s = elapsed(t0);

    bool ok = true;
    std::ostringstream d;
    d << "headlines (Tb/s):";
    d << " C+L " << tbps(t_cl) << " vs 74.59 +-10%";
    ok = ok && within(t_cl, 74.59e12, 0.10);
    d << "; S+C+L " << tbps(t_scl) << " vs 119.5 +-10%";
    ok = ok && within(t_scl, 119.5e12, 0.10);
    d << "; K=6 " << tbps(t_scl_k6) << " vs 119.2 +-10%";
    ok = ok && within(t_scl_k6, 119.2e12, 0.10);
    d << "; partial " << tbps(t_partial) << " vs 112.3 +-10%";
    ok = ok && within(t_partial, 112.3e12, 0.10);

    double gain_ratio = t_scl / t_cl;
    d << "; S+C+L/C+L " << gain_ratio << " in [1.45,1.75]";
    ok = ok && gain_ratio >= 1.45 && gain_ratio <= 1.75;
    double partial_ratio = t_partial / t_scl;
    d << "; partial/ideal " << partial_ratio << " in [0.90,0.98]";
    ok = ok && partial_ratio >= 0.90 && partial_ratio <= 0.98;

    d << "; closed-form link eval " << eval_s << " s (< 1 s)";
    ok = ok && eval_s < 1.0;
    d << "; optimization runs " << r.optimize_seconds / 60.0 << " min (< 30 min each, "
      << "3 scenarios total)";
    ok = ok && r.optimize_seconds < 3.0 * 1800.0;
    report(7, ok, d.str());
}

void criterion_8_rate_sweep(const HeadlineResults& r) {
    // Quantized throughput against K at the optimized S+C+L operating point.
    std::vector<double> ngmis;
    std::vector<int> bits;
    double bound = 0.0;
    for (const ChannelRow& row : r.scl.simulation.rows) {
        ngmis.push_back(row.ngmi);
        int m = row.band == "S" ? 4 : 6;
        bits.push_back(m);
        bound += 2.0 * 50e9 * m * row.ngmi;
    }
    bool ok = true;
    double prev = 0.0;
    double at6 = 0.0;
    for (int k = 1; k <= 8; ++k) {
        RateAssignment a = select_code_rates(ngmis, bits, 50e9, k);
        ok = ok && a.total_throughput_bps >= prev - 1e-6;
        ok = ok && a.total_throughput_bps <= bound * (1.0 + 1e-12);
        prev = a.total_throughput_bps;
        if (k == 6) at6 = a.total_throughput_bps;
    }
    double loss = 1.0 - at6 / bound;
    ok = ok && loss <= 0.01;
    std::ostringstream d;
    d << "rate sweep monotone and saturating; K=6 within " << loss * 100.0
      << "% of the GMI bound (<= 1%)";
    report(8, ok, d.str());
}

void criterion_9_determinism() {
    SimulationConfig c = load_config(src_path("configs/toy-cl.cfg"));
    fs::remove_all("acceptance-out/det1");
    fs::remove_all("acceptance-out/det2");
    c.output_directory = "acceptance-out/det1";
    run_simulate(c);
    SimulationConfig c2 = c;
    c2.output_directory = "acceptance-out/det2";
    run_simulate(c2);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool ok = true;
    for (const char* name : {"channels.csv", "summary.csv", "fig2a_snr.csv", "fig2b_power.csv"})
        ok = ok && slurp(fs::path("acceptance-out/det1") / name) ==
                       slurp(fs::path("acceptance-out/det2") / name);
    report(9, ok, "two runs from the same resolved config produce bit-identical CSVs");
}

} // namespace

int main() {
    criterion_1_raman_conservation();
    criterion_2_first_order_validity();
    criterion_3_closed_form_vs_oracle();
    criterion_4_kurtosis();
    criterion_5_gmi_asymptotes();
    criterion_6_rate_dp_exact();
    HeadlineResults headlines = run_headlines();
    criterion_7_headlines(headlines);
    criterion_8_rate_sweep(headlines);
    criterion_9_determinism();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
