#include "gnlink/raman.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnlink/error.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

PowerProfile::PowerProfile(std::vector<double> z_m, std::vector<double> powers_w,
                           std::size_t n_channels)
    : z_m_(std::move(z_m)), powers_w_(std::move(powers_w)), n_channels_(n_channels) {
    if (powers_w_.size() != z_m_.size() * n_channels_)
        throw NumericalError("PowerProfile: sample matrix shape mismatch");
}

std::vector<double> PowerProfile::launch() const {
    return std::vector<double>(powers_w_.begin(), powers_w_.begin() + n_channels_);
}

std::vector<double> PowerProfile::end_of_span() const {
    return std::vector<double>(powers_w_.end() - n_channels_, powers_w_.end());
}

double effective_length(double alpha_np_m, double z_m) {
    if (alpha_np_m == 0.0) return z_m;
    return (1.0 - std::exp(-alpha_np_m * z_m)) / alpha_np_m;
}

namespace {

// RHS of the coupled ISRS system. The triangular sum over pairs reduces to
// two running sums: sum_j (f_i - f_j) P_j = f_i * S0 - S1.
void raman_rhs(const std::vector<double>& p, const std::vector<double>& freqs,
               const std::vector<double>& alpha, double cr, std::vector<double>& out) {
    const std::size_t n = p.size();
    double s0 = 0.0, s1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        s0 += p[j];
        s1 += freqs[j] * p[j];
    }
    for (std::size_t i = 0; i < n; ++i)
        out[i] = -alpha[i] * p[i] - cr * p[i] * (freqs[i] * s0 - s1);
}

} // namespace

PowerProfile solve_raman_ode(const ChannelPlan& plan, const PowerVector& launch,
                             const FiberSpec& fiber, std::size_t n_z) {
    const std::size_t n = plan.size();
    validate_power_vector(launch, n, "solve_raman_ode");
    if (n_z < 2) throw ConfigError("solve_raman_ode: n_z must be >= 2");

    const std::vector<double> freqs = plan.abs_frequencies_hz();
    std::vector<double> alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = fiber.alpha_for(i);
    const double cr = fiber.raman_slope_cr;
    const double h = fiber.span_length_m / static_cast<double>(n_z - 1);

    std::vector<double> z(n_z);
    std::vector<double> samples(n_z * n);
    std::vector<double> p = launch;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    z[0] = 0.0;
    std::copy(p.begin(), p.end(), samples.begin());
    for (std::size_t step = 1; step < n_z; ++step) {
        raman_rhs(p, freqs, alpha, cr, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = p[i] + 0.5 * h * k1[i];
        raman_rhs(tmp, freqs, alpha, cr, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = p[i] + 0.5 * h * k2[i];
        raman_rhs(tmp, freqs, alpha, cr, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = p[i] + h * k3[i];
        raman_rhs(tmp, freqs, alpha, cr, k4);
        for (std::size_t i = 0; i < n; ++i)
            p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        double zi = h * static_cast<double>(step);
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(p[i]) || p[i] <= 0.0)
                throw NumericalError("solve_raman_ode: non-finite power in channel " +
                                     std::to_string(i) + " at z = " + std::to_string(zi) + " m");
        }
        z[step] = zi;
        std::copy(p.begin(), p.end(), samples.begin() + step * n);
    }
    z.back() = fiber.span_length_m;
    return PowerProfile(std::move(z), std::move(samples), n);
}

PowerProfile solve_raman_ode(const ChannelPlan& plan, const PowerVector& launch,
                             const FiberSpec& fiber) {
    auto steps = static_cast<std::size_t>(std::ceil(fiber.span_length_m / fiber.rk4_step_m));
    return solve_raman_ode(plan, launch, fiber, std::max<std::size_t>(steps, 1) + 1);
}

std::vector<double> first_order_profile(const ChannelPlan& plan, const PowerVector& launch,
                                        const FiberSpec& fiber, double cr, double z_m) {
    const std::size_t n = plan.size();
    validate_power_vector(launch, n, "first_order_profile");
    if (z_m < 0.0 || z_m > fiber.span_length_m * (1.0 + 1e-12))
        throw ConfigError("first_order_profile: z outside the span");

    const double alpha = fiber.attenuation_np_m;
    const double leff = effective_length(alpha, z_m);
    double p_tot = 0.0;
    for (double p : launch) p_tot += p;

    std::vector<double> out(n);
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double tilt = std::exp(-p_tot * cr * leff * plan.at(i).offset_frequency_hz);
        out[i] = launch[i] * tilt;
        denom += out[i];
    }
    const double common = std::exp(-alpha * z_m) * p_tot / denom;
    for (double& v : out) v *= common;
    return out;
}

namespace {

double fit_objective(const ChannelPlan& plan, const PowerVector& launch, const FiberSpec& fiber,
                     const std::vector<double>& numeric_end, double cr) {
    std::vector<double> model = first_order_profile(plan, launch, fiber, cr,
                                                    fiber.span_length_m);
    double sum = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        double d = 10.0 * std::log10(model[i] / numeric_end[i]);
        sum += d * d;
    }
    return sum;
}

} // namespace

EffectiveRamanFit fit_effective_cr(const PowerProfile& numeric, const ChannelPlan& plan,
                                   const PowerVector& launch, const FiberSpec& fiber) {
    const std::size_t n = plan.size();
    validate_power_vector(launch, n, "fit_effective_cr");
    if (numeric.n_channels() != n)
        throw ConfigError("fit_effective_cr: profile channel count does not match the plan");

    const std::vector<double> numeric_end = numeric.end_of_span();

    // Step 1: global cr-hat by golden-section search on [0, 4 Cr].
    double cr_hat = 0.0;
    const double hi0 = 4.0 * fiber.raman_slope_cr;
    if (hi0 > 0.0) {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = 0.0, b = hi0;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = fit_objective(plan, launch, fiber, numeric_end, c1);
        double f2 = fit_objective(plan, launch, fiber, numeric_end, c2);
        for (int it = 0; it < 160; ++it) {
            if (f1 < f2) {
                b = c2; c2 = c1; f2 = f1;
                c1 = b - gr * (b - a);
                f1 = fit_objective(plan, launch, fiber, numeric_end, c1);
            } else {
                a = c1; c1 = c2; f1 = f2;
                c2 = a + gr * (b - a);
                f2 = fit_objective(plan, launch, fiber, numeric_end, c2);
            }
        }
        cr_hat = 0.5 * (a + b);
        // A minimum pinned to the upper bracket edge means the search did not
        // bracket it.
        if (cr_hat > hi0 * (1.0 - 1e-3)) {
            double f_in = fit_objective(plan, launch, fiber, numeric_end, hi0 * 0.999);
            double f_edge = fit_objective(plan, launch, fiber, numeric_end, hi0);
            if (f_edge < f_in)
                throw NumericalError(
                    "fit_effective_cr: no bracketing minimum in [0, 4 Cr]; residual at edge " +
                    std::to_string(f_edge));
        }
    }

    EffectiveRamanFit fit;
    fit.global_cr_hat = cr_hat;

    std::vector<double> model = first_order_profile(plan, launch, fiber, cr_hat,
                                                    fiber.span_length_m);
    double max_abs_db = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_abs_db = std::max(max_abs_db, std::abs(10.0 * std::log10(model[i] / numeric_end[i])));
    fit.fit_residual_db = max_abs_db;

    // Step 2: per-channel cr-hat matching each end-of-span net gain exactly,
    // with the step-1 normalization denominator held fixed:
    //   e^{-alpha L} P_tot e^{-P_tot cr_i Leff df_i} / D = P_i(L)/P_i(0)
    const double alpha = fiber.attenuation_np_m;
    const double L = fiber.span_length_m;
    const double leff = effective_length(alpha, L);
    double p_tot = 0.0;
    for (double p : launch) p_tot += p;
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        denom += launch[j] * std::exp(-p_tot * cr_hat * leff * plan.at(j).offset_frequency_hz);

    fit.per_channel_cr_hat.assign(n, cr_hat);
    const double df_min = 100e9;
    std::vector<bool> valid(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        double df = plan.at(i).offset_frequency_hz;
        if (std::abs(df) < df_min) continue;
        double gain = numeric_end[i] / launch[i];
        double cr_i = std::log(std::exp(-alpha * L) * p_tot / (gain * denom)) /
                      (p_tot * leff * df);
        if (!std::isfinite(cr_i))
            throw NumericalError("fit_effective_cr: non-finite per-channel cr at channel " +
                                 std::to_string(i));
        fit.per_channel_cr_hat[i] = cr_i;
        valid[i] = true;
    }

    // Near-center channels: linear interpolation in offset from the nearest
    // valid neighbors (constant extrapolation at the ends).
    for (std::size_t i = 0; i < n; ++i) {
        if (valid[i]) continue;
        std::ptrdiff_t lo = -1, hi = -1;
        for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 1; j >= 0; --j)
            if (valid[j]) { lo = j; break; }
        for (std::size_t j = i + 1; j < n; ++j)
            if (valid[j]) { hi = static_cast<std::ptrdiff_t>(j); break; }
        if (lo >= 0 && hi >= 0) {
            double x = plan.at(i).offset_frequency_hz;
            double x0 = plan.at(lo).offset_frequency_hz;
            double x1 = plan.at(hi).offset_frequency_hz;
            double y0 = fit.per_channel_cr_hat[lo];
            double y1 = fit.per_channel_cr_hat[hi];
            fit.per_channel_cr_hat[i] = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        } else if (lo >= 0) {
            fit.per_channel_cr_hat[i] = fit.per_channel_cr_hat[lo];
        } else if (hi >= 0) {
            fit.per_channel_cr_hat[i] = fit.per_channel_cr_hat[hi];
        }
        // else: every channel sits inside the 100 GHz window; keep cr_hat.
    }
    return fit;
}

std::vector<double> net_gain_db(const PowerProfile& profile) {
    std::vector<double> launch = profile.launch();
    std::vector<double> end = profile.end_of_span();
    std::vector<double> out(launch.size());
    for (std::size_t i = 0; i < launch.size(); ++i)
        out[i] = 10.0 * std::log10(end[i] / launch[i]);
    return out;
}

} // namespace gnlink
