#include "gnlink/nli.hpp"

#include <cmath>
#include <string>

#include "gnlink/error.hpp"
#include "gnlink/parallel.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

NliReport eta_closed_form(const ChannelPlan& plan, const PowerVector& launch,
                          const FiberSpec& fiber, const EffectiveRamanFit& fit,
                          const std::vector<double>& excess_kurtosis,
                          double correction_coeff) {
    const std::size_t n = plan.size();
    validate_power_vector(launch, n, "eta_closed_form");
    if (fit.per_channel_cr_hat.size() != n)
        throw ConfigError("eta_closed_form: fit does not match the plan");
    if (excess_kurtosis.size() != n)
        throw ConfigError("eta_closed_form: kurtosis vector does not match the plan");

    const double alpha = fiber.attenuation_np_m;
    const double abar = fiber.attenuation_bar_np_m;
    const double A = alpha + abar;
    const double gamma2 = fiber.gamma * fiber.gamma;
    const auto disp =
        dispersion_coefficients(fiber.dispersion_d, fiber.dispersion_slope_s,
                                fiber.ref_wavelength_m);
    const double beta2 = disp.beta2;
    const double beta3 = disp.beta3;
    const double pi = constants::pi;

    double p_tot = 0.0;
    for (double p : launch) p_tot += p;

    std::vector<double> df(n), bw(n), t_k(n);
    for (std::size_t i = 0; i < n; ++i) {
        df[i] = plan.at(i).offset_frequency_hz;
        bw[i] = plan.at(i).bandwidth_hz;
        double g = A - df[i] * p_tot * fit.per_channel_cr_hat[i];
        t_k[i] = g * g;
    }

    NliReport report;
    report.eta_spm.assign(n, 0.0);
    report.eta_xpm.assign(n, 0.0);
    report.eta_corr.assign(n, 0.0);

    parallel_for(n, [&](std::size_t i) {
        const double b_i = bw[i];

        double phi_i = 1.5 * pi * pi * (beta2 + 2.0 * pi * beta3 * df[i]);
        if (phi_i == 0.0)
            throw NumericalError("eta_closed_form: degenerate dispersion (phi = 0) at channel " +
                                 std::to_string(i));
        double spm = (4.0 / 9.0) * (gamma2 / (b_i * b_i)) *
                     (pi / (phi_i * abar * (2.0 * alpha + abar))) *
                     ((t_k[i] - alpha * alpha) / alpha *
                          std::asinh(phi_i * b_i * b_i / (alpha * pi)) +
                      (A * A - t_k[i]) / A * std::asinh(phi_i * b_i * b_i / (A * pi)));
        report.eta_spm[i] = spm;

        double xpm = 0.0;
        double corr = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            double phi_ik =
                2.0 * pi * pi * (df[k] - df[i]) * (beta2 + pi * beta3 * (df[i] + df[k]));
            if (phi_ik == 0.0)
                throw NumericalError(
                    "eta_closed_form: degenerate dispersion (phi = 0) for channel pair " +
                    std::to_string(i) + "," + std::to_string(k));
            double aphi = std::abs(phi_ik);
            double ratio = launch[k] / launch[i];
            double term = (32.0 / 27.0) * ratio * ratio * gamma2 /
                          (bw[k] * aphi * abar * (2.0 * alpha + abar)) *
                          ((t_k[k] - alpha * alpha) / alpha * std::atan(aphi * b_i / alpha) +
                           (A * A - t_k[k]) / A * std::atan(aphi * b_i / A));
            xpm += term;
            corr += excess_kurtosis[k] * term;
        }
        report.eta_xpm[i] = xpm;
        report.eta_corr[i] = correction_coeff * corr;
    });

    return report;
}

double epsilon_coherence(const FiberSpec& fiber, double total_bandwidth_hz) {
    if (!(total_bandwidth_hz > 0.0))
        throw ConfigError("epsilon_coherence: bandwidth must be > 0");
    const double abar = fiber.attenuation_bar_np_m;
    const double L = fiber.span_length_m;
    const auto disp = dispersion_coefficients(fiber.dispersion_d, fiber.dispersion_slope_s,
                                              fiber.ref_wavelength_m);
    const double pi = constants::pi;
    double arg = (pi * pi / 2.0) * (std::abs(disp.beta2) / abar) * total_bandwidth_hz *
                 total_bandwidth_hz;
    return 0.3 * std::log(1.0 + (6.0 / (abar * L)) / std::asinh(arg));
}

NliReport accumulate_nli(const std::vector<NliReport>& per_span, AccumulationMode mode,
                         int n_spans, double epsilon, const PowerVector& launch) {
    if (per_span.empty()) throw ConfigError("accumulate_nli: no span reports");
    const std::size_t n = per_span.front().size();
    validate_power_vector(launch, n, "accumulate_nli");

    NliReport total;
    total.eta_spm.assign(n, 0.0);
    total.eta_xpm.assign(n, 0.0);
    total.eta_corr.assign(n, 0.0);
    total.p_nli.assign(n, 0.0);
    total.epsilon = epsilon;

    if (mode == AccumulationMode::Homogeneous) {
        // The spans must be identical; a single report stands for all of them.
        if (per_span.size() != 1) {
            if (static_cast<int>(per_span.size()) != n_spans)
                throw ConfigError("accumulate_nli: Homogeneous mode expects 1 or n_spans reports");
            for (const NliReport& s : per_span) {
                if (s.size() != n || s.eta_spm != per_span.front().eta_spm ||
                    s.eta_xpm != per_span.front().eta_xpm ||
                    s.eta_corr != per_span.front().eta_corr)
                    throw ConfigError("accumulate_nli: Homogeneous mode requires identical spans");
            }
        }
        const NliReport& s = per_span.front();
        double coherent = std::pow(static_cast<double>(n_spans), 1.0 + epsilon);
        for (std::size_t i = 0; i < n; ++i) {
            total.eta_spm[i] = coherent * s.eta_spm[i];
            total.eta_xpm[i] = n_spans * s.eta_xpm[i];
            total.eta_corr[i] = n_spans * s.eta_corr[i];
        }
    } else {
        if (static_cast<int>(per_span.size()) != n_spans)
            throw ConfigError("accumulate_nli: PerSpan mode expects one report per span");
        for (const NliReport& s : per_span) {
            if (s.size() != n) throw ConfigError("accumulate_nli: span report size mismatch");
            for (std::size_t i = 0; i < n; ++i) {
                total.eta_spm[i] += s.eta_spm[i];
                total.eta_xpm[i] += s.eta_xpm[i];
                total.eta_corr[i] += s.eta_corr[i];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        total.p_nli[i] = total.eta_total(i) * launch[i] * launch[i] * launch[i];
    return total;
}

} // namespace gnlink
