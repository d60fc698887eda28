#ifndef GNLINK_NLI_HPP
#define GNLINK_NLI_HPP

#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/link.hpp"
#include "gnlink/raman.hpp"

// Per-channel nonlinear-interference (NLI) power from the closed-form
// ISRS GN model with a modulation-format correction, plus multi-span
// accumulation.

namespace gnlink {

struct NliReport {
    std::vector<double> eta_spm;   // 1/W^2
    std::vector<double> eta_xpm;   // 1/W^2
    std::vector<double> eta_corr;  // 1/W^2, signed
    std::vector<double> p_nli;     // W (filled by accumulate_nli)
    double epsilon = 0.0;          // coherence exponent used for accumulation

    std::size_t size() const { return eta_spm.size(); }
    double eta_total(std::size_t i) const {
        return eta_spm[i] + eta_xpm[i] + eta_corr[i];
    }
};

inline constexpr double kDefaultFormatCorrectionCoeff = 5.0 / 6.0;

/// Single-span closed-form evaluation. `excess_kurtosis` holds the per-channel
/// modulation excess kurtosis (0 for Gaussian); `correction_coeff` scales the
/// kurtosis-weighted XPM correction terms.
NliReport eta_closed_form(const ChannelPlan& plan, const PowerVector& launch,
                          const FiberSpec& fiber, const EffectiveRamanFit& fit,
                          const std::vector<double>& excess_kurtosis,
                          double correction_coeff = kDefaultFormatCorrectionCoeff);

/// Multi-span SPM coherence exponent:
///   eps = (3/10) ln(1 + (6/(abar L)) / asinh((pi^2/2)(|beta2|/abar) Btot^2))
double epsilon_coherence(const FiberSpec& fiber, double total_bandwidth_hz);

enum class AccumulationMode { Homogeneous, PerSpan };

/// Homogeneous: eta_total = n^{1+eps} eta_spm + n (eta_xpm + eta_corr),
/// requiring identical spans (one report). PerSpan: incoherent sum of each
/// span's total. p_nli = eta_total * P_launch^3.
NliReport accumulate_nli(const std::vector<NliReport>& per_span, AccumulationMode mode,
                         int n_spans, double epsilon, const PowerVector& launch);

} // namespace gnlink

#endif
