#ifndef GNLINK_LINK_BUDGET_HPP
#define GNLINK_LINK_BUDGET_HPP

#include <string>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/link.hpp"
#include "gnlink/nli.hpp"

// Amplifier gains under the two equalization scenarios, ASE accumulation,
// and per-channel SNR assembly.

namespace gnlink {

struct SpanState {
    int span_index = 0;
    std::vector<double> input_powers_w;
    std::vector<double> output_powers_w;   // fiber end, pre-amplifier
    std::vector<double> gains;             // linear, post_amp = output * gain
    std::vector<double> post_amp_powers_w;
};

struct SnrReport {
    std::string scenario;
    std::vector<double> launch_w;
    std::vector<double> p_ase_w;
    std::vector<double> p_nli_w;
    std::vector<double> snr_linear;
    std::vector<double> snr_db;
    std::vector<bool> infinite_snr;  // flagged when ase + nli == 0

    std::size_t size() const { return launch_w.size(); }
};

struct PropagationResult {
    std::vector<SpanState> spans;  // Ideal keeps one representative span state
    SnrReport snr;
};

/// ASE per the span-budget formula
///   P_ase(i) = sum_s pol * h f_i (NF_lin/2) (G_eff,s(i) - 1) B_i
/// with G_eff the span gain, floored at the span-loss gain when the
/// amplifier policy says so, and (G-1) clamped at zero.
std::vector<double> ase_accumulate(const ChannelPlan& plan, const LinkSpec& link,
                                   const std::vector<SpanState>& span_states);

SnrReport assemble_snr(const PowerVector& launch, const std::vector<double>& p_ase,
                       const std::vector<double>& p_nli, const std::string& scenario);

/// Full link evaluation: Raman evolution per span, equalization per the
/// amplifier spec, ASE and NLI accumulation, SNR assembly.
PropagationResult propagate_link(const ChannelPlan& plan, const PowerVector& launch,
                                 const LinkSpec& link,
                                 const std::vector<double>& excess_kurtosis,
                                 double format_correction_coeff = kDefaultFormatCorrectionCoeff,
                                 double epsilon_override = -1.0);

} // namespace gnlink

#endif
