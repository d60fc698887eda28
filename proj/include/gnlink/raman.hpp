#ifndef GNLINK_RAMAN_HPP
#define GNLINK_RAMAN_HPP

#include <cstddef>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/link.hpp"

// Signal power evolution along one span under inter-channel stimulated Raman
// scattering with a triangular gain slope:
//
//   dP_i/dz = -alpha_i P_i - Cr P_i sum_j (f_i - f_j) P_j
//
// plus the first-order analytical profile and the effective-slope fit that
// ports the closed-form NLI expressions beyond the triangular model's
// nominal bandwidth.

namespace gnlink {

class PowerProfile {
public:
    PowerProfile() = default;
    PowerProfile(std::vector<double> z_m, std::vector<double> powers_w, std::size_t n_channels);

    std::size_t n_z() const { return z_m_.size(); }
    std::size_t n_channels() const { return n_channels_; }
    const std::vector<double>& z_samples() const { return z_m_; }

    double power(std::size_t zi, std::size_t ch) const {
        return powers_w_[zi * n_channels_ + ch];
    }
    const double* row(std::size_t zi) const { return powers_w_.data() + zi * n_channels_; }

    std::vector<double> launch() const;
    std::vector<double> end_of_span() const;

private:
    std::vector<double> z_m_;
    std::vector<double> powers_w_;  // row-major [n_z][n_channels]
    std::size_t n_channels_ = 0;
};

/// Fixed-step classical RK4 on a uniform z grid with n_z samples
/// (z[0] = 0, z[n_z-1] = span length).
PowerProfile solve_raman_ode(const ChannelPlan& plan, const PowerVector& launch,
                             const FiberSpec& fiber, std::size_t n_z);

/// n_z derived from the fiber's RK4 step.
PowerProfile solve_raman_ode(const ChannelPlan& plan, const PowerVector& launch,
                             const FiberSpec& fiber);

/// First-order ISRS profile at distance z, offsets taken from the grid center:
///   P_i(z) = P_i(0) e^{-alpha z} P_tot e^{-P_tot cr Leff(z) df_i}
///            / sum_j P_j(0) e^{-P_tot cr Leff(z) df_j}
std::vector<double> first_order_profile(const ChannelPlan& plan, const PowerVector& launch,
                                        const FiberSpec& fiber, double cr, double z_m);

struct EffectiveRamanFit {
    double global_cr_hat = 0.0;               // 1/(W m Hz)
    std::vector<double> per_channel_cr_hat;   // aligned to the plan
    double fit_residual_db = 0.0;             // max |dB| mismatch at span end (global fit)
};

/// Match the numeric profile to the first-order model. Step 1: golden-section
/// search for a global cr-hat on [0, 4 Cr]. Step 2: per-channel cr-hat solving
/// the end-of-span net gain exactly, holding the step-1 normalization fixed;
/// channels within 100 GHz of the grid center are interpolated from neighbors.
EffectiveRamanFit fit_effective_cr(const PowerProfile& numeric, const ChannelPlan& plan,
                                   const PowerVector& launch, const FiberSpec& fiber);

/// 10 log10(P_i(L) / P_i(0)) per channel.
std::vector<double> net_gain_db(const PowerProfile& profile);

/// (1 - e^{-alpha z}) / alpha, with the alpha -> 0 limit handled.
double effective_length(double alpha_np_m, double z_m);

} // namespace gnlink

#endif
