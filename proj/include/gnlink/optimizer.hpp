#ifndef GNLINK_OPTIMIZER_HPP
#define GNLINK_OPTIMIZER_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/gmi.hpp"
#include "gnlink/link.hpp"

// Spectral launch-power optimization: particle swarm over a 6-D band
// parameterization (offset + tilt per band), then per-channel gradient
// refinement in the dB domain.

namespace gnlink {

struct PowerParam {
    std::array<double, 3> offset_dbm = {0.0, 0.0, 0.0};  // S, C, L
    std::array<double, 3> tilt_db = {0.0, 0.0, 0.0};

    std::array<double, 6> flat() const {
        return {offset_dbm[0], tilt_db[0], offset_dbm[1], tilt_db[1], offset_dbm[2], tilt_db[2]};
    }
    static PowerParam from_flat(const std::array<double, 6>& x) {
        PowerParam p;
        for (int b = 0; b < 3; ++b) {
            p.offset_dbm[b] = x[2 * b];
            p.tilt_db[b] = x[2 * b + 1];
        }
        return p;
    }
};

struct PsoConfig {
    int swarm_size = 50;
    int iterations = 200;
    double inertia = 0.7;
    double cognitive = 1.5;
    double social = 1.5;
    std::uint64_t seed = 1;
};

struct OptimizerBounds {
    double offset_min_dbm = -6.0;
    double offset_max_dbm = 6.0;
    double tilt_min_db = -6.0;
    double tilt_max_db = 6.0;
    double channel_min_dbm = -9.0;  // per-channel box for the refinement stage
    double channel_max_dbm = 9.0;
};

/// Per-channel launch powers (dBm) from a band parameterization: linear tilt
/// across each band's channels, exact offset +- tilt/2 at the band endpoints.
std::vector<double> expand_power_param(const PowerParam& param, const ChannelPlan& plan);

struct PsoTracePoint {
    int iteration;
    double best_objective;
    std::array<double, 6> best_param;
};

struct PsoResult {
    PowerParam best;
    double best_objective = 0.0;
    std::vector<PsoTracePoint> trace;
};

/// Global-best PSO with velocity clamped to 20% of the box width and
/// reflection at the bounds; deterministic for a fixed seed.
PsoResult pso(const std::function<double(const PowerParam&)>& objective,
              const PsoConfig& config, const OptimizerBounds& bounds);

struct GradientOptions {
    double step_db = 0.1;
    double tol_bps = 1e9;  // 1e-3 Tb/s
    int max_iters = 100;
};

struct GradientResult {
    std::vector<double> powers_dbm;
    double objective = 0.0;
    int iterations = 0;
};

/// Projected ascent with central finite differences in the dB domain and
/// step halving on non-improvement; the result never degrades the start.
GradientResult refine_gradient(const std::function<double(const std::vector<double>&)>& objective,
                               const std::vector<double>& start_dbm,
                               const OptimizerBounds& bounds,
                               const GradientOptions& options = GradientOptions());

/// Continuous GMI-bound throughput objective: propagate_link -> per-channel
/// GMI (tabulated) -> sum of 2 R_s gmi_i. Propagation failures map to -inf.
class ThroughputObjective {
public:
    ThroughputObjective(const ChannelPlan& plan, const LinkSpec& link,
                        std::vector<double> excess_kurtosis, std::vector<const GmiTable*> tables,
                        double format_correction_coeff, double epsilon_override = -1.0);

    double evaluate_dbm(const std::vector<double>& powers_dbm) const;
    double evaluate_param(const PowerParam& param) const;

    /// Diagnostic from the most recent evaluation that returned -inf.
    std::string last_failure() const;

private:
    const ChannelPlan& plan_;
    const LinkSpec& link_;
    std::vector<double> kurtosis_;
    std::vector<const GmiTable*> tables_;  // per channel
    double corr_coeff_;
    double epsilon_override_;
    mutable std::mutex failure_mutex_;
    mutable std::string last_failure_;
};

} // namespace gnlink

#endif
