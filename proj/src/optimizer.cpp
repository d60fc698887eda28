#include "gnlink/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>

#include "gnlink/error.hpp"
#include "gnlink/link_budget.hpp"
#include "gnlink/parallel.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

std::vector<double> expand_power_param(const PowerParam& param, const ChannelPlan& plan) {
    const std::size_t n = plan.size();
    std::vector<double> out(n, 0.0);
    for (int b = 0; b < 3; ++b) {
        Band band = static_cast<Band>(b);
        double fmin = 0.0, fmax = 0.0;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (plan.at(i).band != band) continue;
            double f = plan.at(i).offset_frequency_hz;
            if (first) {
                fmin = fmax = f;
                first = false;
            } else {
                fmin = std::min(fmin, f);
                fmax = std::max(fmax, f);
            }
        }
        if (first) continue;  // band unused
        for (std::size_t i = 0; i < n; ++i) {
            if (plan.at(i).band != band) continue;
            double t = 0.5;
            if (fmax > fmin)
                t = (plan.at(i).offset_frequency_hz - fmin) / (fmax - fmin);
            out[i] = param.offset_dbm[b] + param.tilt_db[b] * (t - 0.5);
        }
    }
    return out;
}

namespace {

std::array<double, 6> lower_bounds(const OptimizerBounds& b) {
    return {b.offset_min_dbm, b.tilt_min_db, b.offset_min_dbm,
            b.tilt_min_db, b.offset_min_dbm, b.tilt_min_db};
}

std::array<double, 6> upper_bounds(const OptimizerBounds& b) {
    return {b.offset_max_dbm, b.tilt_max_db, b.offset_max_dbm,
            b.tilt_max_db, b.offset_max_dbm, b.tilt_max_db};
}

} // namespace

PsoResult pso(const std::function<double(const PowerParam&)>& objective,
              const PsoConfig& config, const OptimizerBounds& bounds) {
    if (config.swarm_size < 1 || config.iterations < 0)
        throw ConfigError("pso: swarm size and iterations must be positive");
    const auto lo = lower_bounds(bounds);
    const auto hi = upper_bounds(bounds);
    for (int d = 0; d < 6; ++d)
        if (!(hi[d] >= lo[d]) || !std::isfinite(lo[d]) || !std::isfinite(hi[d]))
            throw ConfigError("pso: bounds must be finite and ordered");

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int swarm = config.swarm_size;
    std::vector<std::array<double, 6>> x(swarm), v(swarm), pbest(swarm);
    std::vector<double> pbest_f(swarm, -std::numeric_limits<double>::infinity());
    std::array<double, 6> vmax{};
    for (int d = 0; d < 6; ++d) vmax[d] = 0.2 * (hi[d] - lo[d]);

    for (int p = 0; p < swarm; ++p) {
        for (int d = 0; d < 6; ++d) {
            x[p][d] = lo[d] + (hi[d] - lo[d]) * unit(rng);
            v[p][d] = (2.0 * unit(rng) - 1.0) * vmax[d];
        }
        pbest[p] = x[p];
    }

    std::array<double, 6> gbest{};
    double gbest_f = -std::numeric_limits<double>::infinity();

    std::vector<double> values(swarm);
    PsoResult result;

    auto evaluate_swarm = [&]() {
        parallel_for(static_cast<std::size_t>(swarm), [&](std::size_t p) {
            values[p] = objective(PowerParam::from_flat(x[p]));
        });
    };

    evaluate_swarm();
    for (int p = 0; p < swarm; ++p) {
        pbest_f[p] = values[p];
        if (values[p] > gbest_f) {
            gbest_f = values[p];
            gbest = x[p];
        }
    }
    result.trace.push_back({0, gbest_f, gbest});

    for (int it = 1; it <= config.iterations; ++it) {
        for (int p = 0; p < swarm; ++p) {
            for (int d = 0; d < 6; ++d) {
                double r1 = unit(rng);
                double r2 = unit(rng);
                v[p][d] = config.inertia * v[p][d] +
                          config.cognitive * r1 * (pbest[p][d] - x[p][d]) +
                          config.social * r2 * (gbest[d] - x[p][d]);
                v[p][d] = std::clamp(v[p][d], -vmax[d], vmax[d]);
                x[p][d] += v[p][d];
                // Reflect at the box faces.
                if (x[p][d] > hi[d]) {
                    x[p][d] = hi[d] - (x[p][d] - hi[d]);
                    v[p][d] = -v[p][d];
                }
                if (x[p][d] < lo[d]) {
                    x[p][d] = lo[d] + (lo[d] - x[p][d]);
                    v[p][d] = -v[p][d];
                }
                x[p][d] = std::clamp(x[p][d], lo[d], hi[d]);
            }
        }
        evaluate_swarm();
        for (int p = 0; p < swarm; ++p) {
            if (values[p] > pbest_f[p]) {
                pbest_f[p] = values[p];
                pbest[p] = x[p];
            }
            if (values[p] > gbest_f) {
                gbest_f = values[p];
                gbest = x[p];
            }
        }
        result.trace.push_back({it, gbest_f, gbest});
    }

    result.best = PowerParam::from_flat(gbest);
    result.best_objective = gbest_f;
    return result;
}

GradientResult refine_gradient(const std::function<double(const std::vector<double>&)>& objective,
                               const std::vector<double>& start_dbm,
                               const OptimizerBounds& bounds, const GradientOptions& options) {
    const std::size_t n = start_dbm.size();
    const double lo = bounds.channel_min_dbm;
    const double hi = bounds.channel_max_dbm;

    std::vector<double> x = start_dbm;
    for (double& v : x) v = std::clamp(v, lo, hi);
    double fx = objective(x);

    double step = options.step_db;
    const double delta = options.step_db;
    std::vector<double> grad(n);
    int it = 0;
    for (; it < options.max_iters; ++it) {
        if (step < 1e-3) break;
        parallel_for(n, [&](std::size_t i) {
            std::vector<double> up = x, dn = x;
            up[i] = std::clamp(up[i] + delta, lo, hi);
            dn[i] = std::clamp(dn[i] - delta, lo, hi);
            double span = up[i] - dn[i];
            grad[i] = span > 0.0 ? (objective(up) - objective(dn)) / span : 0.0;
        });
        double gmax = 0.0;
        for (double g : grad) gmax = std::max(gmax, std::abs(g));
        if (gmax <= 0.0) break;

        std::vector<double> cand = x;
        for (std::size_t i = 0; i < n; ++i)
            cand[i] = std::clamp(cand[i] + step * grad[i] / gmax, lo, hi);
        double fc = objective(cand);
        if (fc > fx) {
            double gain = fc - fx;
            x = std::move(cand);
            fx = fc;
            if (gain < options.tol_bps) break;
        } else {
            // Halve and carry on with a fresh gradient from the same point.
            step *= 0.5;
        }
    }

    GradientResult out;
    out.powers_dbm = std::move(x);
    out.objective = fx;
    out.iterations = it;
    return out;
}

ThroughputObjective::ThroughputObjective(const ChannelPlan& plan, const LinkSpec& link,
                                         std::vector<double> excess_kurtosis,
                                         std::vector<const GmiTable*> tables,
                                         double format_correction_coeff,
                                         double epsilon_override)
    : plan_(plan),
      link_(link),
      kurtosis_(std::move(excess_kurtosis)),
      tables_(std::move(tables)),
      corr_coeff_(format_correction_coeff),
      epsilon_override_(epsilon_override) {
    if (kurtosis_.size() != plan_.size() || tables_.size() != plan_.size())
        throw ConfigError("ThroughputObjective: per-channel inputs must match the plan");
}

double ThroughputObjective::evaluate_dbm(const std::vector<double>& powers_dbm) const {
    if (powers_dbm.size() != plan_.size())
        throw ConfigError("ThroughputObjective: power vector length mismatch");
    PowerVector watts(powers_dbm.size());
    for (std::size_t i = 0; i < powers_dbm.size(); ++i) watts[i] = dbm_to_watt(powers_dbm[i]);
    try {
        PropagationResult prop =
            propagate_link(plan_, watts, link_, kurtosis_, corr_coeff_, epsilon_override_);
        double total = 0.0;
        for (std::size_t i = 0; i < plan_.size(); ++i) {
            double g = tables_[i]->lookup_db(prop.snr.snr_db[i]);
            total += 2.0 * plan_.at(i).bandwidth_hz * g;
        }
        return total;
    } catch (const NumericalError& e) {
        std::lock_guard<std::mutex> lock(failure_mutex_);
        last_failure_ = e.what();
        return -std::numeric_limits<double>::infinity();
    }
}

std::string ThroughputObjective::last_failure() const {
    std::lock_guard<std::mutex> lock(failure_mutex_);
    return last_failure_;
}

double ThroughputObjective::evaluate_param(const PowerParam& param) const {
    return evaluate_dbm(expand_power_param(param, plan_));
}

} // namespace gnlink
