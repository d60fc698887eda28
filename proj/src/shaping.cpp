#include "gnlink/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gnlink/error.hpp"
#include "gnlink/gmi.hpp"
#include "gnlink/parallel.hpp"
#include "gnlink/rng.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

namespace {

// GMI evaluation state for one candidate point set, organized so that a
// single-point finite-difference probe only touches the terms that involve
// the perturbed point.
class ShapingEngine {
public:
    ShapingEngine(const std::vector<std::uint32_t>& labels, int m, double snr, int order)
        : labels_(labels), m_(m), size_(labels.size()), sigma2_(1.0 / snr) {
        HermiteRule rule = hermite_rule(order);
        nodes_ = rule.nodes;
        weights_ = rule.weights;
        order_ = order;
        noise_scale_ = std::sqrt(sigma2_);
        e_.resize(size_ * order_ * order_ * size_);
        sall_.resize(size_ * order_ * order_);
        sbit_.resize(size_ * order_ * order_ * m_);
        lrow_.resize(size_ * order_ * order_);
    }

    void rebuild(const std::vector<std::complex<double>>& pts) {
        pts_ = pts;
        parallel_for(size_, [&](std::size_t tx) {
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b) rebuild_row(tx, a, b);
        });
        total_ = 0.0;
        for (std::size_t tx = 0; tx < size_; ++tx)
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    total_ += weights_[a] * weights_[b] * lrow_[row_index(tx, a, b)];
    }

    double gmi() const {
        return m_ - total_ / (static_cast<double>(size_) * constants::pi);
    }

    /// Objective after moving point p to `moved`, leaving the cache intact.
    double probe(std::size_t p, std::complex<double> moved) const {
        double total = total_;
        std::vector<double> exps(size_);
        for (std::size_t tx = 0; tx < size_; ++tx) {
            for (int a = 0; a < order_; ++a) {
                for (int b = 0; b < order_; ++b) {
                    const std::size_t r = row_index(tx, a, b);
                    double lrow_new;
                    if (tx == p) {
                        std::complex<double> y =
                            moved + noise_scale_ * std::complex<double>(nodes_[a], nodes_[b]);
                        double sall = 0.0;
                        for (std::size_t j = 0; j < size_; ++j) {
                            std::complex<double> xj = (j == p) ? moved : pts_[j];
                            exps[j] = std::exp(-std::norm(y - xj) / sigma2_);
                            sall += exps[j];
                        }
                        lrow_new = bits_from_scratch(tx, exps, sall);
                    } else {
                        std::complex<double> y =
                            pts_[tx] + noise_scale_ * std::complex<double>(nodes_[a], nodes_[b]);
                        double e_new = std::exp(-std::norm(y - moved) / sigma2_);
                        double e_old = e_[r * size_ + p];
                        double sall = sall_[r] - e_old + e_new;
                        lrow_new = 0.0;
                        for (int bit = 0; bit < m_; ++bit) {
                            double sb = sbit_[r * m_ + bit];
                            if (((labels_[p] >> bit) & 1u) == ((labels_[tx] >> bit) & 1u))
                                sb += e_new - e_old;
                            lrow_new += std::log2(sall / sb);
                        }
                    }
                    total += weights_[a] * weights_[b] * (lrow_new - lrow_[r]);
                }
            }
        }
        double gmi_probe = m_ - total / (static_cast<double>(size_) * constants::pi);
        return gmi_probe;
    }

private:
    std::size_t row_index(std::size_t tx, int a, int b) const {
        return (tx * order_ + a) * order_ + b;
    }

    double bits_from_scratch(std::size_t tx, const std::vector<double>& exps,
                             double sall) const {
        double lrow = 0.0;
        for (int bit = 0; bit < m_; ++bit) {
            const std::uint32_t want = (labels_[tx] >> bit) & 1u;
            double sb = 0.0;
            for (std::size_t j = 0; j < size_; ++j)
                if (((labels_[j] >> bit) & 1u) == want) sb += exps[j];
            lrow += std::log2(sall / sb);
        }
        return lrow;
    }

    void rebuild_row(std::size_t tx, int a, int b) {
        const std::size_t r = row_index(tx, a, b);
        std::complex<double> y =
            pts_[tx] + noise_scale_ * std::complex<double>(nodes_[a], nodes_[b]);
        double sall = 0.0;
        for (std::size_t j = 0; j < size_; ++j) {
            double e = std::exp(-std::norm(y - pts_[j]) / sigma2_);
            e_[r * size_ + j] = e;
            sall += e;
        }
        sall_[r] = sall;
        double lrow = 0.0;
        for (int bit = 0; bit < m_; ++bit) {
            const std::uint32_t want = (labels_[tx] >> bit) & 1u;
            double sb = 0.0;
            for (std::size_t j = 0; j < size_; ++j)
                if (((labels_[j] >> bit) & 1u) == want) sb += e_[r * size_ + j];
            sbit_[r * m_ + bit] = sb;
            lrow += std::log2(sall / sb);
        }
        lrow_[r] = lrow;
    }

    const std::vector<std::uint32_t>& labels_;
    int m_;
    std::size_t size_;
    double sigma2_;
    double noise_scale_;
    int order_ = 8;
    std::vector<double> nodes_, weights_;
    std::vector<std::complex<double>> pts_;
    std::vector<double> e_, sall_, sbit_, lrow_;
    double total_ = 0.0;
};

std::vector<std::complex<double>> normalized(std::vector<std::complex<double>> pts) {
    double e = 0.0;
    for (const auto& p : pts) e += std::norm(p);
    e /= static_cast<double>(pts.size());
    double s = 1.0 / std::sqrt(e);
    for (auto& p : pts) p *= s;
    return pts;
}

} // namespace

Constellation shape_constellation(int bits_per_symbol, double target_snr_linear,
                                  std::uint64_t seed, int iters, const ShapingOptions& opts) {
    if (bits_per_symbol != 4 && bits_per_symbol != 6)
        throw ConfigError("shape_constellation: only 16- and 64-point formats are supported");
    if (!(target_snr_linear > 0.0))
        throw ConfigError("shape_constellation: target snr must be > 0");

    Constellation base = Constellation::gray_qam(bits_per_symbol);
    if (iters == 0) return base;

    const std::vector<std::uint32_t>& labels = base.labels();
    const std::size_t size = base.size();

    ShapingEngine engine(labels, bits_per_symbol, target_snr_linear, opts.quad_order);
    engine.rebuild(base.points());
    double best_gmi = engine.gmi();
    std::vector<std::complex<double>> best_pts = base.points();

    const int restarts = std::max(1, opts.restarts);
    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(seed, static_cast<std::uint64_t>(r));
        std::vector<std::complex<double>> x = base.points();
        for (auto& p : x)
            p += opts.jitter * std::complex<double>(2.0 * rng.uniform() - 1.0,
                                                    2.0 * rng.uniform() - 1.0);
        x = normalized(std::move(x));
        engine.rebuild(x);
        double fx = engine.gmi();
        if (fx > best_gmi) {
            best_gmi = fx;
            best_pts = x;
        }

        double step = opts.step0;
        const double delta = opts.fd_delta;
        std::vector<double> grad(2 * size);
        for (int it = 0; it < iters; ++it) {
            parallel_for(2 * size, [&](std::size_t coord) {
                std::size_t p = coord / 2;
                std::complex<double> axis = (coord % 2 == 0)
                                                ? std::complex<double>(delta, 0.0)
                                                : std::complex<double>(0.0, delta);
                double up = engine.probe(p, x[p] + axis);
                double dn = engine.probe(p, x[p] - axis);
                grad[coord] = (up - dn) / (2.0 * delta);
            });
            double gmax = 0.0;
            for (double g : grad) gmax = std::max(gmax, std::abs(g));
            if (gmax < 1e-12) break;
            for (std::size_t p = 0; p < size; ++p)
                x[p] += step / gmax * std::complex<double>(grad[2 * p], grad[2 * p + 1]);
            x = normalized(std::move(x));
            engine.rebuild(x);
            double fx_new = engine.gmi();
            if (fx_new > best_gmi) {
                best_gmi = fx_new;
                best_pts = x;
            }
            if ((it + 1) % 50 == 0) step *= 0.9;
        }
    }

    Constellation out(best_pts, labels);
    return out;
}

} // namespace gnlink
