#include "gnlink/gmi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gnlink/error.hpp"
#include "gnlink/parallel.hpp"
#include "gnlink/rng.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

HermiteRule hermite_rule(int order) {
    if (order < 1) throw ConfigError("hermite_rule: order must be >= 1");
    // Newton iteration on the orthonormal Hermite recurrence; nodes of the
    // physicists' polynomials, weights for \int e^{-t^2} f(t) dt.
    const int n = order;
    const int half = (n + 1) / 2;
    const double pim4 = std::pow(constants::pi, -0.25);
    std::vector<double> roots(half);   // descending, largest first
    std::vector<double> weights(half);
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * roots[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * roots[1];
        else
            z = 2.0 * z - roots[i - 2];

        double pp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        roots[i] = z;
        weights[i] = 2.0 / (pp * pp);
    }
    HermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < half; ++i) {
        rule.nodes[i] = -roots[i];
        rule.nodes[n - 1 - i] = roots[i];
        rule.weights[i] = weights[i];
        rule.weights[n - 1 - i] = weights[i];
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace {

// Sum over b of log2( sum_all e^{-d/s2} / sum_{label bit b matches} e^{-d/s2} )
// for one received sample y given the transmitted point index tx.
double bit_metric(const Constellation& c, std::complex<double> y, std::size_t tx,
                  double sigma2, std::vector<double>& scratch) {
    const auto& pts = c.points();
    const auto& labels = c.labels();
    const int m = c.bits_per_symbol();
    const std::size_t size = pts.size();

    double dmin = std::numeric_limits<double>::max();
    for (std::size_t j = 0; j < size; ++j) {
        double d = std::norm(y - pts[j]) / sigma2;
        scratch[j] = d;
        dmin = std::min(dmin, d);
    }
    double sum_all = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
        scratch[j] = std::exp(-(scratch[j] - dmin));
        sum_all += scratch[j];
    }
    double total = 0.0;
    const std::uint32_t tx_label = labels[tx];
    for (int b = 0; b < m; ++b) {
        const std::uint32_t bit = (tx_label >> b) & 1u;
        double sum_match = 0.0;
        for (std::size_t j = 0; j < size; ++j)
            if (((labels[j] >> b) & 1u) == bit) sum_match += scratch[j];
        total += std::log2(sum_all / sum_match);
    }
    return total;
}

GmiResult gmi_gauss_hermite(const Constellation& c, double snr_linear, int order) {
    if (order < 4) throw ConfigError("gmi: GaussHermite order below the precision floor of 4");
    const HermiteRule rule = hermite_rule(order);
    const double sigma2 = 1.0 / snr_linear;
    const double noise_scale = std::sqrt(sigma2);  // per-axis scale for e^{-t^2} nodes
    const auto& pts = c.points();
    const std::size_t size = pts.size();
    const int m = c.bits_per_symbol();

    std::vector<double> per_tx(size, 0.0);
    parallel_for(size, [&](std::size_t tx) {
        std::vector<double> scratch(size);
        double acc = 0.0;
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                std::complex<double> y =
                    pts[tx] + noise_scale * std::complex<double>(rule.nodes[a], rule.nodes[b]);
                acc += rule.weights[a] * rule.weights[b] * bit_metric(c, y, tx, sigma2, scratch);
            }
        }
        per_tx[tx] = acc;
    });

    double total = 0.0;
    for (double v : per_tx) total += v;
    GmiResult out;
    out.bits = m - total / (static_cast<double>(size) * constants::pi);
    out.std_error = 0.0;
    return out;
}

GmiResult gmi_monte_carlo(const Constellation& c, double snr_linear, std::size_t n,
                          std::uint64_t seed) {
    if (n < 10000) throw ConfigError("gmi: MonteCarlo sample count below the 10^4 floor");
    const double sigma2 = 1.0 / snr_linear;
    const double per_axis = std::sqrt(sigma2 / 2.0);
    const auto& pts = c.points();
    const std::size_t size = pts.size();
    const int m = c.bits_per_symbol();

    const std::size_t block = 4096;
    const std::size_t n_blocks = (n + block - 1) / block;
    std::vector<double> sums(n_blocks, 0.0), sums2(n_blocks, 0.0);

    parallel_for(n_blocks, [&](std::size_t blk) {
        std::vector<double> scratch(size);
        double acc = 0.0, acc2 = 0.0;
        const std::size_t begin = blk * block;
        const std::size_t end = std::min(n, begin + block);
        for (std::size_t s = begin; s < end; ++s) {
            SplitMix64 rng(seed, s);
            std::size_t tx = rng.uniform_index(size);
            // Box-Muller
            double u1 = rng.uniform();
            double u2 = rng.uniform();
            u1 = std::max(u1, 1e-300);
            double r = std::sqrt(-2.0 * std::log(u1));
            std::complex<double> noise(r * std::cos(2.0 * constants::pi * u2),
                                       r * std::sin(2.0 * constants::pi * u2));
            std::complex<double> y = pts[tx] + per_axis * noise;
            double v = bit_metric(c, y, tx, sigma2, scratch);
            acc += v;
            acc2 += v * v;
        }
        sums[blk] = acc;
        sums2[blk] = acc2;
    });

    double sum = 0.0, sum2 = 0.0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
        sum += sums[b];
        sum2 += sums2[b];
    }
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
    GmiResult out;
    out.bits = m - mean;
    out.std_error = std::sqrt(var / static_cast<double>(n));
    return out;
}

} // namespace

GmiResult gmi(const Constellation& c, double snr_linear, const GmiMethod& method) {
    if (!(snr_linear > 0.0)) throw ConfigError("gmi: snr must be > 0");
    if (method.kind == GmiMethod::Kind::GaussHermite)
        return gmi_gauss_hermite(c, snr_linear, method.order);
    return gmi_monte_carlo(c, snr_linear, method.n, method.seed);
}

double ngmi(double gmi_bits, int bits_per_symbol) {
    return 1.0 - (bits_per_symbol - gmi_bits) / static_cast<double>(bits_per_symbol);
}

GmiTable::GmiTable(const Constellation& c, double snr_db_min, double snr_db_max, double step_db,
                   int quad_order)
    : min_db_(snr_db_min), step_db_(step_db) {
    if (!(step_db > 0.0) || !(snr_db_max > snr_db_min))
        throw ConfigError("GmiTable: bad grid");
    std::size_t count = static_cast<std::size_t>((snr_db_max - snr_db_min) / step_db) + 1;
    values_.assign(count, 0.0);
    GmiMethod method = GmiMethod::gauss_hermite(quad_order);
    // parallel_for sits inside gmi(); the outer loop stays sequential so the
    // inner evaluation can use every worker.
    for (std::size_t i = 0; i < count; ++i) {
        double snr_db = min_db_ + step_db_ * static_cast<double>(i);
        values_[i] = gmi(c, db_to_linear(snr_db), method).bits;
    }
}

double GmiTable::lookup_db(double snr_db) const {
    if (values_.empty()) throw ConfigError("GmiTable: empty table");
    double pos = (snr_db - min_db_) / step_db_;
    if (pos <= 0.0) return values_.front();
    if (pos >= static_cast<double>(values_.size() - 1)) return values_.back();
    std::size_t idx = static_cast<std::size_t>(pos);
    double t = pos - static_cast<double>(idx);
    // Catmull-Rom: a C^1 surface keeps gradient refinement meaningful.
    const std::size_t last = values_.size() - 1;
    double p1 = values_[idx];
    double p2 = values_[idx + 1];
    double p0 = idx > 0 ? values_[idx - 1] : 2.0 * p1 - p2;
    double p3 = idx + 2 <= last ? values_[idx + 2] : 2.0 * p2 - p1;
    double a = 2.0 * p1;
    double b = p2 - p0;
    double c = 2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3;
    double d = -p0 + 3.0 * p1 - 3.0 * p2 + p3;
    return 0.5 * (a + b * t + c * t * t + d * t * t * t);
}

} // namespace gnlink
