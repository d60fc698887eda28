#include "gnlink/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gnlink/error.hpp"

namespace gnlink {

RateAssignment select_code_rates(const std::vector<double>& ngmi_per_channel,
                                 const std::vector<int>& bits_per_channel,
                                 double symbol_rate_hz, int k_rates) {
    const std::size_t n = ngmi_per_channel.size();
    if (k_rates < 1) throw ConfigError("select_code_rates: K must be >= 1");
    if (bits_per_channel.size() != n)
        throw ConfigError("select_code_rates: bits vector length mismatch");
    if (!(symbol_rate_hz > 0.0)) throw ConfigError("select_code_rates: symbol rate must be > 0");
    for (double v : ngmi_per_channel)
        if (v < 0.0 || v > 1.0) throw ConfigError("select_code_rates: NGMI must be in [0, 1]");

    RateAssignment out;
    out.per_channel_rate.assign(n, 0.0);
    if (n == 0) return out;

    // Channels sorted by NGMI descending; a chosen threshold at sorted
    // position j serves every earlier unserved channel at rate v[j].
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ngmi_per_channel[a] > ngmi_per_channel[b];
    });
    std::vector<double> v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = ngmi_per_channel[order[i]];
        w[i] = 2.0 * symbol_rate_hz * bits_per_channel[order[i]];
    }
    std::vector<double> wsum(n);  // prefix weights
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += w[i];
        wsum[i] = acc;
    }

    const int k_max = std::min<int>(k_rates, static_cast<int>(n));
    const double kNeg = -std::numeric_limits<double>::infinity();
    // f[t][j]: best objective using t thresholds, the last at sorted index j
    // (covering channels 0..j).
    std::vector<std::vector<double>> f(k_max + 1, std::vector<double>(n, kNeg));
    std::vector<std::vector<int>> prev(k_max + 1, std::vector<int>(n, -1));
    for (std::size_t j = 0; j < n; ++j) f[1][j] = v[j] * wsum[j];
    for (int t = 2; t <= k_max; ++t) {
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t p = 0; p < j; ++p) {
                double cand = f[t - 1][p] + v[j] * (wsum[j] - wsum[p]);
                if (cand > f[t][j]) {
                    f[t][j] = cand;
                    prev[t][j] = static_cast<int>(p);
                }
            }
        }
    }

    double best = kNeg;
    int best_t = 1, best_j = 0;
    for (int t = 1; t <= k_max; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            if (f[t][j] > best) {
                best = f[t][j];
                best_t = t;
                best_j = static_cast<int>(j);
            }
        }
    }

    std::vector<double> thresholds;
    int t = best_t, j = best_j;
    while (j >= 0 && t >= 1) {
        thresholds.push_back(v[static_cast<std::size_t>(j)]);
        j = prev[t][static_cast<std::size_t>(j)];
        --t;
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    out.rate_set = thresholds;

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ng = ngmi_per_channel[i];
        double rate = 0.0;
        // Largest qualifying rate; the set is sorted ascending.
        auto it = std::upper_bound(out.rate_set.begin(), out.rate_set.end(), ng);
        if (it != out.rate_set.begin()) rate = *(it - 1);
        out.per_channel_rate[i] = rate;
        total += 2.0 * symbol_rate_hz * bits_per_channel[i] * rate;
    }
    out.total_throughput_bps = total;
    return out;
}

double throughput(const RateAssignment& assignment, const std::vector<int>& bits_per_channel,
                  double symbol_rate_hz) {
    if (assignment.per_channel_rate.size() != bits_per_channel.size())
        throw ConfigError("throughput: length mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < bits_per_channel.size(); ++i)
        total += 2.0 * symbol_rate_hz * bits_per_channel[i] * assignment.per_channel_rate[i];
    return total;
}

} // namespace gnlink
