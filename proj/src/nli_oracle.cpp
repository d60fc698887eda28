#include "gnlink/nli_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gnlink/error.hpp"
#include "gnlink/parallel.hpp"
#include "gnlink/rng.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

namespace {

struct SlotTable {
    std::vector<double> lo;  // slot low edges, offset frequency
    std::vector<double> hi;

    // Channel slot containing f, or -1.
    int find(double f) const {
        auto it = std::upper_bound(lo.begin(), lo.end(), f);
        if (it == lo.begin()) return -1;
        int k = static_cast<int>(it - lo.begin()) - 1;
        if (f > hi[k]) return -1;
        return k;
    }
};

} // namespace

OracleResult eta_oracle(const ChannelPlan& plan, const PowerVector& launch,
                        const FiberSpec& fiber, const PowerProfile& profile,
                        std::size_t channel_index, const OracleQuadrature& quad) {
    const std::size_t n = plan.size();
    validate_power_vector(launch, n, "eta_oracle");
    if (channel_index >= n) throw ConfigError("eta_oracle: channel index out of range");
    if (quad.n_mc < 1000)
        throw ConfigError("eta_oracle: n_mc below the 10^3 precision floor");
    if (profile.n_channels() != n)
        throw ConfigError("eta_oracle: profile does not cover the plan's channels");
    if (profile.n_z() < 2) throw ConfigError("eta_oracle: profile needs at least two z samples");

    const auto disp = dispersion_coefficients(fiber.dispersion_d, fiber.dispersion_slope_s,
                                              fiber.ref_wavelength_m);
    const double beta2 = disp.beta2;
    const double beta3 = disp.beta3;
    const double pi = constants::pi;
    const std::size_t nz = profile.n_z();
    const std::vector<double>& z = profile.z_samples();

    // log power ratio per (z, channel); the field product in the link
    // function is referred through the receive channel's own profile so the
    // no-ISRS limit reduces to the standard e^{-alpha z} GN kernel.
    std::vector<double> log_ratio(nz * n);
    for (std::size_t zi = 0; zi < nz; ++zi) {
        const double* row = profile.row(zi);
        const double* row0 = profile.row(0);
        for (std::size_t ch = 0; ch < n; ++ch)
            log_ratio[zi * n + ch] = std::log(row[ch] / row0[ch]);
    }
    std::vector<double> w_z(nz);
    for (std::size_t zi = 0; zi < nz; ++zi) {
        double prev = zi == 0 ? z[0] : z[zi - 1];
        double next = zi + 1 == nz ? z[nz - 1] : z[zi + 1];
        w_z[zi] = 0.5 * (next - prev);
    }

    SlotTable slots;
    slots.lo.resize(n);
    slots.hi.resize(n);
    std::vector<double> psd(n);
    double b_occupied = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Channel& ch = plan.at(k);
        slots.lo[k] = ch.offset_frequency_hz - 0.5 * ch.bandwidth_hz;
        slots.hi[k] = ch.offset_frequency_hz + 0.5 * ch.bandwidth_hz;
        psd[k] = launch[k] / ch.bandwidth_hz;
        b_occupied += ch.bandwidth_hz;
    }
    const double f = plan.at(channel_index).offset_frequency_hz;

    // Fixed-size sample blocks keep the reduction order independent of the
    // worker count.
    const std::size_t block = 8192;
    const std::size_t n_blocks = (quad.n_mc + block - 1) / block;
    std::vector<double> block_sum(n_blocks, 0.0);
    std::vector<double> block_sum2(n_blocks, 0.0);

    parallel_for(n_blocks, [&](std::size_t b) {
        double acc = 0.0, acc2 = 0.0;
        const std::size_t begin = b * block;
        const std::size_t end = std::min(quad.n_mc, begin + block);
        for (std::size_t s = begin; s < end; ++s) {
            SplitMix64 rng(quad.seed, s);
            std::size_t k1 = rng.uniform_index(n);
            std::size_t k2 = rng.uniform_index(n);
            double f1 = slots.lo[k1] + (slots.hi[k1] - slots.lo[k1]) * rng.uniform();
            double f2 = slots.lo[k2] + (slots.hi[k2] - slots.lo[k2]) * rng.uniform();
            double f3 = f1 + f2 - f;
            int k3 = slots.find(f3);
            if (k3 < 0) continue;

            double phi = -4.0 * pi * pi * (f1 - f) * (f2 - f) * (beta2 + pi * beta3 * (f1 + f2));
            const double* lr1 = log_ratio.data() + k1;
            const double* lr2 = log_ratio.data() + k2;
            const double* lr3 = log_ratio.data() + static_cast<std::size_t>(k3);
            const double* lrf = log_ratio.data() + channel_index;
            std::complex<double> zeta(0.0, 0.0);
            for (std::size_t zi = 0; zi < nz; ++zi) {
                const std::size_t off = zi * n;
                double amp = std::exp(0.5 * (lr1[off] + lr2[off] + lr3[off] - lrf[off]));
                double ph = phi * z[zi];
                zeta += w_z[zi] * std::complex<double>(amp * std::cos(ph), amp * std::sin(ph));
            }
            double v = psd[k1] * psd[k2] * psd[static_cast<std::size_t>(k3)] * std::norm(zeta);
            acc += v;
            acc2 += v * v;
        }
        block_sum[b] = acc;
        block_sum2[b] = acc2;
    });

    double sum = 0.0, sum2 = 0.0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
        sum += block_sum[b];
        sum2 += block_sum2[b];
    }
    const double n_mc = static_cast<double>(quad.n_mc);
    const double mean = sum / n_mc;
    const double var = std::max(0.0, sum2 / n_mc - mean * mean);
    const double se_mean = std::sqrt(var / n_mc);

    const double gamma2 = fiber.gamma * fiber.gamma;
    const double scale = (16.0 / 27.0) * gamma2 * b_occupied * b_occupied;
    const double b_i = plan.at(channel_index).bandwidth_hz;
    const double p_i = launch[channel_index];
    const double to_eta = scale * b_i / (p_i * p_i * p_i);

    OracleResult out;
    out.eta = to_eta * mean;
    out.std_error = to_eta * se_mean;
    return out;
}

} // namespace gnlink
