#ifndef GNLINK_GMI_HPP
#define GNLINK_GMI_HPP

#include <cstdint>
#include <vector>

#include "gnlink/constellation.hpp"

// Bit-metric mutual information over the complex AWGN channel with noise
// variance 1/snr per 2D symbol.

namespace gnlink {

struct GmiResult {
    double bits = 0.0;       // bit/2D-symbol
    double std_error = 0.0;  // 0 for the deterministic quadrature
};

struct GmiMethod {
    enum class Kind { GaussHermite, MonteCarlo } kind = Kind::GaussHermite;
    int order = 10;            // GaussHermite tensor order
    std::size_t n = 100000;    // MonteCarlo sample count
    std::uint64_t seed = 1;

    static GmiMethod gauss_hermite(int order = 10) {
        GmiMethod m;
        m.kind = Kind::GaussHermite;
        m.order = order;
        return m;
    }
    static GmiMethod monte_carlo(std::size_t n, std::uint64_t seed) {
        GmiMethod m;
        m.kind = Kind::MonteCarlo;
        m.n = n;
        m.seed = seed;
        return m;
    }
};

GmiResult gmi(const Constellation& c, double snr_linear, const GmiMethod& method);

/// 1 - (m - gmi)/m.
double ngmi(double gmi_bits, int bits_per_symbol);

/// Physicists' Gauss-Hermite nodes and weights for \int e^{-t^2} f(t) dt.
struct HermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
HermiteRule hermite_rule(int order);

/// GMI tabulated against SNR for fast repeated lookups inside optimization
/// loops; linear interpolation on a fixed dB grid.
class GmiTable {
public:
    GmiTable() = default;
    GmiTable(const Constellation& c, double snr_db_min, double snr_db_max, double step_db,
             int quad_order = 10);

    double lookup_db(double snr_db) const;
    bool empty() const { return values_.empty(); }

private:
    double min_db_ = 0.0;
    double step_db_ = 0.0;
    std::vector<double> values_;
};

} // namespace gnlink

#endif
