#ifndef GNLINK_SHAPING_HPP
#define GNLINK_SHAPING_HPP

#include <cstdint>

#include "gnlink/constellation.hpp"

namespace gnlink {

struct ShapingOptions {
    int quad_order = 8;       // Gauss-Hermite order used during the search
    double step0 = 0.1;       // initial ascent step in normalized coordinates
    double fd_delta = 1e-4;   // finite-difference probe size
    int restarts = 3;         // independent jittered starts, best GMI wins
    double jitter = 0.05;     // initial jitter magnitude per restart
};

/// Geometric shaping: finite-difference gradient ascent on GMI at the target
/// SNR over the point coordinates, Gray square-QAM start, renormalized to
/// unit energy each step, step decay 0.9 per 50 iterations. Returns the best
/// iterate; with iters = 0 this is the normalized square QAM itself.
Constellation shape_constellation(int bits_per_symbol, double target_snr_linear,
                                  std::uint64_t seed, int iters,
                                  const ShapingOptions& opts = ShapingOptions());

} // namespace gnlink

#endif
