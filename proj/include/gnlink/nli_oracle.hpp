#ifndef GNLINK_NLI_ORACLE_HPP
#define GNLINK_NLI_ORACLE_HPP

#include <cstdint>
#include <cstddef>

#include "gnlink/channel_plan.hpp"
#include "gnlink/link.hpp"
#include "gnlink/raman.hpp"

// Numerical reference for the closed form: the GN-model NLI integral
//
//   G_NLI(f) = (16/27) gamma^2 \iint G(f1) G(f2) G(f1+f2-f) |zeta(f1,f2,f)|^2 df1 df2
//
// with G the rectangular launch PSD and zeta the span link function built
// from a sampled power profile. The (f1, f2) integral is seeded uniform
// Monte-Carlo over the occupied spectrum; the z integral is a trapezoidal
// rule on the profile's own grid. Deterministic for a fixed seed and
// independent of the worker count.

namespace gnlink {

struct OracleQuadrature {
    std::size_t n_mc = 1000000;
    std::uint64_t seed = 42;
};

struct OracleResult {
    double eta = 0.0;        // 1/W^2
    double std_error = 0.0;  // Monte-Carlo standard error of eta
};

OracleResult eta_oracle(const ChannelPlan& plan, const PowerVector& launch,
                        const FiberSpec& fiber, const PowerProfile& profile,
                        std::size_t channel_index, const OracleQuadrature& quad);

} // namespace gnlink

#endif
