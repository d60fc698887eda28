#ifndef GNLINK_RNG_HPP
#define GNLINK_RNG_HPP

#include <cstdint>

// Splittable counter-based generator (splitmix64). Each Monte-Carlo sample
// derives its own stream from (seed, index), so results do not depend on how
// samples are distributed over worker threads.

namespace gnlink {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {
        next();
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return next() % n; }
};

} // namespace gnlink

#endif
