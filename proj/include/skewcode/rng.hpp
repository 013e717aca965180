#pragma once

#include <cstdint>
#include <random>

#include "skewcode/channel.hpp"
#include "skewcode/words.hpp"

namespace skewcode {

// Uniform integer in [0, n) by rejection from the raw 64-bit stream.
// std::uniform_int_distribution is implementation-defined, so seeded runs
// would not reproduce across standard libraries; this sampler does.
inline std::uint64_t bounded_u64(std::mt19937_64& gen, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) return r % n;
    }
}

// Uniform message index for a codebook with `total` codewords.
inline std::uint64_t random_message(std::mt19937_64& gen, std::uint64_t total) {
    return bounded_u64(gen, total);
}

// Admissible skew pattern drawn uniformly over the per-slot deviation sets.
inline SkewPattern random_skew(std::mt19937_64& gen, int w, SkewMode mode,
                               TernaryBoundary boundary = TernaryBoundary::Relaxed) {
    SkewPattern pattern;
    pattern.sigmas.reserve(static_cast<std::size_t>(w));
    for (int k = 1; k <= w; ++k) {
        const std::vector<int> allowed = allowed_deviations(k, w, mode, boundary);
        pattern.sigmas.push_back(allowed[bounded_u64(gen, allowed.size())]);
    }
    return pattern;
}

}  // namespace skewcode
