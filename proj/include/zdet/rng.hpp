#pragma once
// Deterministic 64-bit generator used for every random draw in the library.
//
// SplitMix64 (Steele/Lea/Vigna). State s; each call does
//     s += 0x9E3779B97F4A7C15
//     z  = s
//     z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
// The recurrence is the whole contract: any implementation of it, in any
// language, reproduces the same matrices and primes from the same seed.

#include <cstdint>

namespace zdet {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, range), range >= 1. Rejection below
    // 2^64 mod range keeps the distribution exact.
    std::uint64_t next_below(std::uint64_t range) {
        const std::uint64_t threshold = (0 - range) % range;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % range;
        }
    }

    // Uniform draw from [-bound, bound], bound <= 2^62.
    std::int64_t next_symmetric(std::uint64_t bound) {
        const std::uint64_t r = next_below(2 * bound + 1);
        return r >= bound ? static_cast<std::int64_t>(r - bound)
                          : -static_cast<std::int64_t>(bound - r);
    }

private:
    std::uint64_t state_;
};

} // namespace zdet
