#pragma once

#include <cstdint>

namespace splitkit {

// Deterministic 64-bit mix-and-advance generator (splitmix64). Every language
// binding of the tool must reproduce this exact stream; the constants are part
// of the published interface (see README).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix(state);
    }

    // residue in [0, m); the tiny modulo bias (< 2^-33 for m < 2^31) is accepted
    // and documented
    std::uint64_t below(std::uint64_t m) { return next() % m; }
};

// Child stream for task `index`, independent of scheduling order.
inline Rng derive_rng(std::uint64_t master_seed, std::uint64_t index) {
    return Rng(Rng::mix(master_seed ^ Rng::mix((index + 1) * 0x9E3779B97F4A7C15ULL)));
}

inline constexpr std::uint64_t kDefaultSeed = 1957;

}  // namespace splitkit
