#pragma once

#include <cstdint>

namespace pab {

// SplitMix64, used as a counter-based generator: draw k of a stream seeded
// with s is mix(s + (k+1) * GAMMA), so any position can be replayed without
// generating the prefix.  This is the PRNG contract the file formats and
// campaign replays rely on; see README for the exact constants.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits of precision.
    double next_unit() { return (double)(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n); n must be positive.  Multiply-shift keeps the
    // mapping deterministic across platforms.
    int next_below(int n) {
        return (int)(((unsigned __int128)next() * (unsigned __int128)(std::uint64_t)n) >> 64);
    }

    bool next_bool(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

// Stable per-instance seed derivation for campaigns: instance i of a campaign
// seeded with s runs on stream mix_seed(s, i).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return rng.next();
}

} // namespace pab
