#pragma once

// Deterministic pseudo-random draws for basis generation.
//
// Stream s of master seed S is SplitMix64 with initial state
//     state = S + (s + 1) * 0x9E3779B97F4A7C15,
// and uniform doubles in [0,1) take the top 53 bits of each output.
// Everything is integer + one multiply-add per draw, so the sequence is
// bit-identical on every platform.  Reference outputs are pinned in the
// test suite.

#include <cstdint>

namespace trion {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    // Stream `stream` of master seed `seed`.
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi] (closed on the left, effectively half-open).
    double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

  private:
    std::uint64_t state_;
};

} // namespace trion
