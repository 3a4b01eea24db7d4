#pragma once

#include <cstdint>

#include "lg3/rational.hpp"

namespace lg3 {

/// Deterministic 64-bit generator (splitmix64). Used for every "random"
/// choice in the library so that a run is reproducible from one seed across
/// platforms; no std:: distributions, their outputs are not portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n > 0. Rejection-free multiply-shift is fine here;
    /// the bias for small n is far below anything a test could observe, and
    /// it keeps the stream identical everywhere.
    std::uint64_t below(std::uint64_t n) {
        return (std::uint64_t)(((__uint128_t)next_u64() * n) >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + (long)below((std::uint64_t)(hi - lo + 1));
    }

    /// Small random rational with numerator in [-num_max, num_max] and
    /// denominator in [1, den_max].
    Rat rat(long num_max = 9, long den_max = 1) {
        return Rat(range(-num_max, num_max), range(1, den_max));
    }

    /// Nonzero variant of rat().
    Rat rat_nonzero(long num_max = 9, long den_max = 1) {
        for (;;) {
            Rat r = rat(num_max, den_max);
            if (r != 0) return r;
        }
    }

    /// Derive an independent child stream (for parallel or per-item use).
    Rng split() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

  private:
    std::uint64_t state_;
};

}  // namespace lg3
