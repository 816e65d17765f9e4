#pragma once

#include <cstdint>

namespace pwt {

/// splitmix64: tiny deterministic generator used for seeded sampling.
/// Self-contained so streams are identical across platforms and toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0; rejection-free modulo bias is negligible for
    // the small n used here, but use the unbiased multiply-shift anyway.
    std::uint64_t below(std::uint64_t n) {
        // Lemire's method without the rejection loop refinement: acceptable
        // bias ~ n / 2^64 for our n <= 2^32.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::uint64_t state_;
};

}  // namespace pwt
