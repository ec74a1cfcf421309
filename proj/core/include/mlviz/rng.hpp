#pragma once

#include <cstdint>

namespace mlviz {

// splitmix64 generator. All randomness in the engine goes through this so
// that a given seed produces bit-identical layouts on every platform; the
// standard-library distributions are not reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double nextDouble() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * nextDouble(); }

private:
    std::uint64_t state_;
};

}  // namespace mlviz
