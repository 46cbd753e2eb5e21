#pragma once

#include <cstdint>

namespace smlg {

// splitmix64: tiny deterministic generator with a splittable seed space.
// Reports that record a seed also record this generator name so runs can be
// reproduced byte-for-byte on any platform.
inline constexpr const char* kRngName = "splitmix64";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound 0 yields 0.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0)
            return 0;
        // Rejection sampling over the top multiple of bound.
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v = next();
        while (v >= limit)
            v = next();
        return v % bound;
    }

    // Uniform in [0, 1), 53 bits of mantissa.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

// Independent child seed for a numbered stream (e.g. one per trial).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    return rng.next();
}

} // namespace smlg
