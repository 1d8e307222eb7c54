#pragma once

#include <cstdint>

namespace dim2 {

// splitmix64: tiny, seedable, identical output on every platform.
// std::uniform_int_distribution is implementation-defined, which would make
// seeded CLI output differ across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Rejection-free modulo is fine here:
    // bounds are tiny relative to 2^64, bias is negligible and, more to the
    // point, deterministic.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace dim2
