#pragma once

#include <cstdint>

namespace tessera {

// Tiny deterministic generator (splitmix64 update). Used instead of the
// standard distributions so that seeded outputs are identical across
// platforms and standard library versions.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n is tiny here, so modulo bias is negligible.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace tessera
