#pragma once

#include <cstdint>

namespace cylrig {

// Deterministic seeded generator (splitmix64). All randomized routines take
// one of these explicitly -- there is no global RNG state -- and the stream
// is identical on every platform, so seeded corpora can be frozen in tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ULL / bound);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform signed integer in [-mag, mag].
    long long next_signed(std::uint64_t mag) {
        return static_cast<long long>(next_below(2 * mag + 1)) -
               static_cast<long long>(mag);
    }

    bool next_bool() { return (next_u64() & 1) != 0; }

    // Derive an independent stream; deterministic in (seed, salt).
    Rng fork(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }

private:
    std::uint64_t state_;
};

} // namespace cylrig
