#pragma once

#include <cstdint>
#include <random>

#include "hypersteiner/rational.hpp"

namespace hypersteiner {

/// Seeded generator with hand-rolled bounded draws. std::uniform_int_distribution
/// is not pinned across standard library versions; reports must be
/// byte-reproducible for a given seed, so we do the reduction ourselves.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, n), n >= 1, by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint32_t num, uint32_t den) { return below(den) < num; }

    /// Rational p/q with p in [lo_num, hi_num], q in [1, max_den].
    Rat rat(long lo_num, long hi_num, long max_den) {
        long q = range(1, max_den);
        long p = range(lo_num, hi_num);
        return Rat(p, q);
    }

    /// Derives an independent stream; used to keep per-instance draws
    /// insensitive to evaluation order elsewhere.
    Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hypersteiner
