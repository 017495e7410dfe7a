// rng.hpp — Counter-based 64-bit generator with derived substreams
//
// Replay contract: a substream is addressed by (seed, generation, role) and
// produces the same draws no matter how many threads the surrounding code
// uses. Scoring never consumes random numbers, so one breeding substream per
// generation is enough for exact replay.

#pragma once

#include <cstdint>

namespace sfq {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    // Derive an independent stream for (seed, generation, role).
    static CounterRng substream(std::uint64_t seed, std::uint64_t generation, std::uint64_t role) {
        std::uint64_t k = mix(seed + 0x9e3779b97f4a7c15ull);
        k = mix(k ^ (generation * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull));
        k = mix(k ^ (role * 0xd6e8feb86659fd93ull + 0x2545f4914f6cdd1dull));
        return CounterRng(k);
    }

    std::uint64_t next() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return mix(key_ ^ counter_);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). Modulo bias is negligible for the small bounds used here.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    // SplitMix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace sfq
