#pragma once

#include <cstdint>

namespace parhiggs {

/// Deterministic PRNG (splitmix64 seeded xoshiro256**).
/// Every randomized routine takes one of these explicitly: identical seeds
/// give identical results on every platform, which the report provenance
/// relies on.
class Prng {
  public:
    explicit Prng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& si : s_) {
            // splitmix64 stream
            x += 0x9E3779B97F4A7C15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            si = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform value in [0, bound). bound > 0.
    uint64_t below(uint64_t bound) {
        // rejection sampling keeps the distribution exactly uniform
        uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % bound);
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace parhiggs
