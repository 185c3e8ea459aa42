#pragma once

#include <array>
#include <cstdint>

namespace bwalk {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic pseudo-random generator (xoshiro256**, seeded through
/// splitmix64). Identical seeds produce identical streams within one
/// build; no cross-implementation bit-exactness is promised.
class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); unbiased via rejection.
    uint64_t next_below(uint64_t bound) {
        const uint64_t threshold = (-bound) % bound;
        uint64_t r;
        do {
            r = next_u64();
        } while (r < threshold);
        return r % bound;
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    /// Independent child stream; children with distinct ids are decorrelated
    /// from each other and from the parent regardless of draw order.
    Rng derive(uint64_t stream_id) const {
        uint64_t sm = seed_ ^ (0xa0761d6478bd642fULL + stream_id * 0xe7037ed1a0b428dbULL);
        splitmix64(sm);
        return Rng(splitmix64(sm));
    }

    uint64_t seed() const { return seed_; }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t seed_;
    std::array<uint64_t, 4> s_;
};

} // namespace bwalk
