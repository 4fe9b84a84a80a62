#ifndef QCC_RNG_HPP
#define QCC_RNG_HPP

#include <cstdint>

namespace qcc {

// SplitMix64 (Steele/Lea/Flood).  Splittable: independent streams are
// obtained by hashing (seed, stream-id) into a fresh state, so a
// representation sampled from (seed, arrow) is reproducible bit for bit.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t s) : state(s) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, m); m must be positive
    uint64_t next_below(uint64_t m) {
        // rejection sampling keeps the distribution exactly uniform
        uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % m;
    }
};

// derive a stream seed for (seed, id); used per arrow / per trial
inline uint64_t mix_seed(uint64_t seed, uint64_t id) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (id + 1)));
    return g.next();
}

} // namespace qcc

#endif
