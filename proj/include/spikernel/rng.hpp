#pragma once

// Deterministic RNG used everywhere. All randomness flows from one 64-bit
// seed through named substreams, so results are identical across runs,
// platforms, and worker counts.

#include <cstdint>

namespace spikernel {

// splitmix64 finalizer; full-avalanche 64-bit mix.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Substream ids. Each (seed, stream, index) triple names one generator.
enum class Stream : uint64_t {
    genotype = 1,  // per-iteration genotype draws
    weights = 2,   // per-candidate weight init
    encode = 3,    // rate coding (one stream per search/score run)
    batch = 4,     // dataset sample selection
    synth = 5,     // synthetic image pixels
};

inline uint64_t derive_seed(uint64_t seed, Stream stream, uint64_t index) {
    uint64_t z = mix64(seed ^ (0xd1342543de82ef95ULL * (static_cast<uint64_t>(stream) + 1)));
    return mix64(z ^ (0xaf251af3b0f025b5ULL * (index + 1)));
}

// splitmix64 generator. Period 2^64, passes standard statistical batteries;
// more than enough for sampling ops, weights and Bernoulli spikes.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n). Lemire multiply-shift with rejection.
    uint64_t next_below(uint64_t n) {
        uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        uint64_t lo = static_cast<uint64_t>(m);
        if (lo < n) {
            uint64_t floor = (0 - n) % n;
            while (lo < floor) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1), 53 mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform float in [-bound, bound].
    float next_symmetric(float bound) {
        return static_cast<float>((2.0 * next_double() - 1.0) * bound);
    }

private:
    uint64_t state_;
};

}  // namespace spikernel
