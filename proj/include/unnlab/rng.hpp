#ifndef UNNLAB_RNG_HPP
#define UNNLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace unnlab {

// All randomness in this library flows through std::mt19937_64 seeded
// explicitly, with raw 64-bit draws mapped to [0, 1) by the top 53 bits.
// Both steps are fixed by this repo's docs so any implementation of the
// same generator reproduces identical streams.

// splitmix64 finalizer; stateless 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed-splitting rule for Monte Carlo trials: fold the row parameters and
// the trial index into the master seed one at a time.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t n,
                                std::uint64_t m, std::uint64_t trial_index) {
    std::uint64_t h = master_seed;
    h = mix64(h ^ n);
    h = mix64(h ^ m);
    h = mix64(h ^ trial_index);
    return h;
}

// Uniform double in [0, 1): top 53 bits of one draw. Used instead of
// std::uniform_real_distribution, whose output is not portable across
// standard library implementations.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace unnlab

#endif
