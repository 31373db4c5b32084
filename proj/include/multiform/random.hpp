#pragma once

// Seeded randomness. Only the raw mt19937_64 stream is used: it is fully
// specified by the standard, while the std distributions are not, so draws
// are reproducible across compilers and platforms.

#include <cstdint>
#include <random>

namespace multiform {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection sampling; bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound; rejecting below it leaves a multiple of bound outcomes.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

// Independent stream for trial `index` of an experiment with base `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace multiform
