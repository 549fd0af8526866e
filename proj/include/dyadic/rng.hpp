#pragma once

#include <cstdint>

namespace dyadic {

// Counter-based pseudo randomness: every value is a pure function of
// (seed, counter), so traces are reproducible under any execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed) ^ counter);
}

// Uniform draw in [0, 1) from 53 random bits.
inline double unit_uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix_key(seed, counter) >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::uint64_t seed, std::uint64_t counter, double lo, double hi) {
  return lo + unit_uniform(seed, counter) * (hi - lo);
}

}  // namespace dyadic
