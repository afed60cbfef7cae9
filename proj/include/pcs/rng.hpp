#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace pcs::rng {

// Counter-based generation: every random scalar is a pure function of a
// 64-bit stream key and a 64-bit counter, so output never depends on how
// work is split across threads.
//
// Stream derivation rule (used throughout the toolkit):
//   key = derive(master_seed, {purpose_tag, K, trial, ...})
// and element i of the stream is gaussian(key, i) / uniform01(key, i).

/// SplitMix64 output function (Steele, Lea & Flood).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a sequence of tags into a master seed, one mix round per tag.
constexpr std::uint64_t derive(std::uint64_t master, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t k = mix64(master ^ 0x243f6a8885a308d3ULL);
  for (std::uint64_t t : tags) {
    k = mix64(k ^ mix64(t ^ 0x13198a2e03707344ULL));
  }
  return k;
}

/// Uniform in [0, 1), 53 mantissa bits.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
  return static_cast<double>(mix64(key ^ mix64(counter)) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (cosine branch); consumes counters 2c and 2c+1.
inline double gaussian(std::uint64_t key, std::uint64_t counter) {
  const double u1 = 1.0 - uniform01(key, 2 * counter);  // in (0, 1]
  const double u2 = uniform01(key, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Uniform integer in [0, bound). bound must be >= 1.
inline std::uint64_t uniform_below(std::uint64_t key, std::uint64_t counter, std::uint64_t bound) {
  const double u = uniform01(key, counter);
  auto v = static_cast<std::uint64_t>(u * static_cast<double>(bound));
  return v >= bound ? bound - 1 : v;
}

}  // namespace pcs::rng
