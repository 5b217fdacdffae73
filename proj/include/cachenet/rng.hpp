#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cachenet {

// mt19937_64 is fully specified by the standard, so streams are portable.
// All sampling below maps raw engine output to values directly instead of
// going through std::*_distribution, whose algorithms are unspecified.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream seed derived from (master, tag, index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
  return mix64(mix64(master ^ mix64(tag)) + index);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n), n >= 1 (rejection sampling).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

/// k distinct elements drawn uniformly from pool, in draw order.
template <typename T>
std::vector<T> sample_without_replacement(Rng& rng, std::vector<T> pool, std::size_t k) {
  std::vector<T> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
    const std::size_t idx = static_cast<std::size_t>(uniform_below(rng, pool.size()));
    out.push_back(pool[idx]);
    pool[idx] = pool.back();
    pool.pop_back();
  }
  return out;
}

}  // namespace cachenet
