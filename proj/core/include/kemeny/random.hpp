#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace kemeny {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for a sub-stream: derive_seed(master, a, b) = mix(mix(master ^ mix(a)) ^ mix(b + 1)).
/// Distinct (a, b) under one master give unrelated mt19937_64 streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0) noexcept {
  return mix64(mix64(master ^ mix64(a)) ^ mix64(b + 1));
}

// The standard distributions are implementation-defined; these are not, so
// traces stay byte-identical across standard libraries.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace kemeny
