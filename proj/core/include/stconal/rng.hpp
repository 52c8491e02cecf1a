#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "stconal/error.hpp"

namespace stconal {

// All randomness flows through mt19937_64 plus the helpers below. The raw
// engine is fully specified by the standard; std::*_distribution is not, so
// the conversions to doubles, bounded integers, gaussians and shuffles are
// done by hand to keep every stream bit-reproducible across platforms.
using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from (base, stream, index). Every seed
// used anywhere in the library is derived this way, so tests can re-derive
// any stream from the top-level seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                    std::uint64_t index = 0) noexcept {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(base + kGolden);
  h = mix64(h ^ (stream + kGolden));
  h = mix64(h ^ (index + kGolden));
  return h;
}

// Stream tags; part of the reproducibility contract.
namespace streams {
inline constexpr std::uint64_t kEpochShuffle = 1;
inline constexpr std::uint64_t kModelInit = 2;
inline constexpr std::uint64_t kPoolInit = 3;
inline constexpr std::uint64_t kRoundTrain = 4;
inline constexpr std::uint64_t kCandidateSubset = 5;
inline constexpr std::uint64_t kRandomAcquire = 6;
inline constexpr std::uint64_t kCriterion = 7;
inline constexpr std::uint64_t kBlobCenters = 8;
inline constexpr std::uint64_t kBlobSamples = 9;
inline constexpr std::uint64_t kSubsample = 10;
inline constexpr std::uint64_t kSplit = 11;
}  // namespace streams

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) {
    throw InvalidInputError("uniform_below: bound must be positive");
  }
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = rng();
  while (x < threshold) {
    x = rng();
  }
  return x % n;
}

// Standard normal via Box-Muller.
inline double normal(Rng& rng) {
  constexpr double kTwoPi = 6.283185307179586476925287;
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;          // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

// Fisher-Yates.
template <typename T>
void shuffle_in_place(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

// First `count` entries of a forward partial Fisher-Yates pass: a uniform
// draw without replacement. count > size() returns a full permutation.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> values,
                                          std::size_t count, Rng& rng) {
  count = std::min(count, values.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, values.size() - i);
    std::swap(values[i], values[j]);
  }
  values.resize(count);
  return values;
}

}  // namespace stconal
