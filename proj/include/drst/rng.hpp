#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "drst/errors.hpp"

namespace drst {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random source backed by mt19937_64. Every sampling helper
// consumes exactly one engine step, so draw sequences are countable and
// reproducible across runs and platforms.
//
// Substreams: stream k of seed s is seeded with splitmix64(s + k * golden),
// i.e. successive outputs of a splitmix64 walk starting at s.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(seed + stream * 0x9e3779b97f4a7c15ULL)) {}

  // Uniform in [0, 1), 53-bit resolution, one draw.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi], one draw.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const double span = static_cast<double>(hi - lo + 1);
    const auto k = static_cast<std::int64_t>(uniform01() * span);
    return lo + std::min(k, hi - lo);
  }

  // Exponential variate with the given mean, by inversion, one draw.
  double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

  // Index into weights with probability proportional to weight, one draw.
  // Total weight must be positive.
  std::size_t pick_weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0))
      throw Error(ErrorCategory::ValidationError,
                  "pick_weighted requires a positive total weight");
    const double r = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    // r landed on the accumulated rounding tail; take the last positive weight.
    for (std::size_t i = weights.size(); i-- > 0;)
      if (weights[i] > 0.0) return i;
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace drst
