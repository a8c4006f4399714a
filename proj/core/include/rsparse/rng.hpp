#pragma once

#include <cstdint>
#include <random>

#include "rsparse/types.hpp"

namespace rsparse {

/// Seeded generator with fully specified transforms on top of mt19937_64,
/// so streams are bitwise reproducible regardless of the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller (pairs are cached).
  double normal();
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  Vector normal_vector(Index d);
  /// `count` distinct indices from [0, n), in draw order.
  IndexList sample_without_replacement(Index n, Index count);
  /// Random +1/-1.
  double sign();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Mixes a base seed with stream identifiers (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace rsparse
