#pragma once

// Seeded synthetic data and the three adversaries used by the benchmarks.
// Every function is a pure function of its arguments and seed.

#include <cstdint>
#include <vector>

#include "rsparse/types.hpp"

namespace rsparse {

enum class TruthKind { SparseMean, SpikedPca };

struct GroundTruth {
  TruthKind kind = TruthKind::SparseMean;
  Vector mu;       // k-sparse mean (zero for spiked data)
  Vector v;        // k-sparse unit spike (empty for mean data)
  double rho = 0.0;
  IndexList support;  // ascending
};

struct CorruptedDataset {
  Matrix x;                       // d x n, one sample per column
  std::vector<bool> inlier_mask;  // false marks a replaced column
  double eps_actual = 0.0;        // outliers / n
  GroundTruth truth;
  std::uint64_t seed = 0;

  Index dim() const noexcept { return x.rows(); }
  Index size() const noexcept { return x.cols(); }
  Index outlier_count() const;
};

struct MeanSpec {
  double value = 1.0;  // entry placed on each support coordinate
  Vector explicit_mu;  // overrides the random support when non-empty
};

/// Columns N(mu, I) with mu = value on a seeded random k-support.
CorruptedDataset gen_sparse_mean_data(Index d, Index k, Index n, std::uint64_t seed, const MeanSpec& spec = {});

/// Columns g + sqrt(rho) z v with g ~ N(0, I), z ~ N(0, 1); v has +/- 1/sqrt(k)
/// on a seeded random k-support.
CorruptedDataset gen_spiked_data(Index d, Index k, Index n, double rho, std::uint64_t seed);

/// floor(eps n), with a small guard against representation error.
Index outlier_count_for(double eps, Index n);

/// A seeded size-k set, disjoint from `avoid` when d leaves room for it.
IndexList hiding_set(Index d, Index k, const IndexList& avoid, std::uint64_t seed);

/// Replaces floor(eps n) random columns: ceil(m/2) from N(1_S, I), the rest
/// from N(0, 2I - I_S), with S = hiding_set(d, k, truth support).
CorruptedDataset corrupt_linear_hiding(const CorruptedDataset& data, double eps, std::uint64_t seed);

enum class FlipMode {
  Reflect,  // X - 2 <v, X - c> v
  Resample, // c + |<v, X - c>| v + fresh Gaussian orthogonal to v
};

/// Direction attacked by tail flipping: the spike for PCA data, otherwise a
/// seeded +/- 1/sqrt(k) vector on the truth support.
Vector tail_flip_direction(const CorruptedDataset& data, std::uint64_t seed);

/// Moves the floor(eps n) columns with the smallest <v, X_i - c> to the +v side,
/// where c is the clean centre (the true mean, zero for spiked data).
CorruptedDataset corrupt_tail_flipping(const CorruptedDataset& data, double eps, std::uint64_t seed,
                                       FlipMode mode = FlipMode::Reflect);

inline constexpr double kDefaultBias = 2.0;

/// Adds bias to every coordinate of floor(eps n) random columns.
CorruptedDataset corrupt_constant_bias(const CorruptedDataset& data, double eps, double bias, std::uint64_t seed);

}  // namespace rsparse
