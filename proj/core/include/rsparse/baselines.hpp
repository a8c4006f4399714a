#pragma once

#include <cstdint>
#include <vector>

#include "rsparse/spectral.hpp"
#include "rsparse/synthetic.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

/// Mean of the columns flagged as inliers.
Vector baseline_oracle(const CorruptedDataset& data);

/// Dominant eigenvector of the inliers' second moment minus I.
Vector baseline_oracle_pca(const CorruptedDataset& data, const EigenConfig& eigen = {});

/// Mean of the samples within radius_factor * sqrt(d) of the coordinate-wise median.
Vector baseline_naive_prune(const Matrix& x, double radius_factor = 4.0);

struct RansacOptions {
  int rounds = 50;
  double ball_constant = 2.0;  // inlier ball radius is ball_constant * sqrt(d)
  std::uint64_t seed = 0;
};

/// Best of `rounds` half-sample means, scored by how many samples fall in the
/// ball around each candidate. Ties keep the earlier round.
Vector baseline_ransac(const Matrix& x, const RansacOptions& options = {});

Vector sample_mean(const Matrix& x);

}  // namespace rsparse
