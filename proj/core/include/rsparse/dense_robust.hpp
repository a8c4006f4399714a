#pragma once

// Non-sparse variants on the same PGD engine: robust mean via the spectral
// norm ||Sigma_w - I||_2, and robust PCA via the Ky Fan 2-norm ||M_w - I||_KF2.

#include <cstdint>
#include <vector>

#include "rsparse/pgd.hpp"
#include "rsparse/simplex.hpp"
#include "rsparse/sparse_mean.hpp"
#include "rsparse/spectral.hpp"

namespace rsparse {

struct DenseConfig {
  double eps = 0.1;
  int iterations = 2000;
  double step_scale = 0.0;
  double tolerance = 1e-8;
  int patience = 200;
  std::uint64_t seed = 0;

  void validate() const;
  PgdOptions pgd_options() const;
  EigenConfig eigen_config() const;
};

struct DenseObjective {
  double value = 0.0;
  SubgradientCertificate y;
  bool tie = false;  // |lambda_1| == |lambda_2| to 1e-12 relative (mean objective only)
};

/// f = ||Sigma_w - I||_2 with Y = sign(lambda) u u^T.
DenseObjective objective_dense_mean(const Matrix& x, const WeightVector& w, const EigenConfig& eigen = {});

/// f = |lambda_1| + |lambda_2| of M_w - I with Y = s_1 u_1 u_1^T + s_2 u_2 u_2^T.
DenseObjective objective_dense_pca(const Matrix& x, const WeightVector& w, const EigenConfig& eigen = {});

struct DenseMeanResult {
  Vector mu_hat;
  WeightVector w_final;
  std::vector<TracePoint> objective_trace;
  double best_objective = 0.0;
  int tied_iterations = 0;
};

struct DensePcaResult {
  Vector u;
  WeightVector w_final;
  std::vector<TracePoint> objective_trace;
  double best_objective = 0.0;
};

DenseMeanResult estimate_dense_mean(const Matrix& x, const DenseConfig& cfg);
DensePcaResult estimate_dense_pca(const Matrix& x, const DenseConfig& cfg);

}  // namespace rsparse
