#pragma once

// Robust sparse PCA: minimise the convex objective f(w) = ||M_w - I||_{F,2k^2}
// over the capped simplex, then read the spike off the top eigenvector of the
// symmetrised k^2 largest entries of M_w - I.

#include <cstdint>
#include <vector>

#include "rsparse/certificate.hpp"
#include "rsparse/pgd.hpp"
#include "rsparse/simplex.hpp"
#include "rsparse/sparse_mean.hpp"
#include "rsparse/spectral.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

struct SparsePcaConfig {
  Index k = 1;
  double eps = 0.05;
  int iterations = 2000;
  double step_scale = 0.0;
  double tolerance = 1e-8;
  int patience = 200;
  std::uint64_t seed = 0;
  double eps_guard = 1.0 / 3.0;  // upper bound on eps accepted by validate()

  void validate() const;
  PgdOptions pgd_options() const;
  EigenConfig eigen_config() const;
};

struct SparsePcaResult {
  Vector u;  // unit vector
  WeightVector w_final;
  std::vector<TracePoint> objective_trace;
  double best_objective = 0.0;
  CellList extraction_support;  // the k^2 cells used for the eigen step
  double step = 0.0;
  bool stopped_early = false;
};

/// f(w) = ||M_w - I||_{F,2k^2}; Y = (M_w - I)_Q / f on the 2k^2 support.
ObjectiveWithCertificate objective_sparse_pca(const Matrix& x, const WeightVector& w, Index k);

/// F(w, Y) = Y . (X diag(w) X^T - I), linear in w.
double linearized_sparse_pca(const Matrix& x, const Vector& w, const SubgradientCertificate& y);

/// Gradient of F(., Y): diag(X^T Y X). Independent of w.
Vector subgradient_sparse_pca(const Matrix& x, const SubgradientCertificate& y);

PgdResult pgd_sparse_pca(const Matrix& x, const SparsePcaConfig& cfg);

struct SpikeEstimate {
  Vector u;
  CellList support;
  double eigenvalue = 0.0;
};

/// Q = k^2 largest-magnitude entries of A; u = magnitude-dominant unit
/// eigenvector of A_Q + A_Q^T. Throws Degenerate when A_Q vanishes.
SpikeEstimate extract_spike(const Matrix& a, Index k, const EigenConfig& eigen = {});

SparsePcaResult estimate_sparse_pca(const Matrix& x, const SparsePcaConfig& cfg);

}  // namespace rsparse
