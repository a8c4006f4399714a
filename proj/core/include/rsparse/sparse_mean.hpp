#pragma once

// Robust sparse mean estimation: minimise f(w) = ||Sigma_w - I||_{F,k,k} over
// the capped simplex with projected subgradient descent, then keep the k
// largest-magnitude coordinates of the weighted mean.

#include <cstdint>
#include <vector>

#include "rsparse/certificate.hpp"
#include "rsparse/pgd.hpp"
#include "rsparse/simplex.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

struct SparseMeanConfig {
  Index k = 1;
  double eps = 0.1;
  int iterations = 2000;
  double step_scale = 0.0;  // <= 0: adaptive_step_scale
  double tolerance = 1e-8;
  int patience = 200;
  std::uint64_t seed = 0;
  bool prune = false;
  double prune_radius_factor = 4.0;

  /// Throws InvalidConfig unless k >= 1, 0 < eps < 1/3, iterations >= 1.
  void validate() const;
  PgdOptions pgd_options() const;
};

struct SparseMeanResult {
  Vector mu_hat;              // at most k nonzeros
  WeightVector w_final;       // best iterate (over the kept samples when pruning)
  std::vector<TracePoint> objective_trace;
  double best_objective = 0.0;
  IndexList support;          // coordinates kept by the final truncation
  std::vector<bool> kept;     // samples surviving median pruning (all true otherwise)
  double step = 0.0;
  bool stopped_early = false;
};

struct ObjectiveWithCertificate {
  double value = 0.0;
  SubgradientCertificate y;
};

/// f(w) = ||Sigma_w - I||_{F,k,k} with Y = (Sigma_w - I)_Q / f on the maximising support Q.
ObjectiveWithCertificate objective_sparse_mean(const Matrix& x, const WeightVector& w, Index k);

/// F(w, Y) = Y . (X diag(w) X^T - (Xw)(Xw)^T - I). Defined for any real w.
double linearized_sparse_mean(const Matrix& x, const Vector& w, const SubgradientCertificate& y);

/// Gradient of F(., Y) at w: diag(X^T Y X) - X^T (Y + Y^T) X w.
Vector subgradient_sparse_mean(const Matrix& x, const Vector& w, const SubgradientCertificate& y);

PgdResult pgd_sparse_mean(const Matrix& x, const SparseMeanConfig& cfg);

struct PruneResult {
  Matrix samples;          // kept samples, shifted by -shift
  std::vector<bool> kept;  // per original sample
  Vector shift;            // coordinate-wise median of the input
};

/// Drops samples farther than factor * sqrt(d log d) (log clamped below at 1)
/// from the coordinate-wise median and recentres the rest on that median.
PruneResult median_prune(const Matrix& x, double factor);

Vector coordinate_median(const Matrix& x);

/// Keeps the k largest-magnitude entries (ties to the lower index), zeroes the rest.
Vector truncate_topk(const Vector& y, Index k);

SparseMeanResult estimate_sparse_mean(const Matrix& x, const SparseMeanConfig& cfg);

}  // namespace rsparse
