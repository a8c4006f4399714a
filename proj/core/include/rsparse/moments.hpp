#pragma once

// Weighted empirical moments of a d x n sample matrix (one sample per column).

#include "rsparse/simplex.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

struct WeightedMoments {
  Vector mean;           // mu_w = X w
  Matrix second_moment;  // M_w = sum_i w_i X_i X_i^T
  Matrix covariance;     // Sigma_w = M_w - mu_w mu_w^T
};

WeightedMoments weighted_moments(const Matrix& x, const WeightVector& w);

Vector weighted_mean(const Matrix& x, const Vector& w);
/// sum_i w_i X_i X_i^T, symmetric. w must be nonnegative.
Matrix weighted_second_moment(const Matrix& x, const Vector& w);
/// sum_i w_i (X_i - mu_w)(X_i - mu_w)^T. Equal to M_w - mu_w mu_w^T when
/// sum w = 1, but computed from centred samples for accuracy.
Matrix weighted_covariance(const Matrix& x, const Vector& w);

}  // namespace rsparse
