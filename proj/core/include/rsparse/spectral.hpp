#pragma once

// Magnitude-dominant eigenpairs of small dense symmetric matrices.

#include <cstdint>
#include <utility>

#include "rsparse/types.hpp"

namespace rsparse {

enum class EigenMethod {
  /// Householder tridiagonalisation + implicit QR (Eigen::SelfAdjointEigenSolver).
  Dense,
  /// Power iteration from a seeded random start. Only reliable with a clear
  /// gap |lambda_1| > |lambda_2|; a +/- pair of equal magnitude never converges.
  Power,
};

struct EigenConfig {
  EigenMethod method = EigenMethod::Dense;
  int max_iterations = 5000;  // power iteration only
  double tolerance = 1e-10;   // residual bound, relative to max(1, |lambda|)
  std::uint64_t seed = 0x5eed;
};

struct EigenPair {
  double eigenvalue = 0.0;
  Vector eigenvector;  // unit norm; largest-magnitude coordinate is positive
  double residual = 0.0;  // ||A v - lambda v||_2
};

/// Eigenpair whose eigenvalue has the largest magnitude (ties: the positive one).
EigenPair top_eigenpair_sym(const Matrix& a, const EigenConfig& cfg = {});

/// The two magnitude-dominant pairs. The second is found on the deflated
/// matrix A - lambda_1 u_1 u_1^T and is orthogonal to the first.
std::pair<EigenPair, EigenPair> top2_eigenpairs_sym(const Matrix& a, const EigenConfig& cfg = {});

struct SpectralNorm {
  double value = 0.0;
  EigenPair pair;
};

SpectralNorm spectral_norm_sym(const Matrix& a, const EigenConfig& cfg = {});

/// Flip sign so the largest-magnitude coordinate (lowest index on ties) is positive.
void normalize_sign(Vector& v);

}  // namespace rsparse
