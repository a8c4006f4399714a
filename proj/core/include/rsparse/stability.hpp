#pragma once

// Exhaustive stability check for tiny sample sets: the maximum deviation of
// the weighted moments over every vertex of the capped simplex with
// parameter 2 eps (uniform weights on subsets of size (1 - 2 eps) n).

#include <cstdint>

#include "rsparse/types.hpp"

namespace rsparse {

struct TrueParams {
  Vector mu;        // true mean; empty means zero
  Vector v;         // spike direction; empty means no spike
  double rho = 0.0;
};

struct StabilityReport {
  double delta_mean = 0.0;  // max ||mu_w - mu||_{2,k}
  double delta_cov = 0.0;   // max ||Sigma_w - I||_{F,k,k}
  double delta_pca = 0.0;   // max ||M_w - (I + rho v v^T)||_{F,2k^2}
  std::uint64_t vertices_checked = 0;
};

inline constexpr std::uint64_t kMaxStabilityVertices = 1'000'000;

/// Requires 2 eps n to be an integer (to 1e-9) and at most kMaxStabilityVertices
/// subsets; throws InfeasibleDomain / TooLarge otherwise.
StabilityReport stability_oracle(const Matrix& g, Index k, double eps, const TrueParams& truth);

}  // namespace rsparse
