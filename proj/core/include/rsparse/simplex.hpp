#pragma once

// The capped simplex {w : sum w = 1, 0 <= w_i <= 1/((1-eps) n)} and exact
// Euclidean projection onto it.

#include "rsparse/types.hpp"

namespace rsparse {

class CappedSimplex {
 public:
  /// Throws InfeasibleDomain unless n >= 1 and 0 <= eps < 1 with a cap of at most 1.
  CappedSimplex(Index n, double eps);

  Index n() const noexcept { return n_; }
  double eps() const noexcept { return eps_; }
  double cap() const noexcept { return cap_; }

  /// Membership with slack `tol` on both the sum and the box.
  bool contains(const Vector& w, double tol = 1e-10) const;

  friend bool operator==(const CappedSimplex&, const CappedSimplex&) = default;

 private:
  Index n_;
  double eps_;
  double cap_;
};

struct WeightVector {
  Vector w;
  CappedSimplex domain{1, 0.0};

  Index size() const noexcept { return w.size(); }
};

WeightVector uniform_weights(const CappedSimplex& domain);

/// argmin over the domain of ||w - x||_2, i.e. w_i = clamp(x_i - tau, 0, cap)
/// with tau solving sum_i w_i = 1. Breakpoint scan, O(n log n).
WeightVector project_capped_simplex(const Vector& x, const CappedSimplex& domain);

/// (1 - eta) w1 + eta w2. Both must live on the same domain.
WeightVector mix_weights(const WeightVector& w1, const WeightVector& w2, double eta);

}  // namespace rsparse
