#include "rsparse/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rsparse/error.hpp"
#include "rsparse/sparse_mean.hpp"

namespace rsparse {

double sparse_error(const Vector& estimate, const GroundTruth& truth, Index k) {
  if (truth.kind != TruthKind::SparseMean) throw Error(ErrorCode::KindMismatch, "sparse_error needs a mean truth");
  if (estimate.size() != truth.mu.size()) throw Error(ErrorCode::DimensionMismatch, "estimate has the wrong dimension");
  return (truncate_topk(estimate, k) - truth.mu).norm();
}

double subspace_error(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
  constexpr double kUnitTol = 1e-6;
  if (std::abs(u.norm() - 1.0) > kUnitTol || std::abs(v.norm() - 1.0) > kUnitTol) {
    throw Error(ErrorCode::NonUnit, "subspace_error expects unit vectors");
  }
  const double c = u.dot(v);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * c * c));
}

}  // namespace rsparse
