#pragma once

#include "rsparse/synthetic.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

/// ||truncate_topk(estimate, k) - mu||_2. Throws KindMismatch for spiked truth.
double sparse_error(const Vector& estimate, const GroundTruth& truth, Index k);

/// ||u u^T - v v^T||_F = sqrt(2 - 2 <u, v>^2) for unit u, v (NonUnit otherwise).
double subspace_error(const Vector& u, const Vector& v);

}  // namespace rsparse
