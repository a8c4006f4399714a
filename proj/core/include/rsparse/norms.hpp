#pragma once

// Sparsity-restricted norms and the supports that attain them.
//
// All selections break ties by ascending index (row-major order for matrix
// cells), so the returned supports, and every subgradient built from them,
// are deterministic.

#include "rsparse/types.hpp"

namespace rsparse {

/// Largest l2 norm over any k coordinates of a vector.
struct VecTopK {
  double value = 0.0;
  IndexList support;  // ascending, exactly min(k, d) entries
};

/// Largest Frobenius norm over any s entries of a matrix.
struct MatTopS {
  double value = 0.0;
  CellList support;  // row-major order, exactly min(s, rows*cols) cells
};

/// Largest Frobenius norm over k rows with k entries taken from each row.
struct MatFkk {
  double value = 0.0;
  IndexList rows;               // ascending
  std::vector<IndexList> cols;  // cols[j] is the column set for rows[j], ascending

  /// Flattened support in row-major order.
  CellList cells() const;
};

VecTopK topk_vector_norm(const Vector& v, Index k);
MatTopS top_entries_norm(const Matrix& a, Index s);
MatFkk fkk_norm(const Matrix& a, Index k);

/// Indices of the k largest-magnitude entries, ascending. k > size means all.
IndexList top_magnitude_indices(const Vector& v, Index k);

/// sqrt of the sum of squares over `support`, accumulated in the order given.
double restricted_norm(const Vector& v, const IndexList& support);
double restricted_norm(const Matrix& a, const CellList& support);

}  // namespace rsparse
