#pragma once

// Brute-force references used only by the tests. Everything here is
// deliberately naive: exhaustive enumeration, textbook Jacobi sweeps and
// finite differences, so it shares no code path with the library.

#include <functional>
#include <vector>

#include "rsparse/types.hpp"

namespace oracle {

using rsparse::Index;
using rsparse::Matrix;
using rsparse::Vector;

/// Calls `visit` with every size-r subset of {0, ..., n-1}.
void for_each_subset(Index n, Index r, const std::function<void(const std::vector<Index>&)>& visit);

double topk_vector_norm(const Vector& v, Index k);
double top_entries_norm(const Matrix& a, Index s);
double fkk_norm(const Matrix& a, Index k);

struct Eigen {
  Vector values;   // ascending
  Matrix vectors;  // columns
};
/// Cyclic Jacobi rotations until the off-diagonal mass is below 1e-14 of the total.
Eigen jacobi_eigen(Matrix a);

/// Euclidean projection onto {sum w = 1, 0 <= w <= cap} by trying every
/// assignment of each coordinate to {0, cap, free}.
Vector project_capped_simplex(const Vector& x, double cap);

/// Central differences of f at w with step h.
Vector central_gradient(const std::function<double(const Vector&)>& f, const Vector& w, double h);

}  // namespace oracle
