#pragma once

#include <cmath>
#include <cstdint>

#include "rsparse/rng.hpp"
#include "rsparse/simplex.hpp"
#include "rsparse/types.hpp"

namespace fixtures {

using rsparse::Index;
using rsparse::Matrix;
using rsparse::Vector;

inline Matrix gaussian_matrix(rsparse::Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.normal();
  return m;
}

inline Vector gaussian_vector(rsparse::Rng& rng, Index d) { return rng.normal_vector(d); }

inline Matrix symmetric_matrix(rsparse::Rng& rng, Index d) {
  const Matrix a = gaussian_matrix(rng, d, d);
  return 0.5 * (a + a.transpose());
}

// Unit vector supported on k random coordinates.
inline Vector sparse_unit(rsparse::Rng& rng, Index d, Index k) {
  Vector v = Vector::Zero(d);
  for (Index i : rng.sample_without_replacement(d, k)) v[i] = rng.normal();
  const double norm = v.norm();
  return norm > 0.0 ? Vector(v / norm) : v;
}

// Random point of the domain: projection of a scaled Gaussian, which lands on
// faces of every dimension depending on `spread`.
inline Vector feasible_weights(rsparse::Rng& rng, const rsparse::CappedSimplex& domain, double spread = 1.0) {
  const Vector x = rng.normal_vector(domain.n()) * (spread / static_cast<double>(domain.n()));
  return rsparse::project_capped_simplex(x, domain).w;
}

}  // namespace fixtures

namespace fixtures {

// All 2^d sign patterns scaled per coordinate: uniform weights give mean 0
// and second moment diag(scale^2) exactly.
inline Matrix sign_patterns(const Vector& scale) {
  const Index d = scale.size();
  const Index n = Index{1} << d;
  Matrix x(d, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < d; ++i) x(i, j) = ((j >> i) & 1) ? scale[i] : -scale[i];
  return x;
}

// Samples whose uniform second moment is exactly I + rho e_j e_j^T.
inline Matrix population_spike(Index d, Index j, double rho) {
  Vector scale = Vector::Ones(d);
  scale[j] = std::sqrt(1.0 + rho);
  return sign_patterns(scale);
}

}  // namespace fixtures
