#include "rsparse/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "rsparse/error.hpp"
#include "rsparse/rng.hpp"

namespace rsparse {

namespace {

constexpr double kSymmetryTol = 1e-10;
constexpr double kDegenerate = 1e-12;

void check_symmetric(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "eigen solver needs a non-empty square matrix");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric to 1e-10");
  }
}

double residual_of(const Matrix& a, double lambda, const Vector& v) {
  return (a * v - lambda * v).norm();
}

bool within_tol(double residual, double lambda, const EigenConfig& cfg) {
  return residual <= cfg.tolerance * std::max(1.0, std::abs(lambda));
}

EigenPair finish(const Matrix& a, double lambda, Vector v) {
  v.normalize();
  normalize_sign(v);
  EigenPair out;
  out.eigenvalue = lambda;
  out.residual = residual_of(a, lambda, v);
  out.eigenvector = std::move(v);
  return out;
}

EigenPair dense_dominant(const Matrix& a, const EigenConfig& cfg) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "symmetric QR iteration failed");
  }
  const Vector& vals = solver.eigenvalues();  // ascending
  const Index last = vals.size() - 1;
  const Index pick = std::abs(vals[0]) > std::abs(vals[last]) ? 0 : last;
  EigenPair out = finish(a, vals[pick], solver.eigenvectors().col(pick));
  if (!within_tol(out.residual, out.eigenvalue, cfg)) {
    throw Error(ErrorCode::NonConvergence, "dense eigenpair residual above tolerance");
  }
  return out;
}

EigenPair power_dominant(const Matrix& a, const EigenConfig& cfg) {
  Rng rng(cfg.seed);
  Vector x = rng.normal_vector(a.rows());
  x.normalize();
  for (int it = 0; it < cfg.max_iterations; ++it) {
    Vector y = a * x;
    const double lambda = x.dot(y);
    const double res = (y - lambda * x).norm();
    if (within_tol(res, lambda, cfg)) return finish(a, lambda, x);
    const double ny = y.norm();
    if (ny == 0.0) return finish(a, 0.0, x);
    x = y / ny;
  }
  throw Error(ErrorCode::NonConvergence, "power iteration hit the iteration cap");
}

// A unit vector orthogonal to u, built from the first usable basis vector.
Vector orthogonal_unit(const Vector& u) {
  for (Index j = 0; j < u.size(); ++j) {
    Vector e = Vector::Unit(u.size(), j);
    e -= u.dot(e) * u;
    if (e.norm() > 0.5) return e.normalized();
  }
  return Vector::Unit(u.size(), 0);
}

}  // namespace

void normalize_sign(Vector& v) {
  if (v.size() == 0) return;
  Index arg = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > best) {
      best = std::abs(v[i]);
      arg = i;
    }
  }
  if (v[arg] < 0.0) v = -v;
}

EigenPair top_eigenpair_sym(const Matrix& a, const EigenConfig& cfg) {
  check_symmetric(a);
  return cfg.method == EigenMethod::Dense ? dense_dominant(a, cfg) : power_dominant(a, cfg);
}

std::pair<EigenPair, EigenPair> top2_eigenpairs_sym(const Matrix& a, const EigenConfig& cfg) {
  check_symmetric(a);
  if (a.rows() < 2) throw Error(ErrorCode::BadDims, "two eigenpairs need dimension >= 2");
  EigenPair first = top_eigenpair_sym(a, cfg);
  const Vector& u1 = first.eigenvector;

  EigenPair second;
  if (std::abs(first.eigenvalue) < kDegenerate) {
    second.eigenvalue = 0.0;
    second.eigenvector = orthogonal_unit(u1);
    second.residual = residual_of(a, 0.0, second.eigenvector);
    return {std::move(first), std::move(second)};
  }

  Matrix deflated = a - first.eigenvalue * u1 * u1.transpose();
  deflated = 0.5 * (deflated + deflated.transpose()).eval();
  EigenPair raw = top_eigenpair_sym(deflated, cfg);

  Vector v = raw.eigenvector - u1.dot(raw.eigenvector) * u1;
  if (v.norm() < 0.5) v = orthogonal_unit(u1);
  second = finish(a, raw.eigenvalue, std::move(v));
  return {std::move(first), std::move(second)};
}

SpectralNorm spectral_norm_sym(const Matrix& a, const EigenConfig& cfg) {
  SpectralNorm out;
  out.pair = top_eigenpair_sym(a, cfg);
  out.value = std::abs(out.pair.eigenvalue);
  return out;
}

}  // namespace rsparse
