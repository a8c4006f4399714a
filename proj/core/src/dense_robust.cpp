#include "rsparse/dense_robust.hpp"

#include <cmath>
#include <string>

#include "rsparse/error.hpp"
#include "rsparse/moments.hpp"
#include "rsparse/sparse_pca.hpp"

namespace rsparse {

namespace {

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

void DenseConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0 / 3.0)) {
    throw Error(ErrorCode::InvalidConfig, "eps must lie in (0, 1/3), got " + std::to_string(eps));
  }
  if (iterations < 1) throw Error(ErrorCode::InvalidConfig, "iterations must be >= 1");
  if (step_scale < 0.0) throw Error(ErrorCode::InvalidConfig, "step_scale must be >= 0");
}

PgdOptions DenseConfig::pgd_options() const { return {iterations, step_scale, tolerance, patience}; }

EigenConfig DenseConfig::eigen_config() const {
  EigenConfig e;
  e.seed = seed;
  return e;
}

DenseObjective objective_dense_mean(const Matrix& x, const WeightVector& w, const EigenConfig& eigen) {
  if (x.cols() != w.size()) throw Error(ErrorCode::DimensionMismatch, "samples and weights disagree");
  Matrix dev = weighted_covariance(x, w.w);
  dev.diagonal().array() -= 1.0;
  DenseObjective out;
  if (dev.rows() >= 2) {
    auto [first, second] = top2_eigenpairs_sym(dev, eigen);
    const double a1 = std::abs(first.eigenvalue);
    out.tie = a1 > 0.0 && std::abs(a1 - std::abs(second.eigenvalue)) <= 1e-12 * std::max(1.0, a1);
    out.value = a1;
    out.y = SubgradientCertificate::low_rank(dev.rows(), {{sign_of(first.eigenvalue), std::move(first.eigenvector)}});
  } else {
    const SpectralNorm s = spectral_norm_sym(dev, eigen);
    out.value = s.value;
    out.y = SubgradientCertificate::low_rank(dev.rows(), {{sign_of(s.pair.eigenvalue), s.pair.eigenvector}});
  }
  return out;
}

DenseObjective objective_dense_pca(const Matrix& x, const WeightVector& w, const EigenConfig& eigen) {
  if (x.cols() != w.size()) throw Error(ErrorCode::DimensionMismatch, "samples and weights disagree");
  Matrix dev = weighted_second_moment(x, w.w);
  dev.diagonal().array() -= 1.0;
  auto [first, second] = top2_eigenpairs_sym(dev, eigen);
  DenseObjective out;
  out.value = std::abs(first.eigenvalue) + std::abs(second.eigenvalue);
  out.y = SubgradientCertificate::low_rank(
      dev.rows(), {{sign_of(first.eigenvalue), std::move(first.eigenvector)},
                   {sign_of(second.eigenvalue), std::move(second.eigenvector)}});
  return out;
}

DenseMeanResult estimate_dense_mean(const Matrix& x, const DenseConfig& cfg) {
  cfg.validate();
  if (x.cols() < 1 || x.rows() < 1) throw Error(ErrorCode::BadDims, "empty sample matrix");
  const CappedSimplex domain(x.cols(), cfg.eps);
  const EigenConfig eigen = cfg.eigen_config();
  int ties = 0;
  PgdResult pgd = run_pgd(uniform_weights(domain), cfg.step_scale, cfg.pgd_options(), [&](const WeightVector& w) {
    DenseObjective obj = objective_dense_mean(x, w, eigen);
    if (obj.tie) ++ties;
    return ObjectiveEval{obj.value, subgradient_sparse_mean(x, w.w, obj.y)};
  });
  DenseMeanResult out;
  out.mu_hat = x * pgd.best.w;
  out.w_final = std::move(pgd.best);
  out.objective_trace = std::move(pgd.trace);
  out.best_objective = pgd.best_objective;
  out.tied_iterations = ties;
  return out;
}

DensePcaResult estimate_dense_pca(const Matrix& x, const DenseConfig& cfg) {
  cfg.validate();
  if (x.cols() < 1 || x.rows() < 2) throw Error(ErrorCode::BadDims, "dense PCA needs d >= 2 and samples");
  const CappedSimplex domain(x.cols(), cfg.eps);
  const EigenConfig eigen = cfg.eigen_config();
  PgdResult pgd = run_pgd(uniform_weights(domain), cfg.step_scale, cfg.pgd_options(), [&](const WeightVector& w) {
    DenseObjective obj = objective_dense_pca(x, w, eigen);
    return ObjectiveEval{obj.value, subgradient_sparse_pca(x, obj.y)};
  });
  Matrix a = weighted_second_moment(x, pgd.best.w);
  a.diagonal().array() -= 1.0;
  DensePcaResult out;
  out.u = top_eigenpair_sym(a, eigen).eigenvector;
  out.w_final = std::move(pgd.best);
  out.objective_trace = std::move(pgd.trace);
  out.best_objective = pgd.best_objective;
  return out;
}

}  // namespace rsparse
