#include "rsparse/sparse_pca.hpp"

#include <string>

#include "rsparse/error.hpp"
#include "rsparse/moments.hpp"
#include "rsparse/norms.hpp"

namespace rsparse {

void SparsePcaConfig::validate() const {
  if (k < 1) throw Error(ErrorCode::InvalidConfig, "k must be >= 1");
  if (!(eps > 0.0 && eps < eps_guard)) {
    throw Error(ErrorCode::InvalidConfig, "eps must lie in (0, eps_guard), got " + std::to_string(eps));
  }
  if (iterations < 1) throw Error(ErrorCode::InvalidConfig, "iterations must be >= 1");
  if (step_scale < 0.0) throw Error(ErrorCode::InvalidConfig, "step_scale must be >= 0");
}

PgdOptions SparsePcaConfig::pgd_options() const { return {iterations, step_scale, tolerance, patience}; }

EigenConfig SparsePcaConfig::eigen_config() const {
  EigenConfig e;
  e.seed = seed;
  return e;
}

ObjectiveWithCertificate objective_sparse_pca(const Matrix& x, const WeightVector& w, Index k) {
  if (x.cols() != w.size()) throw Error(ErrorCode::DimensionMismatch, "samples and weights disagree");
  Matrix dev = weighted_second_moment(x, w.w);
  dev.diagonal().array() -= 1.0;
  const MatTopS norm = top_entries_norm(dev, 2 * k * k);
  return {norm.value, SubgradientCertificate::normalized_restriction(dev, norm.support)};
}

double linearized_sparse_pca(const Matrix& x, const Vector& w, const SubgradientCertificate& y) {
  return y.quadratic_forms(x).dot(w) - y.dense().trace();
}

Vector subgradient_sparse_pca(const Matrix& x, const SubgradientCertificate& y) {
  return y.quadratic_forms(x);
}

PgdResult pgd_sparse_pca(const Matrix& x, const SparsePcaConfig& cfg) {
  cfg.validate();
  const CappedSimplex domain(x.cols(), cfg.eps);
  return run_pgd(uniform_weights(domain), cfg.step_scale, cfg.pgd_options(), [&](const WeightVector& w) {
    ObjectiveWithCertificate obj = objective_sparse_pca(x, w, cfg.k);
    return ObjectiveEval{obj.value, subgradient_sparse_pca(x, obj.y)};
  });
}

SpikeEstimate extract_spike(const Matrix& a, Index k, const EigenConfig& eigen) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "extract_spike needs a square matrix");
  const MatTopS top = top_entries_norm(a, k * k);
  if (top.value == 0.0) throw Error(ErrorCode::Degenerate, "top k^2 entries are all zero");
  Matrix restricted = Matrix::Zero(a.rows(), a.cols());
  for (const Cell& c : top.support) restricted(c.row, c.col) = a(c.row, c.col);
  const Matrix sym = restricted + restricted.transpose();
  EigenPair pair = top_eigenpair_sym(sym, eigen);
  return {std::move(pair.eigenvector), top.support, pair.eigenvalue};
}

SparsePcaResult estimate_sparse_pca(const Matrix& x, const SparsePcaConfig& cfg) {
  cfg.validate();
  if (x.cols() < 1 || x.rows() < 1) throw Error(ErrorCode::BadDims, "empty sample matrix");
  PgdResult pgd = pgd_sparse_pca(x, cfg);
  Matrix a = weighted_second_moment(x, pgd.best.w);
  a.diagonal().array() -= 1.0;
  SpikeEstimate spike = extract_spike(a, cfg.k, cfg.eigen_config());

  SparsePcaResult out;
  out.u = std::move(spike.u);
  out.extraction_support = std::move(spike.support);
  out.w_final = std::move(pgd.best);
  out.objective_trace = std::move(pgd.trace);
  out.best_objective = pgd.best_objective;
  out.step = pgd.step;
  out.stopped_early = pgd.stopped_early;
  return out;
}

}  // namespace rsparse
