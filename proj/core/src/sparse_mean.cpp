#include "rsparse/sparse_mean.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsparse/error.hpp"
#include "rsparse/moments.hpp"
#include "rsparse/norms.hpp"

namespace rsparse {

void SparseMeanConfig::validate() const {
  if (k < 1) throw Error(ErrorCode::InvalidConfig, "k must be >= 1");
  if (!(eps > 0.0 && eps < 1.0 / 3.0)) {
    throw Error(ErrorCode::InvalidConfig, "eps must lie in (0, 1/3), got " + std::to_string(eps));
  }
  if (iterations < 1) throw Error(ErrorCode::InvalidConfig, "iterations must be >= 1");
  if (step_scale < 0.0) throw Error(ErrorCode::InvalidConfig, "step_scale must be >= 0");
  if (prune && !(prune_radius_factor > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "prune_radius_factor must be positive");
  }
}

PgdOptions SparseMeanConfig::pgd_options() const {
  return {iterations, step_scale, tolerance, patience};
}

ObjectiveWithCertificate objective_sparse_mean(const Matrix& x, const WeightVector& w, Index k) {
  if (x.cols() != w.size()) throw Error(ErrorCode::DimensionMismatch, "samples and weights disagree");
  Matrix dev = weighted_covariance(x, w.w);
  dev.diagonal().array() -= 1.0;
  const MatFkk norm = fkk_norm(dev, k);
  return {norm.value, SubgradientCertificate::normalized_restriction(dev, norm.cells())};
}

double linearized_sparse_mean(const Matrix& x, const Vector& w, const SubgradientCertificate& y) {
  const Vector mu = x * w;
  const double trace_y = y.dense().trace();
  return y.quadratic_forms(x).dot(w) - 0.5 * mu.dot(y.symmetrized_apply(mu)) - trace_y;
}

Vector subgradient_sparse_mean(const Matrix& x, const Vector& w, const SubgradientCertificate& y) {
  if (y.is_zero()) return Vector::Zero(x.cols());
  const Vector mu = x * w;
  return y.quadratic_forms(x) - x.transpose() * y.symmetrized_apply(mu);
}

PgdResult pgd_sparse_mean(const Matrix& x, const SparseMeanConfig& cfg) {
  cfg.validate();
  const CappedSimplex domain(x.cols(), cfg.eps);
  return run_pgd(uniform_weights(domain), cfg.step_scale, cfg.pgd_options(), [&](const WeightVector& w) {
    ObjectiveWithCertificate obj = objective_sparse_mean(x, w, cfg.k);
    return ObjectiveEval{obj.value, subgradient_sparse_mean(x, w.w, obj.y)};
  });
}

Vector coordinate_median(const Matrix& x) {
  const Index d = x.rows();
  const Index n = x.cols();
  if (n < 1) throw Error(ErrorCode::BadDims, "median of zero samples");
  Vector med(d);
  std::vector<double> row(static_cast<std::size_t>(n));
  for (Index r = 0; r < d; ++r) {
    for (Index i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = x(r, i);
    std::sort(row.begin(), row.end());
    const auto mid = static_cast<std::size_t>(n / 2);
    med[r] = (n % 2 == 1) ? row[mid] : 0.5 * (row[mid - 1] + row[mid]);
  }
  return med;
}

PruneResult median_prune(const Matrix& x, double factor) {
  const Index d = x.rows();
  const Index n = x.cols();
  if (n < 1) throw Error(ErrorCode::BadDims, "median_prune needs at least one sample");
  const Vector med = coordinate_median(x);
  const double dd = static_cast<double>(d);
  const double radius = factor * std::sqrt(dd * std::max(std::log(dd), 1.0));

  PruneResult out;
  out.shift = med;
  out.kept.assign(static_cast<std::size_t>(n), false);
  IndexList keep;
  for (Index i = 0; i < n; ++i) {
    if ((x.col(i) - med).norm() <= radius) {
      out.kept[static_cast<std::size_t>(i)] = true;
      keep.push_back(i);
    }
  }
  if (keep.empty()) throw Error(ErrorCode::AllPruned, "every sample lies outside the pruning radius");
  out.samples.resize(d, static_cast<Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) out.samples.col(static_cast<Index>(j)) = x.col(keep[j]) - med;
  return out;
}

Vector truncate_topk(const Vector& y, Index k) {
  Vector z = Vector::Zero(y.size());
  for (Index i : top_magnitude_indices(y, k)) z[i] = y[i];
  return z;
}

SparseMeanResult estimate_sparse_mean(const Matrix& x, const SparseMeanConfig& cfg) {
  cfg.validate();
  if (x.cols() < 1 || x.rows() < 1) throw Error(ErrorCode::BadDims, "empty sample matrix");

  SparseMeanResult out;
  Matrix pruned;
  Vector shift = Vector::Zero(x.rows());
  const Matrix* samples = &x;
  if (cfg.prune) {
    PruneResult pr = median_prune(x, cfg.prune_radius_factor);
    pruned = std::move(pr.samples);
    shift = std::move(pr.shift);
    out.kept = std::move(pr.kept);
    samples = &pruned;
  } else {
    out.kept.assign(static_cast<std::size_t>(x.cols()), true);
  }

  PgdResult pgd = pgd_sparse_mean(*samples, cfg);
  const Vector mu_w = *samples * pgd.best.w + shift;
  out.support = top_magnitude_indices(mu_w, cfg.k);
  out.mu_hat = truncate_topk(mu_w, cfg.k);
  out.w_final = std::move(pgd.best);
  out.objective_trace = std::move(pgd.trace);
  out.best_objective = pgd.best_objective;
  out.step = pgd.step;
  out.stopped_early = pgd.stopped_early;
  return out;
}

}  // namespace rsparse
