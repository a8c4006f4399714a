#include "rsparse/baselines.hpp"

#include <cmath>

#include "rsparse/error.hpp"
#include "rsparse/rng.hpp"
#include "rsparse/sparse_mean.hpp"

namespace rsparse {

Vector sample_mean(const Matrix& x) {
  if (x.cols() < 1) throw Error(ErrorCode::BadDims, "mean of zero samples");
  return x.rowwise().mean();
}

Vector baseline_oracle(const CorruptedDataset& data) {
  Vector sum = Vector::Zero(data.dim());
  Index count = 0;
  for (Index i = 0; i < data.size(); ++i) {
    if (data.inlier_mask[static_cast<std::size_t>(i)]) {
      sum += data.x.col(i);
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorCode::AllPruned, "no inliers in the dataset");
  return sum / static_cast<double>(count);
}

Vector baseline_oracle_pca(const CorruptedDataset& data, const EigenConfig& eigen) {
  const Index d = data.dim();
  Matrix second = Matrix::Zero(d, d);
  Index count = 0;
  for (Index i = 0; i < data.size(); ++i) {
    if (data.inlier_mask[static_cast<std::size_t>(i)]) {
      second.selfadjointView<Eigen::Lower>().rankUpdate(data.x.col(i));
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorCode::AllPruned, "no inliers in the dataset");
  Matrix a = second.selfadjointView<Eigen::Lower>();
  a /= static_cast<double>(count);
  a.diagonal().array() -= 1.0;
  return top_eigenpair_sym(a, eigen).eigenvector;
}

Vector baseline_naive_prune(const Matrix& x, double radius_factor) {
  const Vector med = coordinate_median(x);
  const double radius = radius_factor * std::sqrt(static_cast<double>(x.rows()));
  Vector sum = Vector::Zero(x.rows());
  Index count = 0;
  for (Index i = 0; i < x.cols(); ++i) {
    if ((x.col(i) - med).norm() <= radius) {
      sum += x.col(i);
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorCode::AllPruned, "naive pruning removed every sample");
  return sum / static_cast<double>(count);
}

Vector baseline_ransac(const Matrix& x, const RansacOptions& options) {
  const Index n = x.cols();
  if (n < 1) throw Error(ErrorCode::BadDims, "RANSAC needs samples");
  if (options.rounds < 1) throw Error(ErrorCode::InvalidConfig, "RANSAC needs at least one round");
  const Index half = std::max<Index>(1, n / 2);
  const double radius_sq = std::pow(options.ball_constant * std::sqrt(static_cast<double>(x.rows())), 2);

  Rng rng(options.seed);
  Vector best;
  Index best_count = -1;
  for (int r = 0; r < options.rounds; ++r) {
    Vector candidate = Vector::Zero(x.rows());
    for (Index i : rng.sample_without_replacement(n, half)) candidate += x.col(i);
    candidate /= static_cast<double>(half);
    const Index count = ((x.colwise() - candidate).colwise().squaredNorm().array() <= radius_sq).count();
    if (count > best_count) {
      best_count = count;
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace rsparse
