#include "rsparse/moments.hpp"

#include "rsparse/error.hpp"

namespace rsparse {

namespace {

void check_dims(const Matrix& x, const Vector& w) {
  if (x.cols() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch, "sample count does not match weight length");
  }
}

Matrix gram_of_scaled(const Matrix& scaled) {
  const Index d = scaled.rows();
  Matrix out = Matrix::Zero(d, d);
  out.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
  return out.selfadjointView<Eigen::Lower>();
}

}  // namespace

Vector weighted_mean(const Matrix& x, const Vector& w) {
  check_dims(x, w);
  return x * w;
}

Matrix weighted_second_moment(const Matrix& x, const Vector& w) {
  check_dims(x, w);
  const Eigen::ArrayXd root = w.array().max(0.0).sqrt();
  return gram_of_scaled(x * root.matrix().asDiagonal());
}

Matrix weighted_covariance(const Matrix& x, const Vector& w) {
  check_dims(x, w);
  const Vector mu = x * w;
  const Eigen::ArrayXd root = w.array().max(0.0).sqrt();
  return gram_of_scaled((x.colwise() - mu) * root.matrix().asDiagonal());
}

WeightedMoments weighted_moments(const Matrix& x, const WeightVector& w) {
  check_dims(x, w.w);
  WeightedMoments out;
  out.mean = x * w.w;
  out.second_moment = weighted_second_moment(x, w.w);
  out.covariance = out.second_moment - out.mean * out.mean.transpose();
  return out;
}

}  // namespace rsparse
