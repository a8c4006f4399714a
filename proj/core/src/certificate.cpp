#include "rsparse/certificate.hpp"

#include <cmath>

#include "rsparse/norms.hpp"

namespace rsparse {

SubgradientCertificate SubgradientCertificate::normalized_restriction(const Matrix& a, const CellList& support) {
  SubgradientCertificate y(a.rows());
  const double norm = restricted_norm(a, support);
  if (norm == 0.0) return y;
  y.entries_.reserve(support.size());
  for (const Cell& c : support) {
    const double value = a(c.row, c.col) / norm;
    if (value != 0.0) y.entries_.push_back({c, value});
  }
  return y;
}

SubgradientCertificate SubgradientCertificate::low_rank(Index dim, std::vector<RankOneTerm> terms) {
  SubgradientCertificate y(dim);
  for (auto& t : terms) {
    if (t.coef != 0.0) y.terms_.push_back(std::move(t));
  }
  return y;
}

bool SubgradientCertificate::is_zero() const noexcept { return entries_.empty() && terms_.empty(); }

Matrix SubgradientCertificate::dense() const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const auto& e : entries_) out(e.cell.row, e.cell.col) += e.value;
  for (const auto& t : terms_) out.noalias() += t.coef * t.u * t.u.transpose();
  return out;
}

double SubgradientCertificate::frobenius_norm() const {
  if (is_sparse()) {
    double sum = 0.0;
    for (const auto& e : entries_) sum += e.value * e.value;
    return std::sqrt(sum);
  }
  return dense().norm();
}

double SubgradientCertificate::inner(const Matrix& a) const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.value * a(e.cell.row, e.cell.col);
  for (const auto& t : terms_) sum += t.coef * t.u.dot(a * t.u);
  return sum;
}

Vector SubgradientCertificate::quadratic_forms(const Matrix& x) const {
  Vector g = Vector::Zero(x.cols());
  for (const auto& e : entries_) {
    g.array() += e.value * (x.row(e.cell.row).array() * x.row(e.cell.col).array()).transpose();
  }
  for (const auto& t : terms_) {
    const Vector proj = x.transpose() * t.u;
    g.array() += t.coef * proj.array().square();
  }
  return g;
}

Vector SubgradientCertificate::symmetrized_apply(const Vector& m) const {
  Vector out = Vector::Zero(dim_);
  for (const auto& e : entries_) {
    out[e.cell.row] += e.value * m[e.cell.col];
    out[e.cell.col] += e.value * m[e.cell.row];
  }
  for (const auto& t : terms_) out += 2.0 * t.coef * t.u.dot(m) * t.u;
  return out;
}

}  // namespace rsparse
