#include "rsparse/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rsparse/error.hpp"
#include "rsparse/moments.hpp"
#include "rsparse/norms.hpp"

namespace rsparse {

namespace {

// C(n, r), saturating just above `limit`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t limit) {
  r = std::min(r, n - r);
  long double acc = 1.0L;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * static_cast<long double>(n - r + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::uint64_t>(std::llround(static_cast<double>(acc)));
}

// Advances `idx` (strictly increasing, values < n) to the next combination.
bool next_combination(IndexList& idx, Index n) {
  const auto r = static_cast<Index>(idx.size());
  for (Index i = r - 1; i >= 0; --i) {
    auto& slot = idx[static_cast<std::size_t>(i)];
    if (slot < n - r + i) {
      ++slot;
      for (Index j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

StabilityReport stability_oracle(const Matrix& g, Index k, double eps, const TrueParams& truth) {
  const Index n = g.cols();
  const Index d = g.rows();
  if (n < 1 || d < 1) throw Error(ErrorCode::BadDims, "stability oracle needs samples");
  const double bad = eps * static_cast<double>(n);
  if (std::abs(bad - std::round(bad)) > 1e-9 || eps < 0.0) {
    throw Error(ErrorCode::InfeasibleDomain, "stability oracle needs eps * n integral");
  }
  const Index removed = 2 * static_cast<Index>(std::llround(bad));
  const Index kept = n - removed;
  if (kept < 1) throw Error(ErrorCode::InfeasibleDomain, "2 eps n leaves no samples");
  if (binomial_capped(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(kept), kMaxStabilityVertices) >
      kMaxStabilityVertices) {
    throw Error(ErrorCode::TooLarge, "vertex enumeration exceeds 1e6 subsets");
  }

  const Vector mu = truth.mu.size() == 0 ? Vector::Zero(d) : truth.mu;
  Matrix target = Matrix::Identity(d, d);
  if (truth.v.size() == d) target += truth.rho * truth.v * truth.v.transpose();
  if (mu.size() != d) throw Error(ErrorCode::DimensionMismatch, "true mean has the wrong dimension");

  StabilityReport report;
  IndexList subset(static_cast<std::size_t>(kept));
  std::iota(subset.begin(), subset.end(), Index{0});
  const Matrix identity = Matrix::Identity(d, d);
  const Matrix centred = g.colwise() - mu;
  do {
    Vector w = Vector::Zero(n);
    for (Index i : subset) w[i] = 1.0 / static_cast<double>(kept);
    // Deviation from the truth first, so copies of mu give exactly zero.
    const Vector deviation = centred * w;
    const Vector mean = mu + deviation;
    const Matrix second = weighted_second_moment(g, w);
    const Matrix cov = second - mean * mean.transpose();
    report.delta_mean = std::max(report.delta_mean, topk_vector_norm(deviation, k).value);
    report.delta_cov = std::max(report.delta_cov, fkk_norm(cov - identity, k).value);
    report.delta_pca = std::max(report.delta_pca, top_entries_norm(second - target, 2 * k * k).value);
    ++report.vertices_checked;
  } while (next_combination(subset, n));
  return report;
}

}  // namespace rsparse
