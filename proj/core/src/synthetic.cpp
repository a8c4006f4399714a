#include "rsparse/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rsparse/error.hpp"
#include "rsparse/rng.hpp"

namespace rsparse {

namespace {

void check_dims(Index d, Index k, Index n) {
  if (d < 1 || n < 1 || k < 1 || k > d) {
    throw Error(ErrorCode::BadDims, "need d >= 1, n >= 1 and 1 <= k <= d");
  }
}

IndexList sorted_sample(Rng& rng, Index n, Index count) {
  IndexList out = rng.sample_without_replacement(n, count);
  std::sort(out.begin(), out.end());
  return out;
}

Index checked_outliers(double eps, Index n) {
  if (!(eps >= 0.0)) throw Error(ErrorCode::EpsTooLarge, "eps must be nonnegative");
  const Index m = outlier_count_for(eps, n);
  if (m >= n) throw Error(ErrorCode::EpsTooLarge, "eps n must be below n");
  return m;
}

void finish_counts(CorruptedDataset& out) {
  out.eps_actual = static_cast<double>(out.outlier_count()) / static_cast<double>(out.size());
}

Vector clean_centre(const CorruptedDataset& data) {
  if (data.truth.mu.size() == data.dim()) return data.truth.mu;
  return Vector::Zero(data.dim());
}

}  // namespace

Index CorruptedDataset::outlier_count() const {
  return static_cast<Index>(std::count(inlier_mask.begin(), inlier_mask.end(), false));
}

Index outlier_count_for(double eps, Index n) {
  return static_cast<Index>(std::floor(eps * static_cast<double>(n) + 1e-9));
}

CorruptedDataset gen_sparse_mean_data(Index d, Index k, Index n, std::uint64_t seed, const MeanSpec& spec) {
  check_dims(d, k, n);
  Rng rng(seed);
  GroundTruth truth;
  truth.kind = TruthKind::SparseMean;
  if (spec.explicit_mu.size() > 0) {
    if (spec.explicit_mu.size() != d) throw Error(ErrorCode::BadDims, "explicit mean has the wrong dimension");
    truth.mu = spec.explicit_mu;
    for (Index i = 0; i < d; ++i) {
      if (truth.mu[i] != 0.0) truth.support.push_back(i);
    }
    if (static_cast<Index>(truth.support.size()) > k) throw Error(ErrorCode::BadDims, "explicit mean is not k-sparse");
  } else {
    truth.support = sorted_sample(rng, d, k);
    truth.mu = Vector::Zero(d);
    for (Index i : truth.support) truth.mu[i] = spec.value;
  }

  CorruptedDataset out;
  out.x.resize(d, n);
  for (Index i = 0; i < n; ++i) out.x.col(i) = rng.normal_vector(d) + truth.mu;
  out.inlier_mask.assign(static_cast<std::size_t>(n), true);
  out.truth = std::move(truth);
  out.seed = seed;
  return out;
}

CorruptedDataset gen_spiked_data(Index d, Index k, Index n, double rho, std::uint64_t seed) {
  check_dims(d, k, n);
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::BadDims, "rho must lie in (0, 1]");
  Rng rng(seed);
  GroundTruth truth;
  truth.kind = TruthKind::SpikedPca;
  truth.rho = rho;
  truth.support = sorted_sample(rng, d, k);
  truth.mu = Vector::Zero(d);
  truth.v = Vector::Zero(d);
  const double entry = 1.0 / std::sqrt(static_cast<double>(k));
  for (Index i : truth.support) truth.v[i] = rng.sign() * entry;

  CorruptedDataset out;
  out.x.resize(d, n);
  const double scale = std::sqrt(rho);
  for (Index i = 0; i < n; ++i) {
    Vector g = rng.normal_vector(d);
    const double z = rng.normal();
    out.x.col(i) = g + scale * z * truth.v;
  }
  out.inlier_mask.assign(static_cast<std::size_t>(n), true);
  out.truth = std::move(truth);
  out.seed = seed;
  return out;
}

IndexList hiding_set(Index d, Index k, const IndexList& avoid, std::uint64_t seed) {
  Rng rng(seed);
  IndexList pool;
  for (Index i = 0; i < d; ++i) {
    if (!std::binary_search(avoid.begin(), avoid.end(), i)) pool.push_back(i);
  }
  if (static_cast<Index>(pool.size()) < k) {
    pool.resize(static_cast<std::size_t>(d));
    std::iota(pool.begin(), pool.end(), Index{0});
  }
  IndexList picks = rng.sample_without_replacement(static_cast<Index>(pool.size()), k);
  IndexList out;
  for (Index p : picks) out.push_back(pool[static_cast<std::size_t>(p)]);
  std::sort(out.begin(), out.end());
  return out;
}

CorruptedDataset corrupt_linear_hiding(const CorruptedDataset& data, double eps, std::uint64_t seed) {
  const Index n = data.size();
  const Index d = data.dim();
  const Index m = checked_outliers(eps, n);
  CorruptedDataset out = data;
  out.seed = seed;
  if (m == 0) return out;

  const Index k = std::max<Index>(1, static_cast<Index>(data.truth.support.size()));
  const IndexList hidden = hiding_set(d, k, data.truth.support, derive_seed(seed, 0x11));
  Vector indicator = Vector::Zero(d);
  for (Index i : hidden) indicator[i] = 1.0;
  // N(0, 2I - I_S): variance 2 off S, 1 on S.
  const Vector spread = (2.0 * Vector::Ones(d) - indicator).cwiseSqrt();

  Rng rng(seed);
  const IndexList cols = rng.sample_without_replacement(n, m);
  const Index first_half = (m + 1) / 2;
  for (Index j = 0; j < m; ++j) {
    const Index c = cols[static_cast<std::size_t>(j)];
    const Vector g = rng.normal_vector(d);
    out.x.col(c) = j < first_half ? Vector(g + indicator) : Vector(g.cwiseProduct(spread));
    out.inlier_mask[static_cast<std::size_t>(c)] = false;
  }
  finish_counts(out);
  return out;
}

Vector tail_flip_direction(const CorruptedDataset& data, std::uint64_t seed) {
  if (data.truth.kind == TruthKind::SpikedPca && data.truth.v.size() == data.dim()) return data.truth.v;
  Rng rng(seed);
  IndexList support = data.truth.support;
  if (support.empty()) support = sorted_sample(rng, data.dim(), 1);
  Vector v = Vector::Zero(data.dim());
  const double entry = 1.0 / std::sqrt(static_cast<double>(support.size()));
  for (Index i : support) v[i] = rng.sign() * entry;
  return v;
}

CorruptedDataset corrupt_tail_flipping(const CorruptedDataset& data, double eps, std::uint64_t seed, FlipMode mode) {
  const Index n = data.size();
  const Index m = checked_outliers(eps, n);
  CorruptedDataset out = data;
  out.seed = seed;
  if (m == 0) return out;

  const Vector v = tail_flip_direction(data, derive_seed(seed, 0x7f));
  const Vector centre = clean_centre(data);
  const Vector proj = (data.x.colwise() - centre).transpose() * v;

  IndexList order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return proj[a] < proj[b]; });

  Rng rng(seed);
  for (Index j = 0; j < m; ++j) {
    const Index c = order[static_cast<std::size_t>(j)];
    const double p = proj[c];
    if (mode == FlipMode::Reflect) {
      out.x.col(c) = data.x.col(c) - 2.0 * p * v;
    } else {
      Vector g = rng.normal_vector(data.dim());
      g -= v.dot(g) * v;
      out.x.col(c) = centre + std::abs(p) * v + g;
    }
    out.inlier_mask[static_cast<std::size_t>(c)] = false;
  }
  finish_counts(out);
  return out;
}

CorruptedDataset corrupt_constant_bias(const CorruptedDataset& data, double eps, double bias, std::uint64_t seed) {
  const Index n = data.size();
  const Index m = checked_outliers(eps, n);
  CorruptedDataset out = data;
  out.seed = seed;
  if (m == 0) return out;
  Rng rng(seed);
  for (Index c : rng.sample_without_replacement(n, m)) {
    out.x.col(c).array() += bias;
    out.inlier_mask[static_cast<std::size_t>(c)] = false;
  }
  finish_counts(out);
  return out;
}

}  // namespace rsparse
