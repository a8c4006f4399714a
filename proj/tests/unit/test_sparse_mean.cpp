#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsparse/error.hpp"
#include "rsparse/moments.hpp"
#include "rsparse/norms.hpp"
#include "rsparse/sparse_mean.hpp"
#include "rsparse/synthetic.hpp"

using namespace rsparse;

TEST(SparseMeanObjective, UnitVarianceIsZero) {
  const Matrix x{{0.0, 2.0}};
  const auto obj = objective_sparse_mean(x, uniform_weights(CappedSimplex(2, 0.0)), 1);
  EXPECT_NEAR(obj.value, 0.0, 1e-15);

  const Matrix signs = fixtures::sign_patterns(Vector::Ones(3));
  EXPECT_NEAR(objective_sparse_mean(signs, uniform_weights(CappedSimplex(8, 0.1)), 2).value, 0.0, 1e-15);
}

TEST(SparseMeanObjective, MatchesOracleAndCertificate) {
  Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    const CappedSimplex dom(10, 0.2);
    const Matrix x = fixtures::gaussian_matrix(rng, 5, 10) * 1.5;
    const WeightVector w{fixtures::feasible_weights(rng, dom, 5.0), dom};
    const auto obj = objective_sparse_mean(x, w, 2);
    const Matrix dev = weighted_moments(x, w).covariance - Matrix::Identity(5, 5);
    EXPECT_NEAR(obj.value, oracle::fkk_norm(dev, 2), 1e-12);
    EXPECT_NEAR(obj.y.frobenius_norm(), 1.0, 1e-12);
    EXPECT_NEAR(obj.y.inner(dev), obj.value, 1e-12);
  }
}

TEST(SparseMeanGradient, HandAlgebraInOneDimension) {
  const Matrix x{{0.0, 2.0}};
  const Vector w{{0.5, 0.5}};
  const auto y = SubgradientCertificate::normalized_restriction(Matrix::Ones(1, 1), {{0, 0}});
  // F(w) = sum w_i x_i^2 - (sum w_i x_i)^2 - 1 = 2 - 1 - 1.
  EXPECT_DOUBLE_EQ(linearized_sparse_mean(x, w, y), 0.0);
  // g_i = x_i^2 - 2 x_i (w . x) = (0, 4 - 4).
  const Vector g = subgradient_sparse_mean(x, w, y);
  EXPECT_DOUBLE_EQ(g[0], 0.0);
  EXPECT_DOUBLE_EQ(g[1], 0.0);
  EXPECT_DOUBLE_EQ(subgradient_sparse_mean(x, Vector{{1.0, 0.0}}, y)[1], 4.0);
}

TEST(SparseMeanGradient, ZeroCertificateGivesZero) {
  Rng rng(52);
  const Matrix x = fixtures::gaussian_matrix(rng, 3, 6);
  EXPECT_EQ(subgradient_sparse_mean(x, Vector::Constant(6, 1.0 / 6), SubgradientCertificate(3)), Vector::Zero(6));
}

TEST(SparseMeanGradient, CertificateLowerBoundsObjectiveElsewhere) {
  Rng rng(53);
  const CappedSimplex dom(12, 0.25);
  for (int t = 0; t < 100; ++t) {
    const Matrix x = fixtures::gaussian_matrix(rng, 6, 12);
    const WeightVector w{fixtures::feasible_weights(rng, dom, 6.0), dom};
    const WeightVector w2{fixtures::feasible_weights(rng, dom, 6.0), dom};
    const auto at_w = objective_sparse_mean(x, w, 2);
    EXPECT_LE(linearized_sparse_mean(x, w2.w, at_w.y), objective_sparse_mean(x, w2, 2).value + 1e-12);
  }
}

TEST(SparseMeanPgd, BestIterateAndDeterminism) {
  const auto data = gen_sparse_mean_data(20, 3, 2000, 54);
  SparseMeanConfig cfg;
  cfg.k = 3;
  cfg.eps = 0.1;
  cfg.iterations = 200;
  const auto a = pgd_sparse_mean(data.x, cfg);
  const auto b = pgd_sparse_mean(data.x, cfg);
  EXPECT_LE(a.best_objective, a.trace.front().objective);
  const auto best = best_so_far(a.trace);
  for (std::size_t i = 1; i < best.size(); ++i) EXPECT_LE(best[i], best[i - 1]);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(a.trace[i].objective, b.trace[i].objective);
  EXPECT_EQ(a.best.w, b.best.w);
  EXPECT_TRUE(a.best.domain.contains(a.best.w));
}

TEST(SparseMeanPgd, WeightLeavesExtremeCluster) {
  // 10% of the samples sit together far out along a 3-sparse direction.
  const Index d = 20, n = 400;
  auto data = gen_sparse_mean_data(d, 3, n, 55, {0.0, {}});
  Vector dir = Vector::Zero(d);
  dir.head(3).setConstant(1.0 / std::sqrt(3.0));
  Rng rng(56);
  const auto bad = rng.sample_without_replacement(n, n / 10);
  for (Index i : bad) data.x.col(i) = 8.0 * dir + 0.1 * rng.normal_vector(d);
  SparseMeanConfig cfg;
  cfg.k = 3;
  cfg.eps = 0.1;
  const auto result = pgd_sparse_mean(data.x, cfg);
  double mass = 0.0;
  for (Index i : bad) mass += result.best.w[i];
  EXPECT_LT(mass, cfg.eps / 2.0);
}

TEST(MedianPrune, Cases) {
  const Matrix same = Vector{{1.0, -2.0, 3.0}}.replicate(1, 5);
  const auto kept = median_prune(same, 4.0);
  EXPECT_EQ(kept.samples.cols(), 5);
  EXPECT_EQ(kept.shift, Vector(same.col(0)));

  Rng rng(57);
  Matrix x = fixtures::gaussian_matrix(rng, 3, 50);
  x.col(17).setConstant(1e6 * std::sqrt(3.0 * std::log(3.0)));
  const auto pr = median_prune(x, 4.0);
  EXPECT_EQ(pr.samples.cols(), 49);
  for (Index i = 0; i < 50; ++i) EXPECT_EQ(pr.kept[static_cast<std::size_t>(i)], i != 17);

  const Matrix g = fixtures::gaussian_matrix(rng, 50, 1000);
  EXPECT_GE(median_prune(g, 4.0).samples.cols(), 990);
}

TEST(Truncate, Examples) {
  EXPECT_EQ(truncate_topk(Vector{{1.0, -3.0, 2.0}}, 1), (Vector{{0.0, -3.0, 0.0}}));
  const Vector sparse{{0.0, 5.0, 0.0, -1.0}};
  EXPECT_EQ(truncate_topk(sparse, 2), sparse);
}

TEST(Truncate, RobustToDenseNoise) {
  Rng rng(58);
  for (int t = 0; t < 1000; ++t) {
    const Index d = 3 + static_cast<Index>(rng.below(20));
    const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(d)));
    const Vector x = fixtures::sparse_unit(rng, d, k) * (5.0 * rng.uniform());
    const Vector y = x + fixtures::gaussian_vector(rng, d) * rng.uniform();
    const double delta = topk_vector_norm(x - y, k).value;
    EXPECT_LE((x - truncate_topk(y, k)).norm(), std::sqrt(5.0) * delta);
  }
}

TEST(EstimateSparseMean, CleanDataCloseToSampleMean) {
  const auto data = gen_sparse_mean_data(30, 3, 3000, 59);
  SparseMeanConfig cfg;
  cfg.k = 3;
  cfg.eps = 0.05;
  cfg.iterations = 300;
  const auto r = estimate_sparse_mean(data.x, cfg);
  const double sample_err = (data.x.rowwise().mean() - data.truth.mu).norm();
  EXPECT_LE((r.mu_hat - data.truth.mu).norm(), 2.0 * sample_err);
  EXPECT_LE((r.mu_hat.array() != 0.0).count(), 3);
}

TEST(EstimateSparseMean, IdenticalSamplesGiveMuExactly) {
  Vector mu = Vector::Zero(6);
  mu[1] = 1.5;
  mu[4] = -2.25;
  const Matrix x = mu.replicate(1, 16);
  for (bool prune : {false, true}) {
    SparseMeanConfig cfg;
    cfg.k = 2;
    cfg.eps = 0.2;
    cfg.iterations = 50;
    cfg.prune = prune;
    EXPECT_EQ(estimate_sparse_mean(x, cfg).mu_hat, mu);
  }
}

TEST(SparseMeanConfig, Validation) {
  SparseMeanConfig cfg;
  cfg.eps = 0.4;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.eps = 0.1;
  cfg.k = 0;
  EXPECT_THROW(cfg.validate(), Error);
}
