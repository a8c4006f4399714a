#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsparse/norms.hpp"

using namespace rsparse;

TEST(TopkVector, PythagoreanTriple) {
  const auto r = topk_vector_norm(Vector{{3.0, -4.0, 1.0}}, 2);
  EXPECT_DOUBLE_EQ(r.value, 5.0);
  EXPECT_EQ(r.support, (IndexList{0, 1}));
}

TEST(TopkVector, ZeroVectorAndTies) {
  const auto zero = topk_vector_norm(Vector::Zero(5), 2);
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_EQ(zero.support, (IndexList{0, 1}));
  const auto tied = topk_vector_norm(Vector{{1.0, -1.0, 1.0, -1.0}}, 2);
  EXPECT_EQ(tied.support, (IndexList{0, 1}));
}

TEST(TopkVector, KAboveDimensionIsFullNorm) {
  const Vector v{{1.0, 2.0, -2.0}};
  const auto r = topk_vector_norm(v, 7);
  EXPECT_DOUBLE_EQ(r.value, 3.0);
  EXPECT_EQ(r.support.size(), 3u);
}

TEST(TopkVector, SupportDominatesOffSupport) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Vector v = fixtures::gaussian_vector(rng, 9);
    const auto r = topk_vector_norm(v, 4);
    double min_in = INFINITY, max_out = 0.0;
    for (Index i = 0; i < v.size(); ++i) {
      if (std::find(r.support.begin(), r.support.end(), i) != r.support.end()) {
        min_in = std::min(min_in, std::abs(v[i]));
      } else {
        max_out = std::max(max_out, std::abs(v[i]));
      }
    }
    EXPECT_LE(max_out, min_in);
  }
}

TEST(TopEntries, SmallCases) {
  EXPECT_DOUBLE_EQ(top_entries_norm(Matrix::Identity(3, 3), 2).value, std::sqrt(2.0));
  Matrix a = Matrix::Zero(4, 4);
  a(2, 1) = 7.0;
  const auto r = top_entries_norm(a, 4);
  EXPECT_DOUBLE_EQ(r.value, 7.0);
  ASSERT_EQ(r.support.size(), 4u);
  EXPECT_EQ(r.support.front(), (Cell{0, 0}));  // ties fill in row-major order
  EXPECT_TRUE(std::find(r.support.begin(), r.support.end(), Cell{2, 1}) != r.support.end());
}

TEST(TopEntries, MatchesEnumeration) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = fixtures::gaussian_matrix(rng, 5, 5);
    EXPECT_NEAR(top_entries_norm(a, 6).value, oracle::top_entries_norm(a, 6), 1e-12);
  }
}

TEST(Fkk, SmallCases) {
  EXPECT_DOUBLE_EQ(fkk_norm(Matrix::Identity(3, 3), 2).value, std::sqrt(2.0));
  const Vector v{{3.0, 4.0, 0.0}};
  EXPECT_NEAR(fkk_norm(v * v.transpose(), 2).value, 25.0, 1e-12);
}

TEST(Fkk, SupportShape) {
  Rng rng(8);
  const Matrix a = fixtures::gaussian_matrix(rng, 7, 7);
  const auto r = fkk_norm(a, 3);
  ASSERT_EQ(r.rows.size(), 3u);
  ASSERT_EQ(r.cols.size(), 3u);
  EXPECT_TRUE(std::is_sorted(r.rows.begin(), r.rows.end()));
  for (std::size_t j = 0; j < r.rows.size(); ++j) {
    EXPECT_EQ(r.cols[j], topk_vector_norm(a.row(r.rows[j]).transpose(), 3).support);
  }
  const CellList cells = r.cells();
  EXPECT_EQ(cells.size(), 9u);
  EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end()));
}

TEST(Fkk, MatchesDoubleEnumeration) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = fixtures::gaussian_matrix(rng, 6, 6);
    EXPECT_NEAR(fkk_norm(a, 2).value, oracle::fkk_norm(a, 2), 1e-12);
  }
}

TEST(NormProperties, MonotoneChainAndSaturation) {
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    const Index d = 2 + static_cast<Index>(rng.below(7));
    const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(d)));
    const Matrix a = fixtures::gaussian_matrix(rng, d, d);
    const double fkk = fkk_norm(a, k).value;
    const double top = top_entries_norm(a, k * k).value;
    EXPECT_LE(fkk, top + 1e-12);
    EXPECT_LE(top, a.norm() + 1e-12);
    EXPECT_NEAR(fkk_norm(a, d + 1).value, a.norm(), 1e-12);
    const Vector v = a.col(0);
    EXPECT_NEAR(topk_vector_norm(v, d).value, v.norm(), 1e-12);
  }
}

TEST(NormProperties, QuadraticFormBoundedByFkk) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Index d = 3 + static_cast<Index>(rng.below(6));
    const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(d)));
    const Matrix a = fixtures::gaussian_matrix(rng, d, d);
    const Vector v = fixtures::sparse_unit(rng, d, k);
    EXPECT_LE(std::abs(v.dot(a * v)), fkk_norm(a, k).value + 1e-12);
  }
}

TEST(NormProperties, RankOneIdentity) {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const Vector v = fixtures::gaussian_vector(rng, 8);
    const Index k = 1 + static_cast<Index>(rng.below(8));
    const double lhs = fkk_norm(v * v.transpose(), k).value;
    const double rhs = std::pow(topk_vector_norm(v, k).value, 2);
    EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
  }
}

TEST(NormProperties, SignAndPermutationInvariance) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Index d = 6;
    const Matrix a = fixtures::gaussian_matrix(rng, d, d);
    Matrix signs(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) signs(i, j) = rng.sign();
    const Matrix flipped = a.cwiseProduct(signs);
    EXPECT_NEAR(fkk_norm(flipped, 2).value, fkk_norm(a, 2).value, 1e-12);
    EXPECT_NEAR(top_entries_norm(flipped, 5).value, top_entries_norm(a, 5).value, 1e-12);
    EXPECT_NEAR(topk_vector_norm(flipped.col(0), 3).value, topk_vector_norm(a.col(0), 3).value, 1e-12);

    Eigen::PermutationMatrix<Eigen::Dynamic> perm(d);
    perm.setIdentity();
    for (Index i = d - 1; i > 0; --i) std::swap(perm.indices()[i], perm.indices()[static_cast<Index>(rng.below(i + 1))]);
    const Matrix permuted = perm * a * perm.transpose();
    EXPECT_NEAR(fkk_norm(permuted, 3).value, fkk_norm(a, 3).value, 1e-12);
  }
}

TEST(NormProperties, SupportCertifiesValueExactly) {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const Matrix a = fixtures::gaussian_matrix(rng, 7, 7);
    const auto v = topk_vector_norm(a.col(1), 3);
    EXPECT_EQ(restricted_norm(Vector(a.col(1)), v.support), v.value);
    const auto top = top_entries_norm(a, 8);
    EXPECT_EQ(restricted_norm(a, top.support), top.value);
    const auto fkk = fkk_norm(a, 3);
    EXPECT_EQ(restricted_norm(a, fkk.cells()), fkk.value);
  }
}

TEST(TopMagnitude, TiesToLowerIndex) {
  EXPECT_EQ(top_magnitude_indices(Vector{{0.0, 2.0, -2.0, 2.0}}, 2), (IndexList{1, 2}));
  EXPECT_EQ(top_magnitude_indices(Vector{{1.0, 3.0}}, 5), (IndexList{0, 1}));
}
