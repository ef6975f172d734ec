// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "secsel/dataset.hpp"
#include "secsel/error.hpp"
#include "secsel/manifold.hpp"

namespace secsel {
namespace {

Matrix circle(Index n, double radius) {
  Matrix pts(n, 2);
  for (Index i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts(i, 0) = radius * std::cos(t);
    pts(i, 1) = radius * std::sin(t);
  }
  return pts;
}

TEST(WeightedPca, UnitToyHasEqualSingularValues) {
  // Evenly spaced phases realise the isotropic covariance exactly.
  const Vector phases = Vector::LinSpaced(20000, 0.0, 2.0 * std::numbers::pi * (1.0 - 1.0 / 20000));
  const DataSet ds = toy_circle_from_phases(10, phases, Vector());
  const PCAModel pca = weighted_pca(ds.points, Vector(), 10);
  const Vector& s = pca.singular_values;
  EXPECT_LT((s.maxCoeff() - s.minCoeff()) / s.maxCoeff(), 0.02);
  EXPECT_NEAR(variance_fraction_bound(pca, 2), 0.2, 0.02);
  EXPECT_DOUBLE_EQ(variance_fraction_bound(pca, 10), 1.0);
}

TEST(WeightedPca, SampledUnitToySpreadStaysInsideMarchenkoPasturEdge) {
  // Random phases: eigenvalues of the sample covariance fill [(1-√c)², (1+√c)²], c = n/N,
  // so singular values spread by about 2√c relative.
  const DataSet ds = generate_toy_circle(10, 20000, Vector(), 3);
  const PCAModel pca = weighted_pca(ds.points, Vector(), 10);
  const Vector& s = pca.singular_values;
  const double edge = 2.0 * std::sqrt(10.0 / 20000.0);
  EXPECT_LT((s.maxCoeff() - s.minCoeff()) / s.maxCoeff(), 1.5 * edge);
  EXPECT_NEAR(variance_fraction_bound(pca, 2), 0.2, 0.02);
}

TEST(WeightedPca, ScaledToyFractionIsEightTenths) {
  Vector scales(4);
  scales << 1, 1, 2, 2;
  const DataSet ds = generate_toy_circle(4, 20000, scales, 3);
  const PCAModel pca = weighted_pca(ds.points, Vector(), 4);
  EXPECT_NEAR(variance_fraction_bound(pca, 2), 0.8, 0.02);
}

TEST(WeightedPca, RepeatedRowHasZeroSpectrum) {
  Matrix data = Matrix::Ones(10, 1) * (Eigen::RowVectorXd(3) << 1, -2, 3).finished();
  const PCAModel pca = weighted_pca(data, Vector(), 3);
  EXPECT_EQ(pca.singular_values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(WeightedPca, RankOneDataHasOneNonzeroValue) {
  const Vector a = Vector::LinSpaced(30, -1.0, 2.0);
  const Vector v = (Vector(4) << 1, 2, -1, 0.5).finished();
  const PCAModel pca = weighted_pca(a * v.transpose(), Vector(), 4);
  EXPECT_GT(pca.singular_values(0), 1.0);
  EXPECT_LT(pca.singular_values.tail(3).maxCoeff(), 1e-12 * pca.singular_values(0));
}

TEST(WeightedPca, ModesAreWeightOrthonormalAndSorted) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  Vector w(6);
  for (Index i = 0; i < 6; ++i) w(i) = u(rng);
  const Matrix data = Matrix::Random(50, 6);
  const PCAModel pca = weighted_pca(data, w, 4);
  const Matrix gram = pca.modes.transpose() * w.asDiagonal() * pca.modes;
  EXPECT_LT((gram - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-8);
  for (Index k = 1; k < 4; ++k) EXPECT_GE(pca.singular_values(k - 1), pca.singular_values(k));
}

TEST(WeightedPca, ResidualMatchesDiscardedSpectrum) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Index n = 12, samples = 300, rank = 4;
  Matrix low(samples, rank), mix(rank, n), noise(samples, n);
  for (Index i = 0; i < low.size(); ++i) low.data()[i] = 3.0 * normal(rng);
  for (Index i = 0; i < mix.size(); ++i) mix.data()[i] = normal(rng);
  for (Index i = 0; i < noise.size(); ++i) noise.data()[i] = 0.1 * normal(rng);
  const Matrix data = low * mix + noise;
  Vector w = Vector::LinSpaced(n, 0.5, 2.0);

  const PCAModel full = weighted_pca(data, w, n);
  const PCAModel pca = weighted_pca(data, w, rank);
  const Matrix recon = pca_reconstruct(pca, pca_coefficients(pca, data));
  const Matrix resid = data - recon;
  const double weighted = (resid.array().square().rowwise() * w.transpose().array()).sum() /
                          static_cast<double>(samples);
  const double tail = full.singular_values.tail(n - rank).squaredNorm() / static_cast<double>(samples);
  EXPECT_NEAR(weighted, tail, 1e-6 * tail);
}

TEST(WeightedPca, RejectsBadArguments) {
  const Matrix data = Matrix::Random(5, 3);
  EXPECT_THROW(weighted_pca(data, Vector::Ones(3) * -1.0, 2), Error);
  EXPECT_THROW(weighted_pca(data, Vector(), 4), Error);
  const PCAModel pca = weighted_pca(data, Vector(), 2);
  EXPECT_THROW(variance_fraction_bound(pca, 0), Error);
  EXPECT_THROW(variance_fraction_bound(pca, 3), Error);
}

TEST(Geodesics, CycleGraphGivesPolygonArcLengths) {
  const Index n = 40;
  const double radius = 2.5;
  const Matrix pts = circle(n, radius);
  const Matrix d = geodesic_distances(knn_graph(pts, 2));
  const double chord = 2.0 * radius * std::sin(std::numbers::pi / static_cast<double>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index hops = std::min(std::abs(i - j), n - std::abs(i - j));
      EXPECT_NEAR(d(i, j), static_cast<double>(hops) * chord, 1e-9);
    }
  }
}

TEST(Geodesics, DisconnectedGraphNamesComponentCount) {
  Matrix pts(7, 1);
  pts << 0, 0.1, 0.2, 100, 100.1, 200, 200.1;
  try {
    geodesic_distances(knn_graph(pts, 1));
    FAIL() << "expected graph-disconnected";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGraphDisconnected);
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
  Index count = 0;
  connected_components(knn_graph(pts, 1), &count);
  EXPECT_EQ(count, 3);
}

TEST(Isomap, CenteredGramRowsSumToZero) {
  const Matrix pts = circle(50, 1.0);
  const Matrix g = centered_gram(geodesic_distances(knn_graph(pts, 3)));
  EXPECT_LT(g.rowwise().sum().cwiseAbs().maxCoeff(), 1e-8 * std::max(1.0, g.cwiseAbs().maxCoeff()));
}

TEST(Isomap, CircleEmbeddingIsInjectiveInAngle) {
  const Index n = 120;
  const Matrix pts = circle(n, 1.0);
  const IsomapEmbedding emb = isomap(pts, 4, 2);
  ASSERT_EQ(emb.coordinates.cols(), 2);
  double min_dist = 1e300;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      min_dist = std::min(min_dist, (emb.coordinates.row(i) - emb.coordinates.row(j)).norm());
  ASSERT_GT(min_dist, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Index hops = std::min(j - i, n - (j - i));
      if (hops <= 1) continue;  // angle gap > 2 pi / N
      EXPECT_GE((emb.coordinates.row(i) - emb.coordinates.row(j)).norm(), 0.5 * min_dist);
    }
  }
}

TEST(Isomap, ColumnsOrthogonalSortedAndSignNormalized) {
  const DataSet ds = generate_torus(400, 2);
  const IsomapEmbedding emb = isomap(ds.points, 10, 12);
  const Matrix& phi = emb.coordinates;
  const Matrix gram = phi.transpose() * phi;
  for (Index a = 0; a < gram.rows(); ++a) {
    for (Index b = 0; b < gram.cols(); ++b) {
      if (a == b) continue;
      EXPECT_LT(std::abs(gram(a, b)), 1e-6 * std::sqrt(gram(a, a) * gram(b, b)));
    }
  }
  for (Index k = 1; k < emb.eigenvalues.size(); ++k) EXPECT_GE(emb.eigenvalues(k - 1), emb.eigenvalues(k));
  for (Index k = 0; k < phi.cols(); ++k) {
    Index arg = 0;
    phi.col(k).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(phi(arg, k), 0.0);
    EXPECT_NEAR(phi.col(k).squaredNorm(), emb.eigenvalues(k), 1e-8 * emb.eigenvalues(k));
  }
  const IsomapEmbedding again = isomap(ds.points, 10, 12, 99);
  EXPECT_EQ(again.coordinates, emb.coordinates);
}

TEST(Isomap, TruncatesWhenSpectrumRunsOut) {
  // Three collinear points: the centred Gram matrix has rank 1.
  Matrix pts(3, 1);
  pts << 0, 1, 3;
  const IsomapEmbedding emb = isomap(pts, 1, 3);
  EXPECT_TRUE(emb.truncated);
  EXPECT_EQ(emb.coordinates.cols(), 1);
}

TEST(AssignTargets, CopiesColumnsAndRegistersSensors) {
  const DataSet ds = generate_torus(200, 1);
  const IsomapEmbedding emb = isomap(ds.points, 8, 6);
  const DataSet one = assign_targets_from_embedding(ds, emb, {0});
  EXPECT_EQ(one.targets.col(0), emb.coordinates.col(0));
  EXPECT_EQ(one.sensor_count(), 3);
  const DataSet all = assign_targets_from_embedding(ds, emb, {0, 1, 2, 3, 4, 5}, true);
  EXPECT_EQ(all.sensor_count(), 6);
  EXPECT_EQ(all.targets, emb.coordinates);
  for (Index j = 0; j < 6; ++j) EXPECT_EQ(all.sensors[j].values.col(0), emb.coordinates.col(j));
  EXPECT_THROW(assign_targets_from_embedding(ds, emb, {6}), Error);
}

}  // namespace
}  // namespace secsel
