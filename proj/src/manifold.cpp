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

#include "secsel/manifold.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "secsel/error.hpp"
#include "secsel/parallel.hpp"

namespace secsel {

PCAModel weighted_pca(const Matrix& data, const Vector& weights, Index r) {
  const Index n = data.cols();
  require(data.rows() >= 1 && n >= 1, "PCA needs a nonempty data matrix");
  const Vector w = weights.size() == 0 ? Vector::Ones(n) : weights;
  require(w.size() == n, "weights length must equal the state dimension");
  require((w.array() > 0.0).all(), "weights must be strictly positive");
  require(r >= 1 && r <= std::min(data.rows(), n), "PCA rank out of range");

  PCAModel model;
  model.weights = w;
  model.samples = data.rows();
  model.mean = data.colwise().mean().transpose();
  const Vector sqrt_w = w.array().sqrt();
  // Rows are samples: (Z - mean) W^{1/2} = V S U~^T.
  const Matrix scaled = (data.rowwise() - model.mean.transpose()) * sqrt_w.asDiagonal();
  Eigen::BDCSVD<Matrix> svd(scaled, Eigen::ComputeThinV);
  model.singular_values = svd.singularValues().head(r);
  model.modes = sqrt_w.cwiseInverse().asDiagonal() * svd.matrixV().leftCols(r);
  return model;
}

Matrix pca_coefficients(const PCAModel& model, const Matrix& data) {
  require(data.cols() == model.mean.size(), "data width differs from the PCA model");
  return (data.rowwise() - model.mean.transpose()) * model.weights.asDiagonal() * model.modes;
}

Matrix pca_reconstruct(const PCAModel& model, const Matrix& coefficients) {
  require(coefficients.cols() == model.rank(), "coefficient width differs from the PCA rank");
  return (coefficients * model.modes.transpose()).rowwise() + model.mean.transpose();
}

double variance_fraction_bound(const PCAModel& model, Index d) {
  require(d >= 1 && d <= model.rank(), "variance fraction index out of range");
  const Vector s2 = model.singular_values.array().square();
  const double total = s2.sum();
  if (total == 0.0) return 1.0;
  return s2.head(d).sum() / total;
}

NeighborGraph knn_graph(const Matrix& points, Index k) {
  const Index n = points.rows();
  require(k >= 1 && k < n, "k_neighbors must satisfy 1 <= k < N");
  std::vector<std::vector<Index>> lists(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const std::vector<Index> nn = nearest_rows(points, static_cast<Index>(i), k + 1);
    lists[i].assign(nn.begin() + 1, nn.end());
  });
  NeighborGraph graph;
  graph.adjacency.resize(n);
  std::vector<std::vector<Index>> sym(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j : lists[i]) {
      sym[i].push_back(j);
      sym[j].push_back(i);
    }
  }
  for (Index i = 0; i < n; ++i) {
    std::sort(sym[i].begin(), sym[i].end());
    sym[i].erase(std::unique(sym[i].begin(), sym[i].end()), sym[i].end());
    for (Index j : sym[i]) {
      graph.adjacency[i].emplace_back(j, (points.row(i) - points.row(j)).norm());
    }
  }
  return graph;
}

std::vector<Index> connected_components(const NeighborGraph& graph, Index* count) {
  const Index n = graph.size();
  std::vector<Index> label(n, -1);
  Index next = 0;
  std::vector<Index> stack;
  for (Index s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : graph.adjacency[u]) {
        if (label[v] < 0) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

Matrix geodesic_distances(const NeighborGraph& graph) {
  const Index n = graph.size();
  Index components = 0;
  connected_components(graph, &components);
  if (components > 1) {
    throw Error(ErrorCode::kGraphDisconnected,
                "neighbour graph has " + std::to_string(components) + " components");
  }
  Matrix dist(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t src) {
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[src] = 0.0;
    heap.emplace(0.0, static_cast<Index>(src));
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > d[u]) continue;
      for (const auto& [v, w] : graph.adjacency[u]) {
        const double alt = du + w;
        if (alt < d[v]) {
          d[v] = alt;
          heap.emplace(alt, v);
        }
      }
    }
    for (Index j = 0; j < n; ++j) dist(static_cast<Index>(src), j) = d[j];
  });
  // Dijkstra from each end can differ in the last bit; keep the matrix symmetric.
  const Matrix sym = 0.5 * (dist + dist.transpose());
  return sym;
}

Matrix centered_gram(const Matrix& distances) {
  require(distances.rows() == distances.cols(), "distance matrix must be square");
  Matrix b = distances.array().square().matrix() * -0.5;
  const Vector row_mean = b.rowwise().mean();
  const Vector col_mean = b.colwise().mean().transpose();
  const double grand = b.mean();
  b.colwise() -= row_mean;
  b.rowwise() -= col_mean.transpose();
  b.array() += grand;
  return b;
}

IsomapEmbedding classical_mds(const Matrix& distances, Index r) {
  const Index n = distances.rows();
  require(r >= 1 && r <= n, "embedding dimension out of range");
  const Matrix gram = centered_gram(distances);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidArgument, "MDS eigen-decomposition failed");
  }
  // Eigen returns ascending eigenvalues.
  const Vector& values = eig.eigenvalues();
  const double top = values(n - 1);
  const double floor = top > 0.0 ? 1e-10 * top : 0.0;
  Index positive = 0;
  while (positive < n && values(n - 1 - positive) > floor) ++positive;

  IsomapEmbedding emb;
  const Index kept = std::min(r, positive);
  emb.truncated = kept < r;
  emb.eigenvalues.resize(kept);
  emb.coordinates.resize(n, kept);
  for (Index c = 0; c < kept; ++c) {
    const double lambda = values(n - 1 - c);
    Vector v = eig.eigenvectors().col(n - 1 - c);
    Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0.0) v = -v;
    emb.eigenvalues(c) = lambda;
    emb.coordinates.col(c) = v * std::sqrt(lambda);
  }
  return emb;
}

IsomapEmbedding isomap(const Matrix& points, Index k_neighbors, Index r, std::uint64_t /*seed*/) {
  require(points.rows() >= 2, "Isomap needs at least 2 points");
  const NeighborGraph graph = knn_graph(points, k_neighbors);
  IsomapEmbedding emb = classical_mds(geodesic_distances(graph), r);
  emb.k_neighbors = k_neighbors;
  return emb;
}

DataSet assign_targets_from_embedding(const DataSet& ds, const IsomapEmbedding& emb,
                                      const std::vector<Index>& columns, bool register_sensors) {
  require(emb.coordinates.rows() == ds.size(), "embedding row count differs from data set");
  require(!columns.empty(), "no embedding columns selected");
  Matrix chosen(ds.size(), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c] >= 0 && columns[c] < emb.coordinates.cols(),
            "embedding column " + std::to_string(columns[c]) + " out of range");
    chosen.col(static_cast<Index>(c)) = emb.coordinates.col(columns[c]);
  }
  DataSet out = ds;
  out.targets = chosen;
  if (register_sensors) out.sensors = scalar_sensors(chosen);
  return out;
}

}  // namespace secsel
