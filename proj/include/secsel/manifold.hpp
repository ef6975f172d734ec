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

#ifndef SECSEL_MANIFOLD_HPP_
#define SECSEL_MANIFOLD_HPP_

#include <cstdint>
#include <vector>

#include "secsel/dataset.hpp"

namespace secsel {

// Principal components under the inner product <z, z'> = z^T diag(w) z'.
// Modes are W-orthonormal; coefficients of z are modes^T W (z - mean), and
// their empirical covariance is diag(singular_values^2) / samples.
struct PCAModel {
  Vector mean;
  Matrix modes;            // n x r
  Vector singular_values;  // r, nonincreasing
  Vector weights;          // n, positive
  Index samples = 0;

  Index rank() const { return modes.cols(); }
};

/// Economy SVD of W^{1/2} (Z - mean)^T; modes = W^{-1/2} U~.
/// `weights` may be empty for unit weights.
PCAModel weighted_pca(const Matrix& data, const Vector& weights, Index r);

Matrix pca_coefficients(const PCAModel& model, const Matrix& data);
Matrix pca_reconstruct(const PCAModel& model, const Matrix& coefficients);

// (s_1^2 + ... + s_d^2) / (s_1^2 + ... + s_r^2); upper bound on R^2 for any
// linear estimator built from d measurements.
double variance_fraction_bound(const PCAModel& model, Index d);

// Symmetrized k-nearest-neighbour graph: edge (i, j) present when either
// endpoint lists the other. Edge weight is the Euclidean distance.
struct NeighborGraph {
  std::vector<std::vector<std::pair<Index, double>>> adjacency;

  Index size() const { return static_cast<Index>(adjacency.size()); }
};

NeighborGraph knn_graph(const Matrix& points, Index k);

// Component label per node (labels 0..count-1, in order of first node).
std::vector<Index> connected_components(const NeighborGraph& graph, Index* count = nullptr);

// All-pairs shortest paths by Dijkstra from every node. Throws
// graph-disconnected when the graph has more than one component.
Matrix geodesic_distances(const NeighborGraph& graph);

struct IsomapEmbedding {
  Matrix coordinates;  // N x r, column k = eigenvector_k * sqrt(eigenvalue_k)
  Vector eigenvalues;  // r, nonincreasing, positive
  Index k_neighbors = 0;
  bool truncated = false;  // fewer positive eigenvalues than requested
};

// Classical MDS of a distance matrix: leading r eigenpairs of -1/2 H D^2 H.
IsomapEmbedding classical_mds(const Matrix& distances, Index r);

// Double-centred Gram matrix -1/2 H D^2 H.
Matrix centered_gram(const Matrix& distances);

/// Isomap with default k = 10. Columns are sign-normalized so that the entry
/// of largest magnitude is positive. `seed` is accepted for interface
/// symmetry; the computation is deterministic.
IsomapEmbedding isomap(const Matrix& points, Index k_neighbors, Index r, std::uint64_t seed = 0);

/// Targets become the chosen embedding columns. With register_sensors each
/// embedding column also becomes a scalar sensor group.
DataSet assign_targets_from_embedding(const DataSet& ds, const IsomapEmbedding& emb,
                                      const std::vector<Index>& columns,
                                      bool register_sensors = false);

}  // namespace secsel

#endif  // SECSEL_MANIFOLD_HPP_
