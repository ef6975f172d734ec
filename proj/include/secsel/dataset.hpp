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

#ifndef SECSEL_DATASET_HPP_
#define SECSEL_DATASET_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace secsel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// One selectable sensor m_j with d_j output channels, evaluated on every
// sampled state (values is N x d_j).
struct SensorGroup {
  int id = 0;
  Matrix values;

  Index dim() const { return values.cols(); }
};

// N sampled states x_i with targets g(x_i) and grouped measurements.
// Row i of every matrix refers to the same state.
struct DataSet {
  std::string name;
  Matrix points;   // N x n
  Matrix targets;  // N x q (q may be 0 until targets are assigned)
  std::vector<SensorGroup> sensors;
  // Hidden generator parameters (phases, torus angles), kept for diagnostics.
  Matrix latent;
  std::vector<std::string> latent_names;

  Index size() const { return points.rows(); }
  Index sensor_count() const { return static_cast<Index>(sensors.size()); }
  Index target_dim() const { return targets.cols(); }
};

// Checks the shape invariants; require_targets also enforces q >= 1.
void validate(const DataSet& ds, bool require_targets = true);

// Concatenated measurements of the listed sensors (N x d_S).
Matrix stack_measurements(const DataSet& ds, const std::vector<int>& sensors);
Matrix stack_all_measurements(const DataSet& ds);

// Registers every column of `columns` as its own scalar sensor group.
std::vector<SensorGroup> scalar_sensors(const Matrix& columns);

struct NetReport {
  double radius = 0.0;
  std::vector<Index> cover_indices;
};

/// Toy circle: x_{2k-1} = a_{2k-1} sqrt(2) cos(k theta),
/// x_{2k} = a_{2k} sqrt(2) sin(k theta), with g(x) = x and one scalar sensor
/// per coordinate. `scales` may be empty for unit scales.
DataSet toy_circle_from_phases(int n, const Vector& phases, const Vector& scales);
DataSet generate_toy_circle(int n, Index samples, const Vector& scales, std::uint64_t seed);

/// Torus ((5 + cos t2) cos t1, (5 + cos t2) sin t1, sin t2). Targets are left
/// empty; sensors are the three ambient coordinates.
DataSet torus_from_angles(const Vector& theta1, const Vector& theta2);
DataSet generate_torus(Index samples, std::uint64_t seed);

/// Greedy farthest-point cover: every point lies strictly within `radius` of
/// a cover point. The first cover point is row 0.
NetReport build_epsilon_net(const Matrix& points, double radius);

// Largest distance from any point to its nearest cover point.
double net_coverage_radius(const Matrix& points, const std::vector<Index>& cover);

DataSet add_gaussian_noise(const DataSet& ds, double sigma, std::uint64_t seed);

/// Replaces each target row by the mean target of its k nearest neighbours
/// in the full measurement space (self included, ties to the lower index).
DataSet smooth_targets(const DataSet& ds, Index k);

// k nearest rows of `data` to row `i` (self included), ascending distance,
// ties broken by lower index.
std::vector<Index> nearest_rows(const Matrix& data, Index i, Index k);

}  // namespace secsel

#endif  // SECSEL_DATASET_HPP_
