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

#include "secsel/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "secsel/error.hpp"

namespace secsel {

void validate(const DataSet& ds, bool require_targets) {
  const Index n = ds.size();
  require(n >= 2, "data set needs at least 2 states");
  require(ds.targets.rows() == n || (ds.targets.size() == 0 && !require_targets),
          "targets row count differs from points");
  if (require_targets) require(ds.targets.cols() >= 1, "data set has no targets");
  for (std::size_t j = 0; j < ds.sensors.size(); ++j) {
    const SensorGroup& s = ds.sensors[j];
    require(s.values.rows() == n, "sensor " + std::to_string(j) + " row count differs");
    require(s.dim() >= 1, "sensor " + std::to_string(j) + " has no channels");
  }
  require(ds.latent.size() == 0 || ds.latent.rows() == n, "latent row count differs");
}

Matrix stack_measurements(const DataSet& ds, const std::vector<int>& sensors) {
  Index cols = 0;
  for (int j : sensors) {
    require(j >= 0 && j < ds.sensor_count(), "sensor index out of range");
    cols += ds.sensors[j].dim();
  }
  Matrix out(ds.size(), cols);
  Index c = 0;
  for (int j : sensors) {
    const Matrix& v = ds.sensors[j].values;
    out.middleCols(c, v.cols()) = v;
    c += v.cols();
  }
  return out;
}

Matrix stack_all_measurements(const DataSet& ds) {
  std::vector<int> all(ds.sensors.size());
  std::iota(all.begin(), all.end(), 0);
  return stack_measurements(ds, all);
}

std::vector<SensorGroup> scalar_sensors(const Matrix& columns) {
  std::vector<SensorGroup> out;
  out.reserve(columns.cols());
  for (Index c = 0; c < columns.cols(); ++c) {
    out.push_back(SensorGroup{static_cast<int>(c), columns.col(c)});
  }
  return out;
}

DataSet toy_circle_from_phases(int n, const Vector& phases, const Vector& scales) {
  require(n >= 2 && n % 2 == 0, "toy circle dimension must be even and positive");
  require(phases.size() >= 2, "toy circle needs at least 2 samples");
  Vector alpha = scales.size() == 0 ? Vector::Ones(n) : scales;
  require(alpha.size() == n, "scales length must equal n");
  require((alpha.array() > 0.0).all(), "scales must be positive");

  const Index samples = phases.size();
  Matrix x(samples, n);
  for (Index i = 0; i < samples; ++i) {
    for (int k = 1; k <= n / 2; ++k) {
      x(i, 2 * k - 2) = alpha(2 * k - 2) * std::numbers::sqrt2 * std::cos(k * phases(i));
      x(i, 2 * k - 1) = alpha(2 * k - 1) * std::numbers::sqrt2 * std::sin(k * phases(i));
    }
  }
  DataSet ds;
  ds.name = "toy-circle";
  ds.points = x;
  ds.targets = x;
  ds.sensors = scalar_sensors(x);
  ds.latent = phases;
  ds.latent_names = {"theta"};
  return ds;
}

DataSet generate_toy_circle(int n, Index samples, const Vector& scales, std::uint64_t seed) {
  require(samples >= 2, "toy circle needs at least 2 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  Vector theta(samples);
  for (Index i = 0; i < samples; ++i) theta(i) = phase(rng);
  return toy_circle_from_phases(n, theta, scales);
}

DataSet torus_from_angles(const Vector& theta1, const Vector& theta2) {
  require(theta1.size() == theta2.size(), "angle vectors differ in length");
  require(theta1.size() >= 2, "torus needs at least 2 samples");
  const Index samples = theta1.size();
  Matrix x(samples, 3);
  for (Index i = 0; i < samples; ++i) {
    const double ring = 5.0 + std::cos(theta2(i));
    x(i, 0) = ring * std::cos(theta1(i));
    x(i, 1) = ring * std::sin(theta1(i));
    x(i, 2) = std::sin(theta2(i));
  }
  DataSet ds;
  ds.name = "torus";
  ds.points = x;
  ds.targets = Matrix(samples, 0);
  ds.sensors = scalar_sensors(x);
  ds.latent.resize(samples, 2);
  ds.latent.col(0) = theta1;
  ds.latent.col(1) = theta2;
  ds.latent_names = {"theta1", "theta2"};
  return ds;
}

DataSet generate_torus(Index samples, std::uint64_t seed) {
  require(samples >= 2, "torus needs at least 2 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Vector t1(samples), t2(samples);
  for (Index i = 0; i < samples; ++i) {
    t1(i) = angle(rng);
    t2(i) = angle(rng);
  }
  return torus_from_angles(t1, t2);
}

NetReport build_epsilon_net(const Matrix& points, double radius) {
  require(radius > 0.0, "net radius must be positive");
  require(points.rows() >= 1, "net needs at least one point");
  const Index n = points.rows();
  NetReport net{radius, {0}};
  Vector dist = (points.rowwise() - points.row(0)).rowwise().norm();
  while (true) {
    Index far = 0;
    const double worst = dist.maxCoeff(&far);
    if (worst < radius) break;
    net.cover_indices.push_back(far);
    for (Index i = 0; i < n; ++i) {
      dist(i) = std::min(dist(i), (points.row(i) - points.row(far)).norm());
    }
  }
  return net;
}

double net_coverage_radius(const Matrix& points, const std::vector<Index>& cover) {
  require(!cover.empty(), "empty cover");
  double worst = 0.0;
  for (Index i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Index c : cover) best = std::min(best, (points.row(i) - points.row(c)).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

DataSet add_gaussian_noise(const DataSet& ds, double sigma, std::uint64_t seed) {
  require(sigma >= 0.0, "noise sigma must be nonnegative");
  DataSet out = ds;
  if (sigma == 0.0) return out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  auto perturb = [&](Matrix& m) {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index c = 0; c < m.cols(); ++c) m(i, c) += noise(rng);
  };
  for (SensorGroup& s : out.sensors) perturb(s.values);
  perturb(out.targets);
  return out;
}

std::vector<Index> nearest_rows(const Matrix& data, Index i, Index k) {
  const Index n = data.rows();
  Vector d2 = (data.rowwise() - data.row(i)).rowwise().squaredNorm();
  d2(i) = -1.0;  // self first even among duplicates
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  auto closer = [&](Index a, Index b) { return d2(a) < d2(b) || (d2(a) == d2(b) && a < b); };
  std::partial_sort(order.begin(), order.begin() + k, order.end(), closer);
  order.resize(k);
  return order;
}

DataSet smooth_targets(const DataSet& ds, Index k) {
  validate(ds);
  require(k >= 1 && k <= ds.size(), "smoothing k must satisfy 1 <= k <= N");
  const Matrix meas = stack_all_measurements(ds);
  DataSet out = ds;
  for (Index i = 0; i < ds.size(); ++i) {
    const std::vector<Index> nn = nearest_rows(meas, i, k);
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(ds.target_dim());
    for (Index j : nn) mean += ds.targets.row(j);
    out.targets.row(i) = mean / static_cast<double>(k);
  }
  return out;
}

}  // namespace secsel
