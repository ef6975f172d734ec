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

#ifndef SECSEL_BASELINES_HPP_
#define SECSEL_BASELINES_HPP_

#include <vector>

#include "secsel/dataset.hpp"
#include "secsel/manifold.hpp"

namespace secsel {

/// Householder QR with column pivoting on the r x M transpose of
/// `modes_rows`; returns the first K pivots in order. Each step takes the
/// column of largest residual norm, ties (within 1e-12 relative) to the lowest
/// index.
std::vector<int> pivoted_qr_select(const Matrix& modes_rows, Index k);

// Linear Gaussian sensor model in modal coordinates: m_j = M_j x + n_j with
// prior covariance C_x and isotropic per-sensor noise variance.
struct LinearSensorModel {
  std::vector<Matrix> rows;  // M_j, d_j x r
  Matrix prior_cov;          // C_x, r x r SPD
  Vector noise_var;          // sigma_j^2 > 0

  Index state_dim() const { return prior_cov.rows(); }
  Index sensor_count() const { return static_cast<Index>(rows.size()); }
};

void validate(const LinearSensorModel& model);

// Scalar sensors reading the rows of the PCA modes, prior diag(s^2 / N) and
// noise sigma^2 for every sensor.
LinearSensorModel linear_model_from_pca(const PCAModel& pca, double sigma);

struct DOptimalTrace {
  std::vector<int> chosen;
  std::vector<double> log_det;     // log det(C_x^-1 + M_S^T C_n^-1 M_S) per step
  std::vector<double> increments;  // gain of each added sensor
  double log_det_prior = 0.0;      // log det(C_x^-1)
};

/// Greedy Bayesian D-optimal selection: maximizes
/// log det(C_x^-1 + M_S^T C_n^-1 M_S) with rank-d_j posterior updates.
DOptimalTrace greedy_bayes_dopt(const LinearSensorModel& model, Index k);

// Dense log det of the posterior information matrix for a sensor set.
double information_log_det(const LinearSensorModel& model, const std::vector<int>& sensors);

}  // namespace secsel

#endif  // SECSEL_BASELINES_HPP_
