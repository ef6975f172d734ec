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

#ifndef SECSEL_EVALUATE_HPP_
#define SECSEL_EVALUATE_HPP_

#include <optional>
#include <vector>

#include "secsel/dataset.hpp"
#include "secsel/greedy.hpp"
#include "secsel/objectives.hpp"

namespace secsel {

/// For each query row (d_S columns), the target of the training state whose
/// selected measurements are nearest; ties go to the lowest training index.
Matrix nn_reconstruct(const DataSet& train, const std::vector<int>& sensors, const Matrix& query);

// Leave-one-out variant: each training state is predicted from its nearest
// other state.
Matrix nn_reconstruct_loo(const DataSet& train, const std::vector<int>& sensors);

/// 1 - sum ||pred - truth||^2 / sum ||truth - mean(truth)||^2. Throws
/// undefined-variance when truth is constant.
double r_squared(const Matrix& pred, const Matrix& truth);

// Affine least-squares map from inputs to outputs: y = intercept + x B.
struct LinearEstimator {
  Vector intercept;  // q
  Matrix coef;       // d x q
  Matrix predict(const Matrix& inputs) const;
};

LinearEstimator fit_linear_estimator(const Matrix& inputs, const Matrix& outputs);

// Secants with target gap >= eps whose selected measurements differ by less
// than gamma.
Index undetectable_pair_count(const DataSet& ds, const SecantSet& secants,
                              const std::vector<int>& sensors, double gamma, double eps);

// max ||dY|| / ||dX|| over row pairs with dX != 0; a lower bound on the
// Lipschitz constant of the map X -> Y.
double empirical_lipschitz(const Matrix& inputs, const Matrix& outputs);

struct SeparationHypotheses {
  double gamma = 1.0;
  double eps = 1.0;
  double eps0 = 0.0;     // net fineness
  double lip_m = 0.0;    // Lipschitz estimate of the selected measurements
  double lip_g = 0.0;    // Lipschitz estimate of the targets
  double delta_u = 0.0;  // bound on measurement noise norms
  double delta_v = 0.0;  // bound on target noise norms
};

struct SeparationVerdict {
  Index net_violations = 0;  // net pairs breaking the (gamma, eps) condition
  Index tested_pairs = 0;
  Index applicable_pairs = 0;  // test pairs with target gap >= target_threshold
  Index violations = 0;        // applicable pairs with gap <= measurement_threshold
  double target_threshold = 0.0;       // eps + 2 delta_v + 2 eps0 lip_g
  double measurement_threshold = 0.0;  // gamma - 2 delta_u - 2 eps0 lip_m
  bool passed() const { return net_violations == 0 && violations == 0; }
};

/// Checks the separation hypothesis on every pair of the net, then the
/// implied conclusion on every pair of test rows: target gap >= target
/// threshold must give measurement gap > measurement threshold.
SeparationVerdict verify_separation_guarantee(const DataSet& net, const std::vector<int>& sensors,
                                              const SeparationHypotheses& h,
                                              const Matrix& test_measurements,
                                              const Matrix& test_targets);

struct SelectionReport {
  std::vector<int> selection;
  std::optional<double> r_squared;  // leave-one-out nearest neighbour
  Index undetectable_pairs = 0;
  double gamma = 0.0;
  double eps = 0.0;
  double lipschitz_proxy = 0.0;  // may be +inf
  std::optional<CoverBound> bounds;
};

SelectionReport make_selection_report(const DataSet& ds, const SecantSet& secants,
                                      const std::vector<int>& sensors, double gamma, double eps);

}  // namespace secsel

#endif  // SECSEL_EVALUATE_HPP_
