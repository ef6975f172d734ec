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

#include "secsel/evaluate.hpp"

#include <cmath>
#include <limits>

#include "secsel/error.hpp"
#include "secsel/parallel.hpp"

namespace secsel {
namespace {

// Index of the training row nearest to `q`, skipping `skip`; lowest index on
// ties.
Index nearest_row(const Matrix& train, const Eigen::Ref<const Eigen::RowVectorXd>& q, Index skip) {
  Index best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < train.rows(); ++i) {
    if (i == skip) continue;
    const double d2 = (train.row(i) - q).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

}  // namespace

Matrix nn_reconstruct(const DataSet& train, const std::vector<int>& sensors, const Matrix& query) {
  validate(train);
  const Matrix meas = stack_measurements(train, sensors);
  require(query.cols() == meas.cols(), "query has " + std::to_string(query.cols()) +
                                           " columns, selection has " +
                                           std::to_string(meas.cols()));
  Matrix out(query.rows(), train.target_dim());
  parallel_for(static_cast<std::size_t>(query.rows()), [&](std::size_t r) {
    const Index q = static_cast<Index>(r);
    out.row(q) = train.targets.row(nearest_row(meas, query.row(q), -1));
  });
  return out;
}

Matrix nn_reconstruct_loo(const DataSet& train, const std::vector<int>& sensors) {
  validate(train);
  const Matrix meas = stack_measurements(train, sensors);
  Matrix out(train.size(), train.target_dim());
  parallel_for(static_cast<std::size_t>(train.size()), [&](std::size_t r) {
    const Index q = static_cast<Index>(r);
    out.row(q) = train.targets.row(nearest_row(meas, meas.row(q), q));
  });
  return out;
}

double r_squared(const Matrix& pred, const Matrix& truth) {
  require(pred.rows() == truth.rows() && pred.cols() == truth.cols(),
          "prediction and truth shapes differ");
  require(truth.rows() >= 1, "need at least one row");
  const Eigen::RowVectorXd mean = truth.colwise().mean();
  const double total = (truth.rowwise() - mean).squaredNorm();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kUndefinedVariance, "truth has zero total variance");
  }
  return 1.0 - (pred - truth).squaredNorm() / total;
}

Matrix LinearEstimator::predict(const Matrix& inputs) const {
  require(inputs.cols() == coef.rows(), "input width differs from the fitted estimator");
  return (inputs * coef).rowwise() + intercept.transpose();
}

LinearEstimator fit_linear_estimator(const Matrix& inputs, const Matrix& outputs) {
  require(inputs.rows() == outputs.rows() && inputs.rows() >= 1, "row counts differ");
  const Eigen::RowVectorXd x_mean = inputs.colwise().mean();
  const Eigen::RowVectorXd y_mean = outputs.colwise().mean();
  const Matrix xc = inputs.rowwise() - x_mean;
  const Matrix yc = outputs.rowwise() - y_mean;
  LinearEstimator est;
  est.coef = xc.completeOrthogonalDecomposition().solve(yc);
  est.intercept = (y_mean - x_mean * est.coef).transpose();
  return est;
}

Index undetectable_pair_count(const DataSet& ds, const SecantSet& secants,
                              const std::vector<int>& sensors, double gamma, double eps) {
  require(gamma > 0.0 && eps > 0.0, "gamma and eps must be positive");
  const Vector m2 = measurement_gap2(ds, secants, sensors);
  const double gamma2 = gamma * gamma;
  const double eps2 = eps * eps;
  Index count = 0;
  for (Index p = 0; p < secants.size(); ++p) {
    if (secants.target_gap2(p) >= eps2 && m2(p) < gamma2) ++count;
  }
  return count;
}

double empirical_lipschitz(const Matrix& inputs, const Matrix& outputs) {
  require(inputs.rows() == outputs.rows(), "row counts differ");
  const Index n = inputs.rows();
  std::vector<double> row_max(n, 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t r) {
    const Index i = static_cast<Index>(r);
    double best = 0.0;
    for (Index j = i + 1; j < n; ++j) {
      const double dx = (inputs.row(i) - inputs.row(j)).squaredNorm();
      const double dy = (outputs.row(i) - outputs.row(j)).squaredNorm();
      if (dx > 0.0) {
        best = std::max(best, std::sqrt(dy / dx));
      } else if (dy > 0.0) {
        best = std::numeric_limits<double>::infinity();
      }
    }
    row_max[i] = best;
  });
  double best = 0.0;
  for (double v : row_max) best = std::max(best, v);
  return best;
}

SeparationVerdict verify_separation_guarantee(const DataSet& net, const std::vector<int>& sensors,
                                              const SeparationHypotheses& h,
                                              const Matrix& test_measurements,
                                              const Matrix& test_targets) {
  require(h.gamma > 0.0 && h.eps > 0.0, "gamma and eps must be positive");
  require(h.eps0 >= 0.0 && h.lip_m >= 0.0 && h.lip_g >= 0.0 && h.delta_u >= 0.0 &&
              h.delta_v >= 0.0,
          "net fineness, Lipschitz estimates and noise bounds must be nonnegative");
  require(test_measurements.rows() == test_targets.rows(), "test row counts differ");
  SeparationVerdict v;
  v.net_violations = undetectable_pair_count(net, build_secants_all(net), sensors, h.gamma, h.eps);
  v.target_threshold = h.eps + 2.0 * h.delta_v + 2.0 * h.eps0 * h.lip_g;
  v.measurement_threshold = h.gamma - 2.0 * h.delta_u - 2.0 * h.eps0 * h.lip_m;
  const Index n = test_measurements.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      ++v.tested_pairs;
      if ((test_targets.row(i) - test_targets.row(j)).norm() < v.target_threshold) continue;
      ++v.applicable_pairs;
      if ((test_measurements.row(i) - test_measurements.row(j)).norm() <= v.measurement_threshold) {
        ++v.violations;
      }
    }
  }
  return v;
}

SelectionReport make_selection_report(const DataSet& ds, const SecantSet& secants,
                                      const std::vector<int>& sensors, double gamma, double eps) {
  SelectionReport r;
  r.selection = sensors;
  r.gamma = gamma;
  r.eps = eps;
  r.undetectable_pairs = undetectable_pair_count(ds, secants, sensors, gamma, eps);
  r.lipschitz_proxy = lipschitz_proxy(ds, secants, sensors);
  if (!sensors.empty()) {
    try {
      r.r_squared = r_squared(nn_reconstruct_loo(ds, sensors), ds.targets);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefinedVariance) throw;
    }
  }
  return r;
}

}  // namespace secsel
