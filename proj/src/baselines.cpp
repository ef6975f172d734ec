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

#include "secsel/baselines.hpp"

#include <cmath>
#include <numeric>

#include "secsel/error.hpp"
#include "secsel/greedy.hpp"

namespace secsel {

std::vector<int> pivoted_qr_select(const Matrix& modes_rows, Index k) {
  const Index sensors = modes_rows.rows();
  const Index r = modes_rows.cols();
  require(k >= 1 && k <= std::min(sensors, r), "K must satisfy 1 <= K <= min(M, r)");

  Matrix work = modes_rows.transpose();  // r x M
  std::vector<int> order(sensors);
  std::iota(order.begin(), order.end(), 0);
  Vector scratch(sensors);
  for (Index t = 0; t < k; ++t) {
    // Residual norms of the remaining columns below row t.
    double best = -1.0;
    for (Index c = t; c < sensors; ++c) best = std::max(best, work.col(c).tail(r - t).norm());
    const double tol = 1e-12 * std::max(1.0, best);
    Index pivot = -1;
    for (Index c = t; c < sensors; ++c) {
      if (work.col(c).tail(r - t).norm() >= best - tol &&
          (pivot < 0 || order[c] < order[pivot])) {
        pivot = c;
      }
    }
    work.col(t).swap(work.col(pivot));
    std::swap(order[t], order[pivot]);

    Vector essential(r - t - 1);
    double tau = 0.0;
    double beta = 0.0;
    work.col(t).tail(r - t).makeHouseholder(essential, tau, beta);
    work.bottomRightCorner(r - t, sensors - t).applyHouseholderOnTheLeft(essential, tau, scratch.data());
  }
  order.resize(k);
  return order;
}

void validate(const LinearSensorModel& model) {
  const Index r = model.state_dim();
  require(r >= 1 && model.prior_cov.cols() == r, "prior covariance must be square");
  require((model.prior_cov - model.prior_cov.transpose()).cwiseAbs().maxCoeff() <=
              1e-10 * std::max(1.0, model.prior_cov.cwiseAbs().maxCoeff()),
          "prior covariance is not symmetric");
  Eigen::LLT<Matrix> llt(model.prior_cov);
  require(llt.info() == Eigen::Success, "prior covariance is not positive definite");
  require(model.noise_var.size() == model.sensor_count(), "one noise variance per sensor");
  require((model.noise_var.array() > 0.0).all(), "noise variances must be positive");
  for (const Matrix& row : model.rows) {
    require(row.cols() == r && row.rows() >= 1, "sensor row width differs from the state");
  }
}

LinearSensorModel linear_model_from_pca(const PCAModel& pca, double sigma) {
  require(sigma > 0.0, "sigma must be positive");
  LinearSensorModel model;
  for (Index j = 0; j < pca.modes.rows(); ++j) model.rows.push_back(pca.modes.row(j));
  const Vector var = pca.singular_values.array().square() / static_cast<double>(pca.samples);
  model.prior_cov = var.asDiagonal();
  model.noise_var = Vector::Constant(pca.modes.rows(), sigma * sigma);
  return model;
}

namespace {

// Posterior covariance P = (C_x^-1 + M_S^T C_n^-1 M_S)^-1 with gains
// log det(I + M_j P M_j^T / sigma_j^2).
class DOptimalOracle {
 public:
  explicit DOptimalOracle(const LinearSensorModel& model)
      : model_(model), posterior_(model.prior_cov) {}

  int candidates() const { return static_cast<int>(model_.sensor_count()); }

  double gain(int j) const {
    const Matrix& mj = model_.rows[j];
    const Matrix s = Matrix::Identity(mj.rows(), mj.rows()) +
                     mj * posterior_ * mj.transpose() / model_.noise_var(j);
    return Eigen::LLT<Matrix>(s).matrixLLT().diagonal().array().log().sum() * 2.0;
  }

  void commit(int j) {
    const Matrix& mj = model_.rows[j];
    const Matrix pm = posterior_ * mj.transpose();
    const Matrix s = model_.noise_var(j) * Matrix::Identity(mj.rows(), mj.rows()) + mj * pm;
    value_ += gain(j);
    posterior_ -= pm * Eigen::LLT<Matrix>(s).solve(pm.transpose());
    posterior_ = 0.5 * (posterior_ + posterior_.transpose()).eval();
  }

  double value() const { return value_; }

 private:
  const LinearSensorModel& model_;
  Matrix posterior_;
  double value_ = 0.0;
};

}  // namespace

double information_log_det(const LinearSensorModel& model, const std::vector<int>& sensors) {
  Matrix info = model.prior_cov.inverse();
  for (int j : sensors) {
    require(j >= 0 && j < model.sensor_count(), "sensor index out of range");
    info += model.rows[j].transpose() * model.rows[j] / model.noise_var(j);
  }
  Eigen::LLT<Matrix> llt(info);
  require(llt.info() == Eigen::Success, "information matrix is not positive definite");
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

DOptimalTrace greedy_bayes_dopt(const LinearSensorModel& model, Index k) {
  validate(model);
  require(k >= 1 && k <= model.sensor_count(), "K must satisfy 1 <= K <= M");
  DOptimalOracle oracle(model);
  const GreedyTrace trace = run_greedy(oracle, {k, true});
  DOptimalTrace out;
  out.chosen = trace.chosen;
  out.increments = trace.increments;
  out.log_det_prior = information_log_det(model, {});
  for (double v : trace.values) out.log_det.push_back(out.log_det_prior + v);
  return out;
}

}  // namespace secsel
