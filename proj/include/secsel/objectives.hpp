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

#ifndef SECSEL_OBJECTIVES_HPP_
#define SECSEL_OBJECTIVES_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "secsel/dataset.hpp"

namespace secsel {

enum class SecantKind { kAllUnordered, kSampledPairs, kBaseByAll };

std::string secant_kind_name(SecantKind kind);

// Indexed pairs of distinct states with cached ||g(x_a) - g(x_b)||^2.
// Pairs are unordered; the ordered-pair sums of the underlying objectives are
// exactly twice the values computed here.
struct SecantSet {
  std::vector<std::int32_t> first;
  std::vector<std::int32_t> second;
  Vector target_gap2;
  SecantKind kind = SecantKind::kAllUnordered;
  Index states = 0;   // N of the data set the pairs index into
  Index samples = 0;  // m for sampled kinds (pairs or base points)

  Index size() const { return static_cast<Index>(first.size()); }
};

// Builds a secant set over explicit pairs. Self-pairs are rejected.
SecantSet make_secants(const DataSet& ds, std::vector<std::int32_t> first,
                       std::vector<std::int32_t> second, SecantKind kind, Index samples = 0);

// All N(N-1)/2 unordered pairs i < j.
SecantSet build_secants_all(const DataSet& ds);

// Recomputes target gaps and checks the pair indices; throws on mismatch.
void check_secants(const DataSet& ds, const SecantSet& secants, double tol = 1e-12);

struct DetectableDiff {
  double gamma = 1.0;
};
struct Separation {
  double gamma = 1.0;
  double eps = 1.0;
};
struct Amplification {
  double lipschitz = 1.0;
};
using ObjectiveVariant = std::variant<DetectableDiff, Separation, Amplification>;

struct ObjectiveSpec {
  ObjectiveVariant variant;
  double normalization = 1.0;
};

// Throws unless every threshold and the normalization are strictly positive.
void validate(const ObjectiveSpec& spec);

// "dd", "sep" or "amp".
std::string objective_name(const ObjectiveSpec& spec);

// Averaging weight matching the secant construction: 1 for all pairs, 1/m
// for sampled pairs, 1/(mN) for base points (1 for the amplification
// variant on base points).
double default_normalization(const ObjectiveVariant& variant, const SecantSet& secants);
ObjectiveSpec make_spec(const ObjectiveVariant& variant, const SecantSet& secants);

namespace detail {

// Per-secant terms; m2 and g2 are squared measurement and target gaps.
struct DetectableTerm {
  double inv_gamma2;
  double gamma2;
  double operator()(double m2, double g2) const { return std::min(m2 * inv_gamma2, 1.0) * g2; }
  bool in_scope(double) const { return true; }
  bool saturated(double m2, double) const { return m2 >= gamma2; }
};

struct SeparationTerm {
  double inv_gamma2;
  double gamma2;
  double eps2;
  double operator()(double m2, double g2) const {
    return g2 >= eps2 ? std::min(m2 * inv_gamma2, 1.0) * g2 : 0.0;
  }
  bool in_scope(double g2) const { return g2 >= eps2; }
  bool saturated(double m2, double) const { return m2 >= gamma2; }
};

struct AmplificationTerm {
  double inv_l2;
  double l2;
  double operator()(double m2, double g2) const {
    return g2 > 0.0 ? std::min(m2 / g2, inv_l2) : 0.0;
  }
  bool in_scope(double g2) const { return g2 > 0.0; }
  bool saturated(double m2, double g2) const { return m2 * l2 >= g2; }
};

template <typename Fn>
decltype(auto) visit_term(const ObjectiveSpec& spec, Fn&& fn) {
  return std::visit(
      [&](const auto& v) -> decltype(auto) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, DetectableDiff>) {
          const double g2 = v.gamma * v.gamma;
          return fn(DetectableTerm{1.0 / g2, g2});
        } else if constexpr (std::is_same_v<V, Separation>) {
          const double g2 = v.gamma * v.gamma;
          return fn(SeparationTerm{1.0 / g2, g2, v.eps * v.eps});
        } else {
          const double l2 = v.lipschitz * v.lipschitz;
          return fn(AmplificationTerm{1.0 / l2, l2});
        }
      },
      spec.variant);
}

}  // namespace detail

// ||m_j(x_a) - m_j(x_b)||^2 for one sensor group.
inline double sensor_gap2(const SensorGroup& sensor, Index a, Index b) {
  const Matrix& v = sensor.values;
  double acc = 0.0;
  for (Index c = 0; c < v.cols(); ++c) {
    const double d = v(a, c) - v(b, c);
    acc += d * d;
  }
  return acc;
}

// ||m_S(x_a) - m_S(x_b)||^2 for every secant, summed sensor by sensor in
// the order given.
Vector measurement_gap2(const DataSet& ds, const SecantSet& secants,
                        const std::vector<int>& sensors);

struct ObjectiveValue {
  double value = 0.0;
  Index saturated = 0;  // in-scope secants whose weight has reached its cap
  Index in_scope = 0;   // secants that can contribute at all
};

ObjectiveValue evaluate_objective(const ObjectiveSpec& spec, const DataSet& ds,
                                  const SecantSet& secants, const std::vector<int>& sensors);

// Objective value from precomputed per-secant m2.
ObjectiveValue evaluate_from_gaps(const ObjectiveSpec& spec, const SecantSet& secants,
                                  const Vector& m2);

/// f(S) for the chosen variant; zero for the empty set.
double eval_objective(const ObjectiveSpec& spec, const DataSet& ds, const SecantSet& secants,
                      const std::vector<int>& sensors);

// Running per-secant accumulator for one sensor set; marginal gains touch
// only the candidate sensor's gaps.
struct IncrementalState {
  ObjectiveSpec spec;
  std::vector<int> active;
  Vector per_secant_m2;
  double current_value = 0.0;

  bool contains(int j) const { return std::find(active.begin(), active.end(), j) != active.end(); }
};

IncrementalState make_incremental_state(const ObjectiveSpec& spec, const SecantSet& secants);

double marginal_gain(const IncrementalState& state, const DataSet& ds, const SecantSet& secants,
                     int sensor);

void commit_sensor(IncrementalState& state, const DataSet& ds, const SecantSet& secants,
                   int sensor);

// F_inf: sum of squared target gaps.
double total_fluctuation(const SecantSet& secants, double normalization = 1.0);

// F_gamma(S): squared target gaps over secants whose measurement gap is < gamma.
double undetectable_differences(const DataSet& ds, const SecantSet& secants,
                                const std::vector<int>& sensors, double gamma);

// f~_gamma(S): the hard-indicator counterpart, F_inf - F_gamma(S).
double detectable_differences_hard(const DataSet& ds, const SecantSet& secants,
                                   const std::vector<int>& sensors, double gamma);

struct RelaxationBounds {
  double detectable_lower = 0.0;    // lower bound on f~_{alpha gamma}(S)
  double undetectable_upper = 0.0;  // upper bound on F_{alpha gamma}(S)
};

/// Bounds at the reduced threshold alpha * gamma implied by f_gamma(S):
///   f~ >= (f - alpha^2 F_inf) / (1 - alpha^2),
///   F  <= (F_inf - f) / (1 - alpha^2).
RelaxationBounds relaxation_bounds(double f_gamma_s, double f_inf, double alpha);

// max ||dg|| / ||dm_S|| over secants with dg != 0; +inf when some such
// secant has dm_S = 0.
double lipschitz_proxy(const DataSet& ds, const SecantSet& secants,
                       const std::vector<int>& sensors);

}  // namespace secsel

#endif  // SECSEL_OBJECTIVES_HPP_
