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

#ifndef SECSEL_GREEDY_HPP_
#define SECSEL_GREEDY_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "secsel/error.hpp"
#include "secsel/objectives.hpp"

namespace secsel {

enum class StopReason { kBudget, kCover, kNoGain };

std::string stop_reason_name(StopReason reason);

struct GreedyTrace {
  std::vector<int> chosen;
  std::vector<double> values;      // f(S_k), k = 1..K
  std::vector<double> increments;  // marginal gain of the sensor added at step k
  double f_full = 0.0;             // f of the full sensor set
  Index evaluations = 0;           // marginal-gain computations
  StopReason stopped_reason = StopReason::kBudget;
};

// Wolsey size guarantee for a completed greedy cover.
struct CoverBound {
  double kappa = 1.0;
  double size_bound_factor = 1.0;  // 1 + ln kappa
  double lower_bound_on_optimum = 0.0;
};

CoverBound cover_bound(const GreedyTrace& trace);

// Candidates whose gain is within this of the best gain are tied; the lowest
// index wins.
inline double tie_tolerance(double best_gain) {
  return 1e-12 * std::max(1.0, std::abs(best_gain));
}

inline constexpr double kNoGainThreshold = 1e-15;

template <typename O>
concept GainOracle = requires(O& oracle, const O& const_oracle, int j) {
  { const_oracle.candidates() } -> std::convertible_to<int>;
  { oracle.gain(j) } -> std::convertible_to<double>;
  oracle.commit(j);
  { const_oracle.value() } -> std::convertible_to<double>;
};

struct GreedyOptions {
  Index budget = 1;
  bool accelerated = false;
  // Stop once value() reaches this (set cover); infinity disables it.
  double target = std::numeric_limits<double>::infinity();
};

/// Greedy maximization of a monotone submodular set function exposed through
/// an oracle. The accelerated mode keeps stale gains as upper bounds in a
/// max-heap and refreshes only entries that could still win; it returns the
/// same sequence as the naive mode under the lowest-index tie rule.
template <GainOracle O>
GreedyTrace run_greedy(O& oracle, const GreedyOptions& opt) {
  const int m = oracle.candidates();
  GreedyTrace trace;
  std::vector<char> taken(m, 0);

  struct Entry {
    double bound;
    int sensor;
    Index stamp;
  };
  auto lower = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.sensor > b.sensor;
  };
  std::vector<Entry> heap;
  if (opt.accelerated) {
    for (int j = 0; j < m; ++j) heap.push_back({std::numeric_limits<double>::infinity(), j, -1});
    std::make_heap(heap.begin(), heap.end(), lower);
  }

  for (Index step = 0;; ++step) {
    if (oracle.value() >= opt.target) {
      trace.stopped_reason = StopReason::kCover;
      break;
    }
    if (static_cast<Index>(trace.chosen.size()) >= opt.budget || step >= m) {
      trace.stopped_reason = StopReason::kBudget;
      break;
    }
    double best = -std::numeric_limits<double>::infinity();
    int pick = -1;
    double pick_gain = 0.0;
    if (!opt.accelerated) {
      std::vector<double> gains(m, -std::numeric_limits<double>::infinity());
      for (int j = 0; j < m; ++j) {
        if (taken[j]) continue;
        gains[j] = oracle.gain(j);
        ++trace.evaluations;
        best = std::max(best, gains[j]);
      }
      const double tol = tie_tolerance(best);
      for (int j = 0; j < m; ++j) {
        if (!taken[j] && gains[j] >= best - tol) {
          pick = j;
          pick_gain = gains[j];
          break;
        }
      }
    } else {
      auto refresh_top = [&] {
        std::pop_heap(heap.begin(), heap.end(), lower);
        Entry& e = heap.back();
        e.bound = oracle.gain(e.sensor);
        e.stamp = step;
        ++trace.evaluations;
        std::push_heap(heap.begin(), heap.end(), lower);
      };
      while (heap.front().stamp != step) refresh_top();
      best = heap.front().bound;
      // Collect every candidate that could be tied with the best.
      std::vector<Entry> contenders;
      while (!heap.empty() && heap.front().bound >= best - tie_tolerance(best)) {
        if (heap.front().stamp != step) {
          refresh_top();
          continue;
        }
        std::pop_heap(heap.begin(), heap.end(), lower);
        contenders.push_back(heap.back());
        heap.pop_back();
        best = std::max(best, contenders.back().bound);
      }
      const double tol = tie_tolerance(best);
      for (const Entry& e : contenders) {
        if (e.bound >= best - tol && (pick < 0 || e.sensor < pick)) {
          pick = e.sensor;
          pick_gain = e.bound;
        }
      }
      for (const Entry& e : contenders) {
        if (e.sensor == pick) continue;
        heap.push_back(e);
        std::push_heap(heap.begin(), heap.end(), lower);
      }
    }
    if (pick < 0 || best <= kNoGainThreshold) {
      trace.stopped_reason = StopReason::kNoGain;
      break;
    }
    oracle.commit(pick);
    taken[pick] = 1;
    trace.chosen.push_back(pick);
    trace.values.push_back(oracle.value());
    trace.increments.push_back(pick_gain);
  }
  return trace;
}

// Oracle over a secant objective backed by an IncrementalState.
class SecantOracle {
 public:
  SecantOracle(const ObjectiveSpec& spec, const DataSet& ds, const SecantSet& secants)
      : ds_(ds), secants_(secants), state_(make_incremental_state(spec, secants)) {}

  int candidates() const { return static_cast<int>(ds_.sensor_count()); }
  double gain(int j) const { return marginal_gain(state_, ds_, secants_, j); }
  void commit(int j) { commit_sensor(state_, ds_, secants_, j); }
  double value() const { return state_.current_value; }
  const IncrementalState& state() const { return state_; }

 private:
  const DataSet& ds_;
  const SecantSet& secants_;
  IncrementalState state_;
};

/// Greedy with a cardinality budget 1 <= K <= M.
GreedyTrace greedy_maximize(const ObjectiveSpec& spec, const DataSet& ds,
                            const SecantSet& secants, Index budget, bool accelerated);

struct CoverResult {
  GreedyTrace trace;
  CoverBound bound;
};

/// Greedy until f(S) >= f(M) - 1e-12 max(1, |f(M)|). An all-zero objective
/// yields the empty selection.
CoverResult greedy_set_cover(const ObjectiveSpec& spec, const DataSet& ds,
                             const SecantSet& secants, bool accelerated = true);

struct LipschitzProbe {
  double lipschitz = 0.0;
  Index cover_size = 0;
  double kappa = 1.0;
  double size_lower_bound = 0.0;  // |S| / (1 + ln kappa)
};

struct BisectionResult {
  double l_upper = 0.0;
  std::optional<double> l_lower_certified;
  GreedyTrace trace_at_upper;
  CoverBound bound_at_upper;
  std::vector<LipschitzProbe> probes;
};

/// Bisection on the amplification threshold for the smallest L whose greedy
/// cover fits in `budget` sensors. Any probed L with budget < |S|/(1 + ln kappa)
/// certifies that no `budget`-subset meets that L; the largest is reported.
/// Stops when l_hi - l_lo <= tol * l_lo.
BisectionResult bisection_min_lipschitz(const DataSet& ds, const SecantSet& secants, Index budget,
                                        double l_lo, double l_hi, double tol = 1e-2,
                                        bool accelerated = true);

// 1 - exp(-k/K) for k = 1..kmax.
std::vector<double> nemhauser_curve(Index budget, Index kmax);

}  // namespace secsel

#endif  // SECSEL_GREEDY_HPP_
