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

#include "secsel/greedy.hpp"

#include <numeric>

namespace secsel {
namespace {

std::vector<int> all_sensors(const DataSet& ds) {
  std::vector<int> all(ds.sensors.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

std::string stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::kBudget:
      return "budget";
    case StopReason::kCover:
      return "cover";
    case StopReason::kNoGain:
      return "no-gain";
  }
  return "unknown";
}

CoverBound cover_bound(const GreedyTrace& trace) {
  CoverBound bound;
  const std::size_t k = trace.values.size();
  if (k >= 2) {
    const double last = trace.values[k - 1] - trace.values[k - 2];
    bound.kappa = last > 0.0 ? trace.values[0] / last : std::numeric_limits<double>::infinity();
  }
  bound.size_bound_factor = 1.0 + std::log(bound.kappa);
  bound.lower_bound_on_optimum = static_cast<double>(k) / bound.size_bound_factor;
  return bound;
}

GreedyTrace greedy_maximize(const ObjectiveSpec& spec, const DataSet& ds,
                            const SecantSet& secants, Index budget, bool accelerated) {
  require(budget >= 1 && budget <= ds.sensor_count(),
          "budget must satisfy 1 <= K <= M (got " + std::to_string(budget) + ")");
  SecantOracle oracle(spec, ds, secants);
  GreedyTrace trace = run_greedy(oracle, {budget, accelerated});
  trace.f_full = eval_objective(spec, ds, secants, all_sensors(ds));
  return trace;
}

CoverResult greedy_set_cover(const ObjectiveSpec& spec, const DataSet& ds,
                             const SecantSet& secants, bool accelerated) {
  require(ds.sensor_count() >= 1, "set cover needs at least one sensor");
  const double full = eval_objective(spec, ds, secants, all_sensors(ds));
  CoverResult result;
  if (full == 0.0) {
    result.trace.stopped_reason = StopReason::kCover;
    result.bound = cover_bound(result.trace);
    return result;
  }
  SecantOracle oracle(spec, ds, secants);
  GreedyOptions opt{ds.sensor_count(), accelerated, full - 1e-12 * std::max(1.0, std::abs(full))};
  result.trace = run_greedy(oracle, opt);
  result.trace.f_full = full;
  result.bound = cover_bound(result.trace);
  return result;
}

BisectionResult bisection_min_lipschitz(const DataSet& ds, const SecantSet& secants, Index budget,
                                        double l_lo, double l_hi, double tol, bool accelerated) {
  require(l_lo > 0.0 && l_lo < l_hi, "need 0 < L_lo < L_hi");
  require(tol > 0.0, "bisection tolerance must be positive");
  require(budget >= 1, "budget must be positive");

  BisectionResult result;
  auto probe = [&](double lipschitz) {
    const ObjectiveSpec spec = make_spec(Amplification{lipschitz}, secants);
    CoverResult cover = greedy_set_cover(spec, ds, secants, accelerated);
    LipschitzProbe p;
    p.lipschitz = lipschitz;
    p.cover_size = static_cast<Index>(cover.trace.chosen.size());
    p.kappa = cover.bound.kappa;
    p.size_lower_bound = cover.bound.lower_bound_on_optimum;
    result.probes.push_back(p);
    if (static_cast<double>(budget) < p.size_lower_bound &&
        (!result.l_lower_certified || lipschitz > *result.l_lower_certified)) {
      result.l_lower_certified = lipschitz;
    }
    return cover;
  };

  CoverResult upper = probe(l_hi);
  if (static_cast<Index>(upper.trace.chosen.size()) > budget) {
    throw Error(ErrorCode::kBudgetInfeasible,
                "greedy cover at L=" + std::to_string(l_hi) + " uses " +
                    std::to_string(upper.trace.chosen.size()) + " sensors, budget is " +
                    std::to_string(budget));
  }
  double hi = l_hi;
  CoverResult lower = probe(l_lo);
  if (static_cast<Index>(lower.trace.chosen.size()) <= budget) {
    hi = l_lo;
    upper = std::move(lower);
  } else {
    double lo = l_lo;
    while (hi - lo > tol * lo) {
      const double mid = 0.5 * (lo + hi);
      CoverResult c = probe(mid);
      if (static_cast<Index>(c.trace.chosen.size()) <= budget) {
        hi = mid;
        upper = std::move(c);
      } else {
        lo = mid;
      }
    }
  }
  result.l_upper = hi;
  result.trace_at_upper = std::move(upper.trace);
  result.bound_at_upper = upper.bound;
  return result;
}

std::vector<double> nemhauser_curve(Index budget, Index kmax) {
  require(budget >= 1, "budget must be positive");
  std::vector<double> out;
  for (Index k = 1; k <= kmax; ++k) {
    out.push_back(1.0 - std::exp(-static_cast<double>(k) / static_cast<double>(budget)));
  }
  return out;
}

}  // namespace secsel
