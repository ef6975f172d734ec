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

#ifndef SECSEL_TESTS_SUPPORT_HPP_
#define SECSEL_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "secsel/dataset.hpp"
#include "secsel/objectives.hpp"

namespace secsel::testing {

// Random instance: N states, q-dimensional Gaussian targets, M sensor groups
// of width 1 or 2. Half the sensors are noisy functions of the targets so
// that objectives have nontrivial structure.
inline DataSet random_instance(Index sensors, Index states, Index q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> width(1, 2);
  DataSet ds;
  ds.name = "random";
  ds.points = Matrix(states, q);
  for (Index i = 0; i < states; ++i)
    for (Index c = 0; c < q; ++c) ds.points(i, c) = normal(rng);
  ds.targets = ds.points;
  for (Index j = 0; j < sensors; ++j) {
    SensorGroup g;
    g.id = static_cast<int>(j);
    g.values = Matrix(states, width(rng));
    const double scale = 0.2 + 2.0 * std::abs(normal(rng));
    for (Index i = 0; i < states; ++i) {
      for (Index c = 0; c < g.values.cols(); ++c) {
        const double base = (j % 2 == 0) ? ds.targets(i, (j + c) % q) : 0.0;
        g.values(i, c) = scale * (base + 0.5 * normal(rng));
      }
    }
    ds.sensors.push_back(std::move(g));
  }
  return ds;
}

enum class Variant { kDetectable, kSeparation, kAmplification };

// Direct summation of one objective from the raw matrices: no cached gaps,
// long double accumulation, per-pair work written out longhand.
inline double brute_objective(Variant variant, double threshold, double eps, const DataSet& ds,
                              const std::vector<std::pair<int, int>>& pairs,
                              const std::vector<int>& sensors, double normalization) {
  long double total = 0.0L;
  for (auto [a, b] : pairs) {
    long double g2 = 0.0L;
    for (Index c = 0; c < ds.targets.cols(); ++c) {
      const long double d = static_cast<long double>(ds.targets(a, c)) - ds.targets(b, c);
      g2 += d * d;
    }
    long double m2 = 0.0L;
    for (int j : sensors) {
      const Matrix& v = ds.sensors[j].values;
      for (Index c = 0; c < v.cols(); ++c) {
        const long double d = static_cast<long double>(v(a, c)) - v(b, c);
        m2 += d * d;
      }
    }
    const long double t2 = static_cast<long double>(threshold) * threshold;
    switch (variant) {
      case Variant::kDetectable:
        total += std::min(m2 / t2, 1.0L) * g2;
        break;
      case Variant::kSeparation:
        if (g2 >= static_cast<long double>(eps) * eps) total += std::min(m2 / t2, 1.0L) * g2;
        break;
      case Variant::kAmplification:
        if (g2 > 0.0L) total += std::min(m2 / g2, 1.0L / t2);
        break;
    }
  }
  return static_cast<double>(total * normalization);
}

inline std::vector<std::pair<int, int>> pairs_of(const SecantSet& s) {
  std::vector<std::pair<int, int>> out;
  for (Index p = 0; p < s.size(); ++p) out.emplace_back(s.first[p], s.second[p]);
  return out;
}

inline std::vector<int> subset_of(std::uint32_t mask) {
  std::vector<int> s;
  for (int j = 0; j < 32; ++j)
    if (mask & (1u << j)) s.push_back(j);
  return s;
}

// Best value over all subsets of exactly k of m elements.
inline double exhaustive_best(int m, int k, const std::function<double(const std::vector<int>&)>& f) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != static_cast<int>(k)) continue;
    best = std::max(best, f(subset_of(mask)));
  }
  return best;
}

// Smallest subset whose value reaches `target`; m + 1 if none.
inline int exhaustive_min_cover(int m, double target,
                                const std::function<double(const std::vector<int>&)>& f) {
  for (int k = 0; k <= m; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) != k) continue;
      if (f(subset_of(mask)) >= target) return k;
    }
  }
  return m + 1;
}

inline ObjectiveVariant variant_of(Variant v, double threshold, double eps) {
  switch (v) {
    case Variant::kDetectable:
      return DetectableDiff{threshold};
    case Variant::kSeparation:
      return Separation{threshold, eps};
    case Variant::kAmplification:
      return Amplification{threshold};
  }
  return DetectableDiff{threshold};
}

// Thresholds that keep each variant away from full saturation on
// random_instance data.
inline double default_threshold(Variant v) { return v == Variant::kAmplification ? 1.5 : 1.2; }
inline double default_eps() { return 0.8; }

// Thresholds at which many sensors are needed before any secant saturates;
// greedy runs then continue for the full budget.
inline double unsaturated_threshold(Variant v) { return v == Variant::kAmplification ? 0.1 : 8.0; }

inline const char* variant_label(Variant v) {
  switch (v) {
    case Variant::kDetectable:
      return "dd";
    case Variant::kSeparation:
      return "sep";
    case Variant::kAmplification:
      return "amp";
  }
  return "?";
}

inline constexpr Variant kAllVariants[] = {Variant::kDetectable, Variant::kSeparation,
                                           Variant::kAmplification};

}  // namespace secsel::testing

#endif  // SECSEL_TESTS_SUPPORT_HPP_
