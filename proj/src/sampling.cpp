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

#include "secsel/sampling.hpp"

#include <cmath>
#include <random>

#include "secsel/error.hpp"

namespace secsel {
namespace {

Index ceil_at_least_one(double raw) {
  return std::max<Index>(1, static_cast<Index>(std::ceil(raw)));
}

}  // namespace

SecantSet sample_secant_pairs(const DataSet& ds, Index m, std::uint64_t seed) {
  validate(ds);
  require(m >= 1, "sample count must be positive");
  const Index n = ds.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int32_t> pick(0, static_cast<std::int32_t>(n - 1));
  std::vector<std::int32_t> a(m), b(m);
  for (Index k = 0; k < m; ++k) {
    a[k] = pick(rng);
    do {
      b[k] = pick(rng);
    } while (b[k] == a[k]);
  }
  return make_secants(ds, std::move(a), std::move(b), SecantKind::kSampledPairs, m);
}

SecantSet sample_base_points(const DataSet& ds, Index m, std::uint64_t seed) {
  validate(ds);
  require(m >= 1, "base point count must be positive");
  const Index n = ds.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int32_t> pick(0, static_cast<std::int32_t>(n - 1));
  std::vector<std::int32_t> a, b;
  a.reserve(m * (n - 1));
  b.reserve(m * (n - 1));
  for (Index k = 0; k < m; ++k) {
    const std::int32_t base = pick(rng);
    for (std::int32_t j = 0; j < n; ++j) {
      if (j == base) continue;
      a.push_back(base);
      b.push_back(j);
    }
  }
  return make_secants(ds, std::move(a), std::move(b), SecantKind::kBaseByAll, m);
}

std::string sample_formula_name(SampleFormula formula) {
  switch (formula) {
    case SampleFormula::kPairsUniform:
      return "pairs-uniform";
    case SampleFormula::kCoverSeparation:
      return "cover-separation";
    case SampleFormula::kBasePoints:
      return "base-points";
  }
  return "unknown";
}

SampleSizeReport pairs_sample_size(double diameter, double eps, Index max_set, Index sensors,
                                   double p) {
  require(diameter > 0.0 && eps > 0.0, "diameter and eps must be positive");
  require(max_set >= 1 && sensors >= 1 && max_set <= sensors, "need 1 <= L <= M");
  require(p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  const double d4 = std::pow(diameter, 4);
  const double bracket = static_cast<double>(max_set) * std::log(static_cast<double>(sensors)) -
                         std::lgamma(static_cast<double>(max_set)) - std::log(p / 2.0);
  SampleSizeReport r;
  r.formula = SampleFormula::kPairsUniform;
  r.raw = d4 / (2.0 * eps * eps) * bracket;
  r.m = ceil_at_least_one(r.raw);
  r.inputs = {{"D", diameter}, {"eps", eps}, {"L", static_cast<double>(max_set)},
              {"M", static_cast<double>(sensors)}, {"p", p}};
  return r;
}

SampleSizeReport cover_sample_size(double diameter, double eps, Index sensors, double p) {
  require(diameter > 0.0 && eps > 0.0, "diameter and eps must be positive");
  require(sensors >= 1, "need at least one sensor");
  require(p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  SampleSizeReport r;
  r.formula = SampleFormula::kCoverSeparation;
  r.raw = std::pow(diameter, 4) / (2.0 * std::pow(eps, 4)) *
          (static_cast<double>(sensors) * std::log(2.0) - std::log(p));
  r.m = ceil_at_least_one(r.raw);
  r.inputs = {{"D", diameter}, {"eps", eps}, {"M", static_cast<double>(sensors)}, {"p", p}};
  return r;
}

SampleSizeReport base_sample_size(double delta, Index sensors, double p) {
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  require(sensors >= 1, "need at least one sensor");
  require(p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  SampleSizeReport r;
  r.formula = SampleFormula::kBasePoints;
  r.raw = (static_cast<double>(sensors) * std::log(2.0) - std::log(p)) / (2.0 * delta * delta);
  r.m = ceil_at_least_one(r.raw);
  r.inputs = {{"delta", delta}, {"M", static_cast<double>(sensors)}, {"p", p}};
  return r;
}

double estimate_target_diameter(const DataSet& ds) {
  validate(ds);
  double best = 0.0;
  for (Index i = 0; i < ds.size(); ++i) {
    const double far =
        (ds.targets.bottomRows(ds.size() - i).rowwise() - ds.targets.row(i)).rowwise().squaredNorm().maxCoeff();
    best = std::max(best, far);
  }
  return std::sqrt(best);
}

}  // namespace secsel
