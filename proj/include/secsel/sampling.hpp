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

#ifndef SECSEL_SAMPLING_HPP_
#define SECSEL_SAMPLING_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "secsel/objectives.hpp"

namespace secsel {

// m i.i.d. pairs (i, i') drawn uniformly from the N states; a second endpoint
// equal to the first is redrawn. The objective weight is 1/m.
SecantSet sample_secant_pairs(const DataSet& ds, Index m, std::uint64_t seed);

// m base indices drawn uniformly with replacement; secants join each base
// point to every other state (self pairs skipped), m (N - 1) in total.
SecantSet sample_base_points(const DataSet& ds, Index m, std::uint64_t seed);

enum class SampleFormula { kPairsUniform, kCoverSeparation, kBasePoints };

std::string sample_formula_name(SampleFormula formula);

struct SampleSizeReport {
  Index m = 1;
  SampleFormula formula = SampleFormula::kPairsUniform;
  std::map<std::string, double> inputs;
  double raw = 0.0;  // value of the bound before rounding up
};

/// Pairs needed for |f_m(S) - f(S)| < eps uniformly over |S| <= L with
/// probability 1 - p:
///   m = ceil( D^4 / (2 eps^2) [L ln M - ln((L-1)!) - ln(p/2)] ).
SampleSizeReport pairs_sample_size(double diameter, double eps, Index max_set, Index sensors,
                                   double p);

/// m = ceil( D^4 / (2 eps^4) (M ln 2 - ln p) ).
SampleSizeReport cover_sample_size(double diameter, double eps, Index sensors, double p);

/// m = ceil( (M ln 2 - ln p) / (2 delta^2) ).
SampleSizeReport base_sample_size(double delta, Index sensors, double p);

// Largest pairwise target distance over the sampled states; a lower bound on
// the diameter of the target set.
double estimate_target_diameter(const DataSet& ds);

}  // namespace secsel

#endif  // SECSEL_SAMPLING_HPP_
