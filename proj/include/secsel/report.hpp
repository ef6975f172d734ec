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

#ifndef SECSEL_REPORT_HPP_
#define SECSEL_REPORT_HPP_

#include <optional>

#include "json.hpp"
#include "secsel/baselines.hpp"
#include "secsel/evaluate.hpp"
#include "secsel/greedy.hpp"
#include "secsel/sampling.hpp"

namespace secsel {

using Json = nlohmann::ordered_json;

// Non-finite values serialize as the strings "inf", "-inf" or "nan".
Json number_to_json(double value);

Json objective_to_json(const ObjectiveSpec& spec);

/// {objective, params, chosen, values, increments, f_full, kappa, bounds,
/// evaluations, stopped_reason, secants}.
Json trace_to_json(const ObjectiveSpec& spec, const GreedyTrace& trace, const SecantSet& secants,
                   const std::optional<CoverBound>& bound = std::nullopt);

Json cover_bound_to_json(const CoverBound& bound);
Json bisection_to_json(const BisectionResult& result, Index budget);
Json sample_size_to_json(const SampleSizeReport& report);
Json selection_report_to_json(const SelectionReport& report);
Json dopt_to_json(const DOptimalTrace& trace);

}  // namespace secsel

#endif  // SECSEL_REPORT_HPP_
