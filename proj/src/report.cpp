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

#include "secsel/report.hpp"

#include <cmath>

namespace secsel {
namespace {

Json numbers(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(number_to_json(v));
  return out;
}

}  // namespace

Json number_to_json(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

Json objective_to_json(const ObjectiveSpec& spec) {
  Json params = Json::object();
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, DetectableDiff>) {
          params["gamma"] = v.gamma;
        } else if constexpr (std::is_same_v<V, Separation>) {
          params["gamma"] = v.gamma;
          params["eps"] = v.eps;
        } else {
          params["lipschitz"] = v.lipschitz;
        }
      },
      spec.variant);
  params["normalization"] = spec.normalization;
  return params;
}

Json cover_bound_to_json(const CoverBound& bound) {
  return Json{{"kappa", number_to_json(bound.kappa)},
              {"size_bound_factor", number_to_json(bound.size_bound_factor)},
              {"lower_bound_on_optimum", number_to_json(bound.lower_bound_on_optimum)}};
}

Json trace_to_json(const ObjectiveSpec& spec, const GreedyTrace& trace, const SecantSet& secants,
                   const std::optional<CoverBound>& bound) {
  Json j;
  j["objective"] = objective_name(spec);
  j["params"] = objective_to_json(spec);
  j["chosen"] = trace.chosen;
  j["values"] = numbers(trace.values);
  j["increments"] = numbers(trace.increments);
  j["f_full"] = number_to_json(trace.f_full);
  const CoverBound b = bound ? *bound : cover_bound(trace);
  j["kappa"] = number_to_json(b.kappa);
  Json bounds;
  bounds["wolsey"] = cover_bound_to_json(b);
  bounds["nemhauser"] = numbers(
      nemhauser_curve(std::max<Index>(1, static_cast<Index>(trace.chosen.size())),
                      static_cast<Index>(trace.chosen.size())));
  j["bounds"] = bounds;
  j["evaluations"] = trace.evaluations;
  j["stopped_reason"] = stop_reason_name(trace.stopped_reason);
  j["secants"] = Json{{"kind", secant_kind_name(secants.kind)},
                      {"count", secants.size()},
                      {"samples", secants.samples},
                      {"convention", "unordered pairs; ordered-pair sums are twice these values"}};
  return j;
}

Json bisection_to_json(const BisectionResult& result, Index budget) {
  Json j;
  j["budget"] = budget;
  j["l_upper"] = result.l_upper;
  j["l_lower_certified"] =
      result.l_lower_certified ? Json(*result.l_lower_certified) : Json(nullptr);
  j["chosen"] = result.trace_at_upper.chosen;
  j["values"] = numbers(result.trace_at_upper.values);
  j["increments"] = numbers(result.trace_at_upper.increments);
  j["kappa"] = number_to_json(result.bound_at_upper.kappa);
  j["bounds"] = cover_bound_to_json(result.bound_at_upper);
  Json probes = Json::array();
  for (const LipschitzProbe& p : result.probes) {
    probes.push_back(Json{{"lipschitz", p.lipschitz},
                          {"cover_size", p.cover_size},
                          {"kappa", number_to_json(p.kappa)},
                          {"size_lower_bound", number_to_json(p.size_lower_bound)}});
  }
  j["probes"] = probes;
  return j;
}

Json sample_size_to_json(const SampleSizeReport& report) {
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  return Json{{"m", report.m},
              {"formula", sample_formula_name(report.formula)},
              {"raw", report.raw},
              {"inputs", inputs}};
}

Json selection_report_to_json(const SelectionReport& report) {
  Json j;
  j["selection"] = report.selection;
  j["r_squared"] = report.r_squared ? number_to_json(*report.r_squared) : Json(nullptr);
  j["undetectable_pairs"] = report.undetectable_pairs;
  j["gamma"] = report.gamma;
  j["eps"] = report.eps;
  j["lipschitz_proxy"] = number_to_json(report.lipschitz_proxy);
  j["lipschitz_note"] = "secant-slope maximum over sampled states; a lower bound on the true constant";
  j["bounds"] = report.bounds ? cover_bound_to_json(*report.bounds) : Json(nullptr);
  return j;
}

Json dopt_to_json(const DOptimalTrace& trace) {
  return Json{{"chosen", trace.chosen},
              {"log_det", numbers(trace.log_det)},
              {"increments", numbers(trace.increments)},
              {"log_det_prior", number_to_json(trace.log_det_prior)}};
}

}  // namespace secsel
