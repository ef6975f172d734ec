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

#include "secsel/objectives.hpp"

#include <cmath>
#include <limits>

#include "secsel/error.hpp"
#include "secsel/parallel.hpp"

namespace secsel {

std::string secant_kind_name(SecantKind kind) {
  switch (kind) {
    case SecantKind::kAllUnordered:
      return "all-unordered";
    case SecantKind::kSampledPairs:
      return "sampled-pairs";
    case SecantKind::kBaseByAll:
      return "base-by-all";
  }
  return "unknown";
}

SecantSet make_secants(const DataSet& ds, std::vector<std::int32_t> first,
                       std::vector<std::int32_t> second, SecantKind kind, Index samples) {
  require(first.size() == second.size(), "secant endpoint lists differ in length");
  const Index n = ds.size();
  SecantSet s;
  s.kind = kind;
  s.states = n;
  s.samples = samples;
  s.target_gap2.resize(static_cast<Index>(first.size()));
  for (std::size_t p = 0; p < first.size(); ++p) {
    const Index a = first[p];
    const Index b = second[p];
    require(a >= 0 && a < n && b >= 0 && b < n, "secant index out of range");
    require(a != b, "secant endpoints must differ");
    s.target_gap2(static_cast<Index>(p)) = (ds.targets.row(a) - ds.targets.row(b)).squaredNorm();
  }
  s.first = std::move(first);
  s.second = std::move(second);
  return s;
}

SecantSet build_secants_all(const DataSet& ds) {
  validate(ds);
  const Index n = ds.size();
  std::vector<std::int32_t> a, b;
  const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
  a.reserve(count);
  b.reserve(count);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      a.push_back(static_cast<std::int32_t>(i));
      b.push_back(static_cast<std::int32_t>(j));
    }
  }
  return make_secants(ds, std::move(a), std::move(b), SecantKind::kAllUnordered);
}

void check_secants(const DataSet& ds, const SecantSet& secants, double tol) {
  require(secants.states == ds.size(), "secant set was built for a different data set");
  require(secants.target_gap2.size() == secants.size(), "secant gap cache has wrong length");
  for (Index p = 0; p < secants.size(); ++p) {
    const Index a = secants.first[p];
    const Index b = secants.second[p];
    require(a != b, "secant endpoints must differ");
    const double g2 = (ds.targets.row(a) - ds.targets.row(b)).squaredNorm();
    require(secants.target_gap2(p) >= 0.0, "negative target gap");
    require(std::abs(g2 - secants.target_gap2(p)) <= tol * std::max(1.0, g2),
            "cached target gap disagrees with the data set");
  }
}

void validate(const ObjectiveSpec& spec) {
  std::visit(
      [](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, DetectableDiff>) {
          require(v.gamma > 0.0, "gamma must be positive");
        } else if constexpr (std::is_same_v<V, Separation>) {
          require(v.gamma > 0.0, "gamma must be positive");
          require(v.eps > 0.0, "eps must be positive");
        } else {
          require(v.lipschitz > 0.0, "Lipschitz threshold must be positive");
        }
      },
      spec.variant);
  require(spec.normalization > 0.0, "normalization must be positive");
}

std::string objective_name(const ObjectiveSpec& spec) {
  switch (spec.variant.index()) {
    case 0:
      return "dd";
    case 1:
      return "sep";
    default:
      return "amp";
  }
}

double default_normalization(const ObjectiveVariant& variant, const SecantSet& secants) {
  switch (secants.kind) {
    case SecantKind::kAllUnordered:
      return 1.0;
    case SecantKind::kSampledPairs:
      return secants.samples > 0 ? 1.0 / static_cast<double>(secants.samples) : 1.0;
    case SecantKind::kBaseByAll:
      if (std::holds_alternative<Amplification>(variant)) return 1.0;
      return secants.samples > 0 && secants.states > 0
                 ? 1.0 / (static_cast<double>(secants.samples) * static_cast<double>(secants.states))
                 : 1.0;
  }
  return 1.0;
}

ObjectiveSpec make_spec(const ObjectiveVariant& variant, const SecantSet& secants) {
  ObjectiveSpec spec{variant, default_normalization(variant, secants)};
  validate(spec);
  return spec;
}

Vector measurement_gap2(const DataSet& ds, const SecantSet& secants,
                        const std::vector<int>& sensors) {
  Vector m2 = Vector::Zero(secants.size());
  for (int j : sensors) {
    require(j >= 0 && j < ds.sensor_count(), "sensor index out of range");
    const SensorGroup& sensor = ds.sensors[j];
    for (Index p = 0; p < secants.size(); ++p) {
      m2(p) += sensor_gap2(sensor, secants.first[p], secants.second[p]);
    }
  }
  return m2;
}

ObjectiveValue evaluate_from_gaps(const ObjectiveSpec& spec, const SecantSet& secants,
                                  const Vector& m2) {
  validate(spec);
  require(m2.size() == secants.size(), "gap vector length differs from the secant count");
  return detail::visit_term(spec, [&](const auto& term) {
    ObjectiveValue out;
    const std::size_t n = static_cast<std::size_t>(secants.size());
    out.value = spec.normalization *
                blocked_sum(n, [&](std::size_t p) { return term(m2(p), secants.target_gap2(p)); });
    for (Index p = 0; p < secants.size(); ++p) {
      const double g2 = secants.target_gap2(p);
      if (!term.in_scope(g2)) continue;
      ++out.in_scope;
      if (term.saturated(m2(p), g2)) ++out.saturated;
    }
    return out;
  });
}

ObjectiveValue evaluate_objective(const ObjectiveSpec& spec, const DataSet& ds,
                                  const SecantSet& secants, const std::vector<int>& sensors) {
  return evaluate_from_gaps(spec, secants, measurement_gap2(ds, secants, sensors));
}

double eval_objective(const ObjectiveSpec& spec, const DataSet& ds, const SecantSet& secants,
                      const std::vector<int>& sensors) {
  return evaluate_objective(spec, ds, secants, sensors).value;
}

IncrementalState make_incremental_state(const ObjectiveSpec& spec, const SecantSet& secants) {
  validate(spec);
  IncrementalState state;
  state.spec = spec;
  state.per_secant_m2 = Vector::Zero(secants.size());
  return state;
}

double marginal_gain(const IncrementalState& state, const DataSet& ds, const SecantSet& secants,
                     int sensor) {
  require(sensor >= 0 && sensor < ds.sensor_count(), "sensor index out of range");
  require(!state.contains(sensor), "sensor " + std::to_string(sensor) + " is already active");
  const SensorGroup& group = ds.sensors[sensor];
  const Vector& m2 = state.per_secant_m2;
  return detail::visit_term(state.spec, [&](const auto& term) {
    const std::size_t n = static_cast<std::size_t>(secants.size());
    const double gain = blocked_sum(n, [&](std::size_t p) {
      const double g2 = secants.target_gap2(p);
      const double before = m2(p);
      const double after = before + sensor_gap2(group, secants.first[p], secants.second[p]);
      return term(after, g2) - term(before, g2);
    });
    return state.spec.normalization * gain;
  });
}

void commit_sensor(IncrementalState& state, const DataSet& ds, const SecantSet& secants,
                   int sensor) {
  require(sensor >= 0 && sensor < ds.sensor_count(), "sensor index out of range");
  require(!state.contains(sensor), "sensor " + std::to_string(sensor) + " is already active");
  const SensorGroup& group = ds.sensors[sensor];
  for (Index p = 0; p < secants.size(); ++p) {
    state.per_secant_m2(p) += sensor_gap2(group, secants.first[p], secants.second[p]);
  }
  state.active.push_back(sensor);
  state.current_value = evaluate_from_gaps(state.spec, secants, state.per_secant_m2).value;
}

double total_fluctuation(const SecantSet& secants, double normalization) {
  return normalization * secants.target_gap2.sum();
}

double undetectable_differences(const DataSet& ds, const SecantSet& secants,
                                const std::vector<int>& sensors, double gamma) {
  require(gamma > 0.0, "gamma must be positive");
  const Vector m2 = measurement_gap2(ds, secants, sensors);
  const double gamma2 = gamma * gamma;
  double total = 0.0;
  for (Index p = 0; p < secants.size(); ++p) {
    if (m2(p) < gamma2) total += secants.target_gap2(p);
  }
  return total;
}

double detectable_differences_hard(const DataSet& ds, const SecantSet& secants,
                                   const std::vector<int>& sensors, double gamma) {
  require(gamma > 0.0, "gamma must be positive");
  const Vector m2 = measurement_gap2(ds, secants, sensors);
  const double gamma2 = gamma * gamma;
  double total = 0.0;
  for (Index p = 0; p < secants.size(); ++p) {
    if (m2(p) >= gamma2) total += secants.target_gap2(p);
  }
  return total;
}

RelaxationBounds relaxation_bounds(double f_gamma_s, double f_inf, double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  const double scale = 1.0 / (1.0 - alpha * alpha);
  return {(f_gamma_s - alpha * alpha * f_inf) * scale, (f_inf - f_gamma_s) * scale};
}

double lipschitz_proxy(const DataSet& ds, const SecantSet& secants,
                       const std::vector<int>& sensors) {
  const Vector m2 = measurement_gap2(ds, secants, sensors);
  double worst = 0.0;
  for (Index p = 0; p < secants.size(); ++p) {
    const double g2 = secants.target_gap2(p);
    if (g2 <= 0.0) continue;
    if (m2(p) <= 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::sqrt(g2 / m2(p)));
  }
  return worst;
}

}  // namespace secsel
