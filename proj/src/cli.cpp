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

#include "secsel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>

#include "secsel/baselines.hpp"
#include "secsel/dataset_io.hpp"
#include "secsel/error.hpp"
#include "secsel/evaluate.hpp"
#include "secsel/greedy.hpp"
#include "secsel/manifold.hpp"
#include "secsel/parallel.hpp"
#include "secsel/report.hpp"
#include "secsel/sampling.hpp"

namespace secsel {
namespace {

namespace fs = std::filesystem;

std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

Json scalar_from_string(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (auto v = parse_number(s)) {
    if (s.find_first_of(".eEn") == std::string::npos) return static_cast<long long>(*v);
    return *v;
  }
  return s;
}

// Option values of one app, resolved to what the run actually used.
Json options_to_json(const CLI::App& app) {
  Json out = Json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "config") continue;
    if (opt->get_type_size() == 0) {
      out[name] = opt->count() > 0;
      continue;
    }
    std::vector<std::string> values = opt->results();
    if (values.empty()) {
      const std::string def = opt->get_default_str();
      if (def.empty()) continue;
      values = {def};
    }
    if (opt->get_items_expected_max() > 1) {
      Json arr = Json::array();
      for (const std::string& v : values) arr.push_back(scalar_from_string(v));
      out[name] = arr;
    } else {
      out[name] = scalar_from_string(values.back());
    }
  }
  return out;
}

Json resolved_config(const CLI::App& root, const CLI::App& sub) {
  Json cfg = options_to_json(root);
  cfg["threads"] = static_cast<long long>(thread_count());
  cfg[sub.get_name()] = options_to_json(sub);
  return cfg;
}

// JSON configuration: global options at the top level, one object per
// subcommand. Objects activate their subcommand.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool, bool, std::string) const override {
    Json cfg = options_to_json(*app);
    for (const CLI::App* sub : app->get_subcommands()) cfg[sub->get_name()] = options_to_json(*sub);
    return cfg.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json cfg;
    try {
      cfg = Json::parse(input);
    } catch (const Json::parse_error& e) {
      throw_invalid(std::string("config is not valid JSON: ") + e.what());
    }
    require(cfg.is_object(), "config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : cfg.items()) {
      if (value.is_object()) {
        items.push_back({{key}, "++", {}});
        for (const auto& [k, v] : value.items()) items.push_back({{key}, k, inputs(v)});
        items.push_back({{key}, "--", {}});
      } else {
        items.push_back({{}, key, inputs(value)});
      }
    }
    return items;
  }

 private:
  static std::vector<std::string> inputs(const Json& v) {
    if (v.is_array()) {
      std::vector<std::string> out;
      for (const Json& e : v) out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      return out;
    }
    if (v.is_string()) return {v.get<std::string>()};
    return {v.dump()};
  }
};

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, delim)) parts.push_back(item);
  return parts;
}

Index parse_count(const std::string& s, const std::string& what) {
  const auto v = parse_number(s);
  require(v && *v >= 1 && *v == std::floor(*v), what + " must be a positive integer, got '" + s + "'");
  return static_cast<Index>(*v);
}

// "all", "pairs:M" or "base:M".
SecantSet secants_from_spec(const DataSet& ds, const std::string& spec, std::uint64_t seed) {
  if (spec == "all") return build_secants_all(ds);
  const auto parts = split(spec, ':');
  require(parts.size() == 2, "--secants must be all, pairs:M or base:M (got '" + spec + "')");
  const Index m = parse_count(parts[1], "secant sample count");
  if (parts[0] == "pairs") return sample_secant_pairs(ds, m, seed);
  if (parts[0] == "base") return sample_base_points(ds, m, seed);
  throw_invalid("--secants must be all, pairs:M or base:M (got '" + spec + "')");
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
}

struct Globals {
  std::size_t threads = 0;
  std::string output;
};

struct Context {
  CLI::App* root = nullptr;
  Globals* globals = nullptr;
  std::ostream* out = nullptr;
  std::map<const CLI::App*, std::function<void()>>* actions = nullptr;
};

void emit(const Context& ctx, const CLI::App& sub, Json report) {
  report["config"] = resolved_config(*ctx.root, sub);
  const std::string text = report.dump(2);
  *ctx.out << text << "\n";
  if (!ctx.globals->output.empty()) {
    std::ofstream f(ctx.globals->output);
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + ctx.globals->output);
    f << text << "\n";
  }
}

// ---- generate ---------------------------------------------------------------

void add_generate(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string kind;
    std::string out;
    int n = 4;
    Index samples = 1000;
    std::vector<double> scales;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("generate", "Generate a synthetic data set (toy or torus)");
  sub->configurable();
  sub->add_option("kind", o->kind, "toy | torus")->required()->check(CLI::IsMember({"toy", "torus"}));
  sub->add_option("--out", o->out, "Output data set directory")->required();
  sub->add_option("--n", o->n, "Toy dimension (even)")->capture_default_str();
  sub->add_option("--samples", o->samples, "Number of sampled states")->capture_default_str();
  sub->add_option("--scales", o->scales, "Toy coordinate scales")->delimiter(',');
  sub->add_option("--seed", o->seed, "Random seed")->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    DataSet ds = o->kind == "toy" ? generate_toy_circle(o->n, o->samples, to_vector(o->scales), o->seed)
                                  : generate_torus(o->samples, o->seed);
    write_dataset(ds, o->out);
    emit(ctx, *sub,
         Json{{"name", ds.name},
              {"states", ds.size()},
              {"sensors", ds.sensor_count()},
              {"targets", ds.target_dim()},
              {"out", o->out}});
  });
}

// ---- isomap -----------------------------------------------------------------

void add_isomap(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string data;
    std::string out;
    Index k = 10;
    Index r = 100;
    Index targets = 0;
    bool register_sensors = false;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("isomap", "Isomap embedding of a data set's points");
  sub->configurable();
  sub->add_option("--data", o->data, "Input data set directory")->required();
  sub->add_option("--out", o->out, "Output directory")->required();
  sub->add_option("--k", o->k, "Nearest neighbours")->capture_default_str();
  sub->add_option("--r", o->r, "Embedding dimension")->capture_default_str();
  sub->add_option("--targets", o->targets, "Leading coordinates used as targets (0 = all)")
      ->capture_default_str();
  sub->add_flag("--register-sensors", o->register_sensors,
                "Replace the sensors by the embedding coordinates");
  sub->add_option("--seed", o->seed, "Accepted for symmetry; Isomap is deterministic")
      ->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    const DataSet ds = read_dataset(o->data);
    const IsomapEmbedding emb = isomap(ds.points, o->k, o->r, o->seed);
    const Index r = emb.coordinates.cols();
    const Index q = o->targets == 0 ? r : o->targets;
    require(q <= r, "--targets exceeds the embedding dimension");
    std::vector<Index> cols(q);
    std::iota(cols.begin(), cols.end(), 0);
    DataSet out = assign_targets_from_embedding(ds, emb, cols, o->register_sensors);
    fs::create_directories(o->out);
    write_dataset(out, o->out);
    write_csv(fs::path(o->out) / "embedding.csv", emb.coordinates, "phi");
    write_csv(fs::path(o->out) / "eigenvalues.csv", Matrix(emb.eigenvalues), std::vector<std::string>{"lambda"});
    emit(ctx, *sub,
         Json{{"states", ds.size()},
              {"dimension", r},
              {"truncated", emb.truncated},
              {"eigenvalues", std::vector<double>(emb.eigenvalues.data(),
                                                  emb.eigenvalues.data() + emb.eigenvalues.size())},
              {"out", o->out}});
  });
}

// ---- pca --------------------------------------------------------------------

void add_pca(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string data;
    std::string out;
    Index r = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("pca", "PCA of the stacked sensor measurements");
  sub->configurable();
  sub->add_option("--data", o->data, "Input data set directory")->required();
  sub->add_option("--out", o->out, "Output directory")->required();
  sub->add_option("--r", o->r, "Number of modes (0 = all)")->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    const DataSet ds = read_dataset(o->data);
    const Matrix z = stack_all_measurements(ds);
    const Index r = o->r == 0 ? std::min(z.rows(), z.cols()) : o->r;
    const PCAModel pca = weighted_pca(z, Vector(), r);
    fs::create_directories(o->out);
    write_csv(fs::path(o->out) / "modes.csv", pca.modes, "u");
    write_csv(fs::path(o->out) / "singular_values.csv", Matrix(pca.singular_values), std::vector<std::string>{"sigma"});
    write_csv(fs::path(o->out) / "mean.csv", Matrix(pca.mean), std::vector<std::string>{"mean"});
    write_csv(fs::path(o->out) / "coefficients.csv", pca_coefficients(pca, z), "a");
    Json fractions = Json::array();
    for (Index d = 1; d <= pca.rank(); ++d) fractions.push_back(variance_fraction_bound(pca, d));
    emit(ctx, *sub,
         Json{{"rank", pca.rank()},
              {"singular_values", std::vector<double>(pca.singular_values.data(),
                                                      pca.singular_values.data() + r)},
              {"variance_fraction_bound", fractions},
              {"out", o->out}});
  });
}

// ---- select -----------------------------------------------------------------

struct ObjectiveOpts {
  std::string objective = "dd";
  std::optional<double> gamma;
  std::optional<double> eps;
  std::optional<double> lipschitz;
};

void add_objective_options(CLI::App* sub, ObjectiveOpts& o) {
  sub->add_option("--objective", o.objective, "dd | sep | amp")
      ->check(CLI::IsMember({"dd", "sep", "amp"}))
      ->capture_default_str();
  sub->add_option("--gamma", o.gamma, "Detection threshold (dd, sep)");
  sub->add_option("--eps", o.eps, "Separation tolerance (sep)");
  sub->add_option("--lipschitz", o.lipschitz, "Amplification tolerance (amp)");
}

ObjectiveVariant objective_from(const ObjectiveOpts& o) {
  auto need = [](const std::optional<double>& v, const char* flag, const std::string& obj) {
    require(v.has_value(), std::string(flag) + " is required for --objective " + obj);
    return *v;
  };
  if (o.objective == "dd") return DetectableDiff{need(o.gamma, "--gamma", o.objective)};
  if (o.objective == "sep") {
    return Separation{need(o.gamma, "--gamma", o.objective), need(o.eps, "--eps", o.objective)};
  }
  return Amplification{need(o.lipschitz, "--lipschitz", o.objective)};
}

void add_select(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string data;
    ObjectiveOpts objective;
    std::optional<Index> budget;
    bool cover = false;
    std::string secants = "all";
    bool accelerated = false;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("select", "Greedy sensor selection");
  sub->configurable();
  sub->add_option("--data", o->data, "Input data set directory");
  add_objective_options(sub, o->objective);
  sub->add_option("--budget", o->budget, "Number of sensors K");
  sub->add_flag("--cover", o->cover, "Run the set-cover variant instead of a fixed budget");
  sub->add_option("--secants", o->secants, "all | pairs:M | base:M")->capture_default_str();
  sub->add_flag("--accelerated", o->accelerated, "Lazy (accelerated) greedy");
  sub->add_option("--seed", o->seed, "Secant sampling seed")->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    const ObjectiveVariant variant = objective_from(o->objective);
    require(o->cover != o->budget.has_value(), "give exactly one of --budget or --cover");
    if (o->budget) require(*o->budget >= 1, "--budget must be at least 1");
    require(!o->data.empty(), "--data is required");
    const DataSet ds = read_dataset(o->data);
    const SecantSet secants = secants_from_spec(ds, o->secants, o->seed);
    const ObjectiveSpec spec = make_spec(variant, secants);
    Json report;
    if (o->cover) {
      const CoverResult r = greedy_set_cover(spec, ds, secants, o->accelerated);
      report = trace_to_json(spec, r.trace, secants, r.bound);
    } else {
      const GreedyTrace t = greedy_maximize(spec, ds, secants, *o->budget, o->accelerated);
      report = trace_to_json(spec, t, secants);
    }
    emit(ctx, *sub, report);
  });
}

// ---- bisect-l ---------------------------------------------------------------

void add_bisect(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string data;
    Index budget = 1;
    double l_lo = 1.0;
    double l_hi = 100.0;
    double tol = 1e-2;
    std::string secants = "all";
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("bisect-l", "Bisection for the smallest feasible L");
  sub->configurable();
  sub->add_option("--data", o->data, "Input data set directory")->required();
  sub->add_option("--budget", o->budget, "Sensor budget C")->required();
  sub->add_option("--l-lo", o->l_lo, "Lower end of the L range")->capture_default_str();
  sub->add_option("--l-hi", o->l_hi, "Upper end of the L range")->capture_default_str();
  sub->add_option("--tol", o->tol, "Relative tolerance")->capture_default_str();
  sub->add_option("--secants", o->secants, "all | pairs:M | base:M")->capture_default_str();
  sub->add_option("--seed", o->seed, "Secant sampling seed")->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    const DataSet ds = read_dataset(o->data);
    const SecantSet secants = secants_from_spec(ds, o->secants, o->seed);
    const BisectionResult r =
        bisection_min_lipschitz(ds, secants, o->budget, o->l_lo, o->l_hi, o->tol);
    emit(ctx, *sub, bisection_to_json(r, o->budget));
  });
}

// ---- bounds -----------------------------------------------------------------

void add_bounds(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string formula;
    std::optional<double> d;
    std::string data;
    double eps = 0.1;
    Index l = 1;
    Index m_sensors = 1;
    double p = 0.05;
    double delta = 0.1;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("bounds", "Sample-size calculators");
  sub->configurable();
  sub->add_option("formula", o->formula, "pairs | cover | base")
      ->required()
      ->check(CLI::IsMember({"pairs", "cover", "base"}));
  sub->add_option("--d", o->d, "Target diameter D (default: estimated from --data)");
  sub->add_option("--data", o->data, "Data set used to estimate D");
  sub->add_option("--eps", o->eps, "Accuracy eps")->capture_default_str();
  sub->add_option("--l", o->l, "Largest set size L")->capture_default_str();
  sub->add_option("--m-sensors", o->m_sensors, "Number of sensors M")->capture_default_str();
  sub->add_option("--p", o->p, "Failure probability")->capture_default_str();
  sub->add_option("--delta", o->delta, "Measure tolerance delta")->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    auto diameter = [&]() -> std::pair<double, bool> {
      if (o->d) return {*o->d, false};
      require(!o->data.empty(), "give --d or --data");
      return {estimate_target_diameter(read_dataset(o->data)), true};
    };
    SampleSizeReport r;
    bool empirical = false;
    if (o->formula == "pairs") {
      const auto [d, est] = diameter();
      empirical = est;
      r = pairs_sample_size(d, o->eps, o->l, o->m_sensors, o->p);
    } else if (o->formula == "cover") {
      const auto [d, est] = diameter();
      empirical = est;
      r = cover_sample_size(d, o->eps, o->m_sensors, o->p);
    } else {
      r = base_sample_size(o->delta, o->m_sensors, o->p);
    }
    Json report = sample_size_to_json(r);
    if (o->formula != "base") report["diameter_estimated"] = empirical;
    emit(ctx, *sub, report);
  });
}

// ---- baseline ---------------------------------------------------------------

void add_baseline(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string data;
    std::string method = "qr";
    Index k = 1;
    double sigma = 0.02;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("baseline", "Linear baselines on PCA coordinates");
  sub->configurable();
  sub->add_option("--data", o->data, "Input data set directory")->required();
  sub->add_option("--method", o->method, "qr | bayes-dopt")
      ->check(CLI::IsMember({"qr", "bayes-dopt"}))
      ->capture_default_str();
  sub->add_option("--k", o->k, "Number of sensors K")->required();
  sub->add_option("--sigma", o->sigma, "Noise standard deviation (bayes-dopt)")
      ->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    const DataSet ds = read_dataset(o->data);
    for (const SensorGroup& s : ds.sensors) {
      require(s.dim() == 1, "linear baselines need scalar sensors");
    }
    const Matrix z = stack_all_measurements(ds);
    const Index full = std::min(z.rows(), z.cols());
    Json report;
    if (o->method == "qr") {
      require(o->k >= 1 && o->k <= full, "--k must satisfy 1 <= K <= min(N, M)");
      const PCAModel pca = weighted_pca(z, Vector(), o->k);
      report = Json{{"method", "qr"}, {"modes", o->k}, {"chosen", pivoted_qr_select(pca.modes, o->k)}};
    } else {
      const PCAModel pca = weighted_pca(z, Vector(), full);
      report = dopt_to_json(greedy_bayes_dopt(linear_model_from_pca(pca, o->sigma), o->k));
      report["method"] = "bayes-dopt";
      report["modes"] = full;
    }
    emit(ctx, *sub, report);
  });
}

// ---- evaluate ---------------------------------------------------------------

void add_evaluate(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string data;
    std::vector<int> sensors;
    double gamma = 0.05;
    double eps = 0.5;
    std::string secants = "all";
    std::uint64_t seed = 0;
    std::string out;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("evaluate", "Diagnostics for a sensor selection");
  sub->configurable();
  sub->add_option("--data", o->data, "Input data set directory")->required();
  sub->add_option("--sensors", o->sensors, "Selected sensor indices")->required()->delimiter(',');
  sub->add_option("--gamma", o->gamma, "Detection threshold")->capture_default_str();
  sub->add_option("--eps", o->eps, "Separation tolerance")->capture_default_str();
  sub->add_option("--secants", o->secants, "all | pairs:M | base:M")->capture_default_str();
  sub->add_option("--seed", o->seed, "Secant sampling seed")->capture_default_str();
  sub->add_option("--out", o->out, "Directory for measurements.csv");
  ctx.actions->emplace(sub, [o, sub, ctx] {
    const DataSet ds = read_dataset(o->data);
    for (int j : o->sensors) require(j >= 0 && j < ds.sensor_count(), "sensor index out of range");
    const SecantSet secants = secants_from_spec(ds, o->secants, o->seed);
    const SelectionReport r = make_selection_report(ds, secants, o->sensors, o->gamma, o->eps);
    if (!o->out.empty()) {
      fs::create_directories(o->out);
      std::vector<std::string> header;
      Matrix meas = stack_measurements(ds, o->sensors);
      for (int j : o->sensors) {
        for (Index c = 0; c < ds.sensors[j].dim(); ++c) {
          header.push_back("m" + std::to_string(ds.sensors[j].id) + "_" + std::to_string(c));
        }
      }
      if (ds.latent.cols() > 0) {
        Matrix both(ds.size(), meas.cols() + ds.latent.cols());
        both << meas, ds.latent;
        meas = std::move(both);
        header.insert(header.end(), ds.latent_names.begin(), ds.latent_names.end());
      }
      write_csv(fs::path(o->out) / "measurements.csv", meas, header);
    }
    emit(ctx, *sub, selection_report_to_json(r));
  });
}

// ---- repro ------------------------------------------------------------------

bool is_fundamental_triple(const std::vector<int>& chosen) {
  const std::vector<int> s = sorted(chosen);
  return s.size() == 3 && s[0] == 0 && s[1] == 1 && s[2] >= 5 && s[2] <= 7;
}

Json repro_torus(Index samples, Index k, Index r, std::uint64_t seed, Index base_points) {
  const DataSet raw = generate_torus(samples, seed);
  const IsomapEmbedding emb = isomap(raw.points, k, r, seed);
  std::vector<Index> cols(emb.coordinates.cols());
  std::iota(cols.begin(), cols.end(), 0);
  const DataSet ds = assign_targets_from_embedding(raw, emb, cols, true);

  Json report;
  report["states"] = samples;
  report["k_neighbors"] = k;
  report["dimension"] = emb.coordinates.cols();
  Json chosen = nullptr;
  Json scan = Json::array();
  const SecantSet all = build_secants_all(ds);
  for (double gamma : {0.05, 0.1, 0.5, 1.0, 2.0, 3.0}) {
    const ObjectiveSpec spec = make_spec(DetectableDiff{gamma}, all);
    const GreedyTrace t = greedy_maximize(spec, ds, all, 3, true);
    const bool ok = is_fundamental_triple(t.chosen);
    if (ok && chosen.is_null()) chosen = sorted(t.chosen);
    scan.push_back(Json{{"gamma", gamma}, {"chosen", t.chosen}, {"fundamental", ok}});
  }
  report["chosen"] = chosen;
  report["detectable_scan"] = scan;

  const SecantSet base = sample_base_points(ds, base_points, seed);
  Json amp = Json::array();
  for (double lipschitz : {8.0, 10.0, 15.0, 20.0}) {
    const ObjectiveSpec spec = make_spec(Amplification{lipschitz}, base);
    const CoverResult c = greedy_set_cover(spec, ds, base, true);
    amp.push_back(Json{{"lipschitz", lipschitz},
                       {"chosen", c.trace.chosen},
                       {"fundamental", is_fundamental_triple(c.trace.chosen)},
                       {"kappa", number_to_json(c.bound.kappa)}});
  }
  report["amplification_cover"] = amp;
  return report;
}

Json repro_toy(Index samples, std::uint64_t seed) {
  Vector scales(4);
  scales << 1, 1, 2, 2;
  const DataSet ds = generate_toy_circle(4, samples, scales, seed);
  const Matrix z = stack_all_measurements(ds);
  const std::vector<int> qr = pivoted_qr_select(weighted_pca(z, Vector(), 2).modes, 2);
  const DOptimalTrace dopt =
      greedy_bayes_dopt(linear_model_from_pca(weighted_pca(z, Vector(), 4), 0.02), 2);
  const SecantSet all = build_secants_all(ds);
  const GreedyTrace dd = greedy_maximize(make_spec(DetectableDiff{0.3}, all), ds, all, 2, true);
  Json report;
  report["states"] = samples;
  report["qr"] = qr;
  report["bayes_dopt"] = dopt.chosen;
  report["detectable"] = dd.chosen;
  report["undetectable_pairs"] =
      Json{{"gamma", 0.05},
           {"eps", 0.5},
           {"injective_pair", undetectable_pair_count(ds, all, {0, 1}, 0.05, 0.5)},
           {"harmonic_pair", undetectable_pair_count(ds, all, {2, 3}, 0.05, 0.5)}};
  return report;
}

void add_repro(CLI::App& app, const Context& ctx) {
  struct Opts {
    std::string recipe;
    std::optional<Index> samples;
    Index k = 10;
    Index r = 100;
    Index base_points = 100;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("repro", "Reproduction recipes (torus, toy)");
  sub->configurable();
  sub->add_option("recipe", o->recipe, "torus | toy")
      ->required()
      ->check(CLI::IsMember({"torus", "toy"}));
  sub->add_option("--samples", o->samples, "States (default 2000 torus, 1000 toy)");
  sub->add_option("--k", o->k, "Isomap neighbours (torus)")->capture_default_str();
  sub->add_option("--r", o->r, "Isomap dimension (torus)")->capture_default_str();
  sub->add_option("--base-points", o->base_points, "Base points (torus)")->capture_default_str();
  sub->add_option("--seed", o->seed, "Random seed")->capture_default_str();
  ctx.actions->emplace(sub, [o, sub, ctx] {
    Json report = o->recipe == "torus"
                      ? repro_torus(o->samples.value_or(2000), o->k, o->r, o->seed, o->base_points)
                      : repro_toy(o->samples.value_or(1000), o->seed);
    report["recipe"] = o->recipe;
    emit(ctx, *sub, report);
  });
}

std::size_t threads_from_env() {
  const char* env = std::getenv("SECSEL_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const auto v = parse_number(env);
  require(v && *v >= 0 && *v == std::floor(*v), std::string("SECSEL_THREADS is not a count: ") + env);
  return static_cast<std::size_t>(*v);
}

int fail(std::ostream& err, std::string_view code, const std::string& message, int status) {
  err << "error: " << code << ": " << message << "\n";
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant-based submodular sensor selection", "secsel"};
  app.require_subcommand(1);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON run configuration");
  Globals globals;
  CLI::Option* threads_opt = app.add_option("--threads", globals.threads, "Worker threads (0 = all)");
  app.add_option("--output", globals.output, "Also write the JSON report to this file");
  std::map<const CLI::App*, std::function<void()>> actions;
  Context ctx{&app, &globals, &out, &actions};
  add_generate(app, ctx);
  add_isomap(app, ctx);
  add_pca(app, ctx);
  add_select(app, ctx);
  add_bisect(app, ctx);
  add_bounds(app, ctx);
  add_baseline(app, ctx);
  add_evaluate(app, ctx);
  add_repro(app, ctx);
  std::vector<const char*> argv{"secsel"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      return fail(err, error_code_name(ErrorCode::kInvalidArgument), e.what(), 1);
    }
    set_thread_count(threads_opt->count() > 0 ? globals.threads : threads_from_env());
    actions.at(app.get_subcommands().front())();
  } catch (const Error& e) {
    return fail(err, error_code_name(e.code()), e.what(), e.code() == ErrorCode::kInvalidArgument ? 1 : 2);
  } catch (const std::exception& e) {
    return fail(err, "runtime-error", e.what(), 2);
  }
  return 0;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace secsel
