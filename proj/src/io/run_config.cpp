// Copyright 2026 The hypermc Authors.
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

#include "hypermc/io/run_config.hpp"

#include <algorithm>
#include <set>

#include "hypermc/error.hpp"
#include "hypermc/io/formats.hpp"
#include "hypermc/io/toml_lite.hpp"
#include "hypermc/synthgen.hpp"
#include "hypermc/theory.hpp"

#ifndef HYPERMC_VERSION
#define HYPERMC_VERSION "unknown"
#endif

namespace hypermc::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  fail_validation(path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// An object node plus its dotted path; rejects keys nobody asked about.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail_at(path_.empty() ? "(root)" : path_, "must be a table");
  }

  bool has(const std::string& key) const {
    seen_.insert(key);
    return j_.contains(key);
  }
  const json& raw(const std::string& key) const {
    seen_.insert(key);
    return j_.at(key);
  }
  std::string at(const std::string& key) const { return join(path_, key); }
  const std::string& path() const { return path_; }
  const json& value() const { return j_; }

  double number(const std::string& key) const {
    require_present(key);
    const json& v = raw(key);
    if (!v.is_number()) fail_at(at(key), "must be a number");
    return v.get<double>();
  }
  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }
  long long integer(const std::string& key) const {
    require_present(key);
    const json& v = raw(key);
    if (!v.is_number_integer()) fail_at(at(key), "must be an integer");
    return v.get<long long>();
  }
  std::string string(const std::string& key) const {
    require_present(key);
    const json& v = raw(key);
    if (!v.is_string()) fail_at(at(key), "must be a string");
    return v.get<std::string>();
  }
  bool boolean(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_boolean()) fail_at(at(key), "must be true or false");
    return v.get<bool>();
  }
  std::vector<double> numbers(const std::string& key) const {
    require_present(key);
    const json& v = raw(key);
    if (!v.is_array() || v.empty()) fail_at(at(key), "must be a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail_at(at(key) + "[" + std::to_string(i) + "]", "must be a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }
  std::vector<std::string> strings(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_array() || v.empty()) fail_at(at(key), "must be a non-empty array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) fail_at(at(key) + "[" + std::to_string(i) + "]", "must be a string");
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }
  Node child(const std::string& key) const { return Node(raw(key), at(key)); }

  void reject_unknown() const {
    for (const auto& [k, v] : j_.items()) {
      if (!seen_.contains(k)) fail_at(at(k), "unknown key");
    }
  }

 private:
  void require_present(const std::string& key) const {
    if (!has(key)) fail_at(at(key), "missing");
  }

  const json& j_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

int bounded_int(const Node& node, const std::string& key, long long lo, long long hi) {
  const long long v = node.integer(key);
  if (v < lo || v > hi) {
    fail_at(node.at(key), "must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(v);
}

double in_unit(const Node& node, const std::string& key) {
  const double v = node.number(key);
  if (!(v >= 0.0 && v <= 1.0)) fail_at(node.at(key), "must lie in [0, 1]");
  return v;
}

std::vector<exp::Variant> variants_of(const Node& node, const std::string& key) {
  std::vector<exp::Variant> out;
  const auto names = node.strings(key);
  for (std::size_t i = 0; i < names.size(); ++i) {
    try {
      out.push_back(exp::parse_variant(names[i]));
    } catch (const ValidationError& e) {
      fail_at(node.at(key) + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return out;
}

void parse_layers(const Node& layers, ModelParams& model) {
  for (const auto& [key, unused] : layers.value().items()) {
    const Node layer = layers.child(key);
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail_at(layer.path(), "layer keys must be integer uniformities");
    }
    if (d < 2 || d > model.n) fail_at(layer.path(), "uniformity must lie in 2..n");

    const bool absolute = layer.has("alpha") || layer.has("beta");
    const bool normalized = layer.has("alpha_hat") || layer.has("beta_hat");
    const bool quality = layer.has("quality_hat");
    const bool info = layer.has("info");
    layer.has("beta_ratio");  // marks the key as known
    if (absolute + normalized + quality + info != 1) {
      fail_at(layer.path(),
              "give exactly one of alpha/beta, alpha_hat/beta_hat, quality_hat or info");
    }
    double alpha = 0.0, beta = 0.0;
    if (absolute) {
      alpha = in_unit(layer, "alpha");
      beta = in_unit(layer, "beta");
    } else if (normalized) {
      const double ah = layer.number("alpha_hat");
      const double bh = layer.number("beta_hat");
      if (ah < 0.0) fail_at(layer.at("alpha_hat"), "must be non-negative");
      if (bh < 0.0) fail_at(layer.at("beta_hat"), "must be non-negative");
      alpha = synth::scale_normalized(model.n, d, ah);
      beta = synth::scale_normalized(model.n, d, bh);
      if (alpha > 1.0) fail_at(layer.at("alpha_hat"), "gives alpha > 1");
    } else {
      const std::string key = quality ? "quality_hat" : "info";
      const double qh = layer.number(key);
      const double ratio = layer.number_or("beta_ratio", 0.25);
      if (qh < 0.0) fail_at(layer.at(key), "must be non-negative");
      if (!(ratio >= 0.0 && ratio < 1.0)) fail_at(layer.at("beta_ratio"), "must lie in [0, 1)");
      try {
        const auto lp = quality ? synth::layer_from_quality(model.n, d, qh, ratio)
                                : synth::layer_from_info(qh, ratio);
        alpha = lp.alpha;
        beta = lp.beta;
      } catch (const ValidationError& e) {
        fail_at(layer.at(key), e.what());
      }
    }
    if (beta > alpha) fail_at(layer.path(), "alpha must be at least beta");
    model.alpha[d] = alpha;
    model.beta[d] = beta;
    layer.reject_unknown();
  }
}

ModelParams parse_model(const Node& node, std::optional<double>& p_multiple) {
  ModelParams model;
  model.n = bounded_int(node, "n", 1, 10'000'000);
  model.m = bounded_int(node, "m", 1, 10'000'000);
  model.K = bounded_int(node, "K", 2, model.n);
  model.theta = node.number("theta");
  if (!(model.theta >= 0.0 && model.theta < 0.5)) fail_at(node.at("theta"), "must lie in [0, 0.5)");
  model.gamma = node.number("gamma");
  if (!(model.gamma > 0.0 && model.gamma <= 1.0)) fail_at(node.at("gamma"), "must lie in (0, 1]");
  if (node.has("p") && node.has("p_multiple")) {
    fail_at(node.at("p_multiple"), "give p or p_multiple, not both");
  }
  if (node.has("p")) model.p = in_unit(node, "p");
  if (node.has("p_multiple")) {
    p_multiple = node.number("p_multiple");
    if (*p_multiple < 0.0) fail_at(node.at("p_multiple"), "must be non-negative");
  }
  if (node.has("layers")) parse_layers(node.child("layers"), model);
  int widest = 2;
  for (const auto& [d, a] : model.alpha) widest = std::max(widest, d);
  model.W = node.has("W") ? bounded_int(node, "W", 2, model.n) : widest;
  if (model.W < widest) fail_at(node.at("W"), "is smaller than the widest layer");
  node.reject_unknown();
  try {
    model.validate();
  } catch (const ValidationError& e) {
    fail_at(node.path(), e.what());
  }
  return model;
}

}  // namespace

json load_config_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".json") {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      fail_validation(path.string() + ": " + e.what());
    }
  }
  try {
    return parse_toml_lite(text);
  } catch (const ValidationError& e) {
    fail_validation(path.string() + ": " + e.what());
  }
}

RunConfig parse_run_config(const json& doc, const std::filesystem::path& base_dir) {
  // A manifest written by an earlier run replays that run.
  if (doc.is_object() && doc.contains("seed_scheme") && doc.contains("config")) {
    const json& dir = doc.value("base_dir", json(""));
    if (!dir.is_string()) fail_at("base_dir", "must be a string");
    RunConfig cfg = parse_run_config(doc.at("config"), dir.get<std::string>());
    const json& s = doc.value("master_seed", json(cfg.seed));
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<long long>() < 0)) {
      fail_at("master_seed", "must be a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
    return cfg;
  }
  RunConfig cfg;
  cfg.source = doc;
  cfg.base_dir = base_dir.empty() ? base_dir : std::filesystem::absolute(base_dir).lexically_normal();
  const Node root(doc, "");
  if (root.has("seed")) {
    const json& s = root.raw("seed");
    if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<long long>() < 0)) {
      fail_at("seed", "must be a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (root.has("threads")) cfg.threads = bounded_int(root, "threads", 1, 1024);
  if (root.has("output")) {
    const Node out = root.child("output");
    if (out.has("dir")) cfg.out_dir = base_dir / out.string("dir");
    if (out.has("format")) {
      cfg.format = out.string("format");
      if (cfg.format != "csv" && cfg.format != "json") {
        fail_at(out.at("format"), "must be csv or json");
      }
    }
    out.reject_unknown();
  }
  if (root.has("model")) cfg.model = parse_model(root.child("model"), cfg.p_multiple);
  if (cfg.model && cfg.p_multiple) {
    cfg.model->p = *cfg.p_multiple * theory::info_quantities(*cfg.model).threshold.p_star;
    if (cfg.model->p > 1.0) fail_at("model.p_multiple", "gives p > 1");
  }

  cfg.solver.weights = root.has("semi_real") ? exp::WeightSource::kFixed : exp::WeightSource::kTrue;
  if (root.has("solver")) {
    const Node s = root.child("solver");
    if (s.has("weights")) {
      try {
        cfg.solver.weights = exp::parse_weight_source(s.string("weights"));
      } catch (const ValidationError& e) {
        fail_at(s.at("weights"), e.what());
      }
    }
    if (s.has("c")) {
      cfg.solver.fixed_c = s.number("c");
      if (cfg.solver.fixed_c < 0.0) fail_at(s.at("c"), "must be non-negative");
    }
    if (s.has("iterations")) cfg.solver.iterations = bounded_int(s, "iterations", 0, 1'000'000);
    if (s.has("kmeans_restarts")) {
      cfg.solver.spectral.kmeans_restarts = bounded_int(s, "kmeans_restarts", 1, 10'000);
    }
    if (s.has("kmeans_max_iterations")) {
      cfg.solver.spectral.kmeans_max_iterations =
          bounded_int(s, "kmeans_max_iterations", 1, 1'000'000);
    }
    if (s.has("trim")) cfg.solver.spectral.trim_high_degree = s.boolean("trim");
    if (s.has("trim_factor")) {
      cfg.solver.spectral.trim_factor = s.number("trim_factor");
      if (cfg.solver.spectral.trim_factor <= 0.0) fail_at(s.at("trim_factor"), "must be positive");
    }
    s.reject_unknown();
  }

  if (root.has("sweep")) {
    const Node s = root.child("sweep");
    SweepBlock b;
    try {
      b.axis = exp::parse_axis(s.string("axis"));
    } catch (const ValidationError& e) {
      if (!s.has("axis")) throw;
      fail_at(s.at("axis"), e.what());
    }
    if (b.axis == exp::Axis::kQ) fail_at(s.at("axis"), "q grids belong in semi_real.q");
    b.values = s.numbers("values");
    if (s.has("trials")) b.trials = bounded_int(s, "trials", 1, 10'000'000);
    if (s.has("variants")) b.variants = variants_of(s, "variants");
    if (s.has("beta_ratio")) {
      b.beta_ratio = s.number("beta_ratio");
      if (!(b.beta_ratio >= 0.0 && b.beta_ratio < 1.0)) {
        fail_at(s.at("beta_ratio"), "must lie in [0, 1)");
      }
    }
    s.reject_unknown();
    if (!cfg.model) fail_at("sweep", "needs a [model] table");
    cfg.sweep = b;
  }

  if (root.has("semi_real")) {
    const Node s = root.child("semi_real");
    SemiRealBlock b;
    b.network = base_dir / s.string("network");
    if (s.has("m")) b.m = bounded_int(s, "m", 1, 10'000'000);
    if (s.has("gamma")) {
      b.gamma = s.number("gamma");
      if (!(b.gamma > 0.0 && b.gamma <= 1.0)) fail_at(s.at("gamma"), "must lie in (0, 1]");
    }
    if (s.has("theta")) {
      b.theta = s.number("theta");
      if (!(b.theta >= 0.0 && b.theta < 0.5)) fail_at(s.at("theta"), "must lie in [0, 0.5)");
    }
    if (s.has("p")) b.p = in_unit(s, "p");
    if (s.has("q")) {
      b.q = s.numbers("q");
      for (std::size_t i = 0; i < b.q.size(); ++i) {
        if (!(b.q[i] >= 0.0 && b.q[i] <= 1.0)) {
          fail_at(s.at("q") + "[" + std::to_string(i) + "]", "must lie in [0, 1]");
        }
      }
    }
    if (s.has("trials")) b.trials = bounded_int(s, "trials", 1, 10'000'000);
    if (s.has("variants")) b.variants = variants_of(s, "variants");
    s.reject_unknown();
    if (cfg.solver.weights == exp::WeightSource::kTrue) {
      fail_at("solver.weights", "a real network has no true layer parameters");
    }
    cfg.semi_real = b;
  }
  if (cfg.sweep && cfg.semi_real) fail_at("semi_real", "cannot be combined with [sweep]");
  root.reject_unknown();
  return cfg;
}

exp::SweepSpec make_sweep_spec(const RunConfig& config) {
  require(config.model && config.sweep, "configuration has no [model] and [sweep] tables");
  exp::SweepSpec spec;
  spec.base = *config.model;
  spec.axis = config.sweep->axis;
  spec.values = config.sweep->values;
  spec.trials = config.sweep->trials;
  spec.master_seed = config.seed;
  spec.variants = config.sweep->variants;
  spec.solver = config.solver;
  spec.beta_ratio = config.sweep->beta_ratio;
  spec.threads = config.threads;
  return spec;
}

std::string_view build_version() { return HYPERMC_VERSION; }

json run_manifest(const RunConfig& config, std::string_view command) {
  json m;
  m["command"] = std::string(command);
  m["version"] = std::string(build_version());
  m["master_seed"] = config.seed;
  m["config"] = config.source;
  if (!config.base_dir.empty()) m["base_dir"] = config.base_dir.string();
  json resolved;
  if (config.model) {
    const auto& p = *config.model;
    json layers = json::object();
    for (const auto& [d, a] : p.alpha) layers[std::to_string(d)] = {{"alpha", a}, {"beta", p.beta.at(d)}};
    resolved["model"] = {{"n", p.n}, {"m", p.m}, {"K", p.K}, {"theta", p.theta}, {"p", p.p},
                         {"gamma", p.gamma}, {"W", p.W}, {"layers", layers}};
  }
  resolved["solver"] = {{"weights", std::string(exp::to_string(config.solver.weights))},
                        {"c", config.solver.fixed_c},
                        {"kmeans_restarts", config.solver.spectral.kmeans_restarts},
                        {"kmeans_max_iterations", config.solver.spectral.kmeans_max_iterations},
                        {"trim", config.solver.spectral.trim_high_degree}};
  if (config.solver.iterations) resolved["solver"]["iterations"] = *config.solver.iterations;
  m["resolved"] = resolved;
  m["seed_scheme"] =
      "trial j of a run uses GenSeed{master_seed, j}; j = grid_index * trials + trial";
  return m;
}

}  // namespace hypermc::io
