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

#include "hypermc/experiments/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>
#include <mutex>
#include <thread>

#include "hypermc/error.hpp"
#include "hypermc/experiments/metrics.hpp"
#include "hypermc/io/formats.hpp"
#include "hypermc/synthgen.hpp"
#include "hypermc/theory.hpp"

namespace hypermc::exp {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kMch: return "mch";
    case Variant::kGraphOnly: return "graph_only";
    case Variant::kCliqueExpanded: return "clique_expanded";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "mch") return Variant::kMch;
  if (name == "graph_only") return Variant::kGraphOnly;
  if (name == "clique_expanded") return Variant::kCliqueExpanded;
  fail_validation("unknown variant '" + std::string(name) +
                  "' (expected mch, graph_only or clique_expanded)");
}

std::string_view to_string(WeightSource w) {
  switch (w) {
    case WeightSource::kTrue: return "true";
    case WeightSource::kEstimated: return "estimated";
    case WeightSource::kFixed: return "fixed";
  }
  return "?";
}

WeightSource parse_weight_source(std::string_view name) {
  if (name == "true") return WeightSource::kTrue;
  if (name == "estimated") return WeightSource::kEstimated;
  if (name == "fixed") return WeightSource::kFixed;
  fail_validation("unknown weight source '" + std::string(name) +
                  "' (expected true, estimated or fixed)");
}

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::kPMultiple: return "p_multiple";
    case Axis::kP: return "p";
    case Axis::kI3Hat: return "i3_hat";
    case Axis::kQ: return "q";
  }
  return "?";
}

Axis parse_axis(std::string_view name) {
  if (name == "p_multiple") return Axis::kPMultiple;
  if (name == "p") return Axis::kP;
  if (name == "i3_hat") return Axis::kI3Hat;
  if (name == "q") return Axis::kQ;
  fail_validation("unknown sweep axis '" + std::string(name) +
                  "' (expected p_multiple, p, i3_hat or q)");
}

HypergraphBundle variant_bundle(const HypergraphBundle& bundle, Variant v) {
  switch (v) {
    case Variant::kMch: return bundle;
    case Variant::kGraphOnly: return bundle.truncated(2);
    case Variant::kCliqueExpanded: return io::clique_expand(bundle);
  }
  return bundle;
}

namespace {

mch::MchOptions solver_options(const SolverSettings& solver,
                               const std::optional<ModelParams>& true_params,
                               const HypergraphBundle& bundle, const GenSeed& seed) {
  mch::MchOptions opt;
  opt.iterations = solver.iterations;
  opt.spectral = solver.spectral;
  opt.spectral.seed = seed.derive(Stream::kSolver);
  switch (solver.weights) {
    case WeightSource::kTrue:
      require(true_params.has_value(), "true weights requested without model parameters");
      opt.true_params = true_params;
      break;
    case WeightSource::kEstimated:
      break;
    case WeightSource::kFixed: {
      std::map<int, double> c;
      for (const auto& [d, layer] : bundle.layers()) c[d] = solver.fixed_c;
      opt.fixed_c = c;
      break;
    }
  }
  return opt;
}

}  // namespace

TrialResult evaluate_variant(const RatingMatrix& truth, const ObservedMatrix& u,
                             const HypergraphBundle& bundle, Variant v,
                             const std::optional<ModelParams>& true_params,
                             const SolverSettings& solver, const GenSeed& seed) {
  TrialResult r;
  r.seed = seed;
  r.variant = v;
  const auto start = std::chrono::steady_clock::now();
  try {
    const HypergraphBundle input = variant_bundle(bundle, v);
    const auto result =
        mch::run_mch(input, u, truth.K(), solver_options(solver, true_params, input, seed));
    r.mae = mean_absolute_error(result.completed, truth.dense());
    r.exact_recovery = r.mae == 0.0;
    r.cluster_error_fraction = cluster_error_fraction(truth.assignment(), result.clusters);
  } catch (const std::exception& e) {
    r.solver_failed = true;
    r.error = e.what();
    r.exact_recovery = false;
    r.mae = 1.0;
    r.cluster_error_fraction = 1.0 - 1.0 / truth.K();
  }
  r.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TrialResult run_trial(const ModelParams& params, Variant v, const GenSeed& seed,
                      const SolverSettings& solver) {
  const auto inst = synth::gen_instance(params, seed);
  return evaluate_variant(inst.ratings, inst.observed, inst.bundle, v, params, solver, seed);
}

SweepRow aggregate(double axis_value, Variant v, const std::vector<TrialResult>& trials) {
  SweepRow row;
  row.axis_value = axis_value;
  row.variant = v;
  row.n_trials = static_cast<int>(trials.size());
  if (trials.empty()) return row;
  double mae_sum = 0.0, cluster_sum = 0.0;
  for (const auto& t : trials) {
    if (!t.exact_recovery) ++row.failures;
    if (t.solver_failed) ++row.solver_errors;
    mae_sum += t.mae;
    cluster_sum += t.cluster_error_fraction;
  }
  const double count = static_cast<double>(trials.size());
  row.err_prob = row.failures / count;
  row.err_ci = wilson_half_width(row.failures, row.n_trials);
  row.mean_mae = mae_sum / count;
  row.mean_cluster_error = cluster_sum / count;
  if (trials.size() > 1) {
    double ss = 0.0;
    for (const auto& t : trials) ss += (t.mae - row.mean_mae) * (t.mae - row.mean_mae);
    row.mae_sd = std::sqrt(ss / (count - 1.0));
  }
  return row;
}

ModelParams params_at(const SweepSpec& spec, double axis_value) {
  ModelParams p = spec.base;
  switch (spec.axis) {
    case Axis::kPMultiple:
      p.p = axis_value * theory::info_quantities(spec.base).threshold.p_star;
      break;
    case Axis::kP:
      p.p = axis_value;
      break;
    case Axis::kI3Hat: {
      const auto layer = synth::layer_from_quality(p.n, 3, axis_value, spec.beta_ratio);
      p.alpha[3] = layer.alpha;
      p.beta[3] = layer.beta;
      p.W = std::max(p.W, 3);
      break;
    }
    case Axis::kQ:
      fail_validation("the q axis applies to semi-real runs only");
  }
  require(p.p >= 0.0 && p.p <= 1.0,
          "sweep value " + std::to_string(axis_value) + " gives p = " + std::to_string(p.p) +
              " outside [0, 1]");
  p.validate();
  return p;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  require(!spec.values.empty(), "sweep grid is empty");
  require(spec.trials >= 1, "trials must be >= 1");
  require(!spec.variants.empty(), "no variants to run");

  std::vector<ModelParams> grid;
  for (double v : spec.values) grid.push_back(params_at(spec, v));

  const int n_variants = static_cast<int>(spec.variants.size());
  const int jobs = static_cast<int>(grid.size()) * spec.trials;
  // results[(g * trials + t) * n_variants + v]
  std::vector<TrialResult> results(static_cast<std::size_t>(jobs) * n_variants);
  parallel_for(jobs, spec.threads, [&](int job) {
    const int g = job / spec.trials;
    const GenSeed seed{spec.master_seed, static_cast<std::uint64_t>(job)};
    const auto inst = synth::gen_instance(grid[g], seed);
    for (int v = 0; v < n_variants; ++v) {
      results[static_cast<std::size_t>(job) * n_variants + v] =
          evaluate_variant(inst.ratings, inst.observed, inst.bundle, spec.variants[v], grid[g],
                           spec.solver, seed);
    }
  });

  std::vector<SweepRow> rows;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (int v = 0; v < n_variants; ++v) {
      std::vector<TrialResult> point;
      for (int t = 0; t < spec.trials; ++t) {
        point.push_back(results[(g * spec.trials + t) * n_variants + v]);
      }
      rows.push_back(aggregate(spec.values[g], spec.variants[v], point));
    }
  }
  return rows;
}

HypergraphBundle degrade_network(const HypergraphBundle& bundle, double q, std::uint64_t seed) {
  require(q >= 0.0 && q <= 1.0, "q must lie in [0, 1]");
  Rng rng(seed);
  std::bernoulli_distribution keep(q);
  HypergraphBundle out(bundle.n(), bundle.W());
  for (const auto& [d, layer] : bundle.layers()) {
    std::vector<std::vector<int>> kept;
    for (std::size_t e = 0; e < layer.size(); ++e) {
      if (keep(rng)) {
        const auto members = layer.edge(e);
        kept.emplace_back(members.begin(), members.end());
      }
    }
    out.set_layer(UniformHypergraph(bundle.n(), d, std::move(kept)));
  }
  return out;
}

std::vector<SweepRow> semi_real_pipeline(const SemiRealSpec& spec) {
  require(spec.classes.n() == spec.network.n(),
          "class labels cover " + std::to_string(spec.classes.n()) + " users but the network has " +
              std::to_string(spec.network.n()));
  require(!spec.q_values.empty(), "q grid is empty");
  require(spec.trials >= 1, "trials must be >= 1");
  require(!spec.variants.empty(), "no variants to run");
  require(spec.solver.weights != WeightSource::kTrue,
          "a real network has no true layer parameters; use estimated or fixed weights");
  for (int size : spec.classes.sizes()) require(size > 0, "a class has no members");
  const int K = spec.classes.K();
  const int g = min_distance_for(spec.gamma, spec.m);
  require(g >= 1, "ceil(gamma*m) = 0");
  const bool disjoint_blocks = static_cast<long long>(K - 1) * g <= spec.m;

  const int n_variants = static_cast<int>(spec.variants.size());
  const int jobs = static_cast<int>(spec.q_values.size()) * spec.trials;
  std::vector<TrialResult> results(static_cast<std::size_t>(jobs) * n_variants);
  parallel_for(jobs, spec.threads, [&](int job) {
    const double q = spec.q_values[job / spec.trials];
    const GenSeed seed{spec.master_seed, static_cast<std::uint64_t>(job)};
    // K=9, m=90, gamma=0.22 leaves too few items for disjoint difference
    // blocks, so such runs draw vectors by rejection instead.
    const auto vectors =
        disjoint_blocks
            ? synth::gen_rating_vectors(spec.m, K, spec.gamma, seed.derive(Stream::kVectors))
            : synth::gen_rating_vectors_sampled(spec.m, K, spec.gamma,
                                                seed.derive(Stream::kVectors));
    const RatingMatrix truth(vectors, spec.classes, spec.gamma);
    const auto observed =
        synth::gen_observed(truth, spec.theta, spec.p, seed.derive(Stream::kObserved));
    const auto network = degrade_network(spec.network, q, seed.derive(Stream::kDegrade));
    for (int v = 0; v < n_variants; ++v) {
      results[static_cast<std::size_t>(job) * n_variants + v] = evaluate_variant(
          truth, observed, network, spec.variants[v], std::nullopt, spec.solver, seed);
    }
  });

  std::vector<SweepRow> rows;
  for (std::size_t qi = 0; qi < spec.q_values.size(); ++qi) {
    for (int v = 0; v < n_variants; ++v) {
      std::vector<TrialResult> point;
      for (int t = 0; t < spec.trials; ++t) {
        point.push_back(results[(qi * spec.trials + t) * n_variants + v]);
      }
      rows.push_back(aggregate(spec.q_values[qi], spec.variants[v], point));
    }
  }
  return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.precision(10);
  out << "axis,variant,n_trials,err_prob,err_ci,mean_mae,mae_sd\n";
  for (const auto& r : rows) {
    out << r.axis_value << ',' << to_string(r.variant) << ',' << r.n_trials << ',' << r.err_prob
        << ',' << r.err_ci << ',' << r.mean_mae << ',' << r.mae_sd << '\n';
  }
  return out.str();
}

}  // namespace hypermc::exp
