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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"
#include "hypermc/mch/mch.hpp"
#include "hypermc/random.hpp"

namespace hypermc::exp {

// kMch uses every layer; kGraphOnly drops layers d >= 3; kCliqueExpanded
// folds every hyperedge into the graph layer as a clique, then runs graph-only.
enum class Variant { kMch, kGraphOnly, kCliqueExpanded };
std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

HypergraphBundle variant_bundle(const HypergraphBundle& bundle, Variant v);

// Source of the Stage 3 weights c_d inside an experiment.
enum class WeightSource { kTrue, kEstimated, kFixed };
std::string_view to_string(WeightSource w);
WeightSource parse_weight_source(std::string_view name);

struct SolverSettings {
  WeightSource weights = WeightSource::kTrue;
  double fixed_c = 0.01;
  std::optional<int> iterations;
  mch::SpectralOptions spectral;  // seed is replaced per trial
};

struct TrialResult {
  GenSeed seed;
  Variant variant = Variant::kMch;
  bool exact_recovery = false;
  double mae = 1.0;
  double cluster_error_fraction = 1.0;
  double wall_time = 0.0;  // seconds; never written to deterministic outputs
  bool solver_failed = false;
  std::string error;
};

// Runs one variant on one instance and scores it against the truth. A solver
// exception is caught and recorded as a failed trial.
TrialResult evaluate_variant(const RatingMatrix& truth, const ObservedMatrix& u,
                             const HypergraphBundle& bundle, Variant v,
                             const std::optional<ModelParams>& true_params,
                             const SolverSettings& solver, const GenSeed& seed);

// Generates the instance for `seed` and evaluates `v` on it.
TrialResult run_trial(const ModelParams& params, Variant v, const GenSeed& seed,
                      const SolverSettings& solver = {});

enum class Axis { kPMultiple, kP, kI3Hat, kQ };
std::string_view to_string(Axis a);
Axis parse_axis(std::string_view name);

struct SweepSpec {
  ModelParams base;
  Axis axis = Axis::kPMultiple;
  std::vector<double> values;
  int trials = 50;
  std::uint64_t master_seed = 0;
  std::vector<Variant> variants{Variant::kMch};
  SolverSettings solver;
  double beta_ratio = 0.25;  // used by the i3_hat axis
  int threads = 1;
};

struct SweepRow {
  double axis_value = 0.0;
  Variant variant = Variant::kMch;
  int n_trials = 0;
  int failures = 0;
  double err_prob = 0.0;
  double err_ci = 0.0;
  double mean_mae = 0.0;
  double mae_sd = 0.0;
  double mean_cluster_error = 0.0;
  int solver_errors = 0;
};

SweepRow aggregate(double axis_value, Variant v, const std::vector<TrialResult>& trials);

// Model parameters at one axis value of a sweep.
ModelParams params_at(const SweepSpec& spec, double axis_value);

// Grid point g, trial t uses GenSeed{master, g * trials + t}; every variant
// sees the same instance. Rows come out grid-major, variants in spec order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Keeps each hyperedge of every layer independently with probability q.
HypergraphBundle degrade_network(const HypergraphBundle& bundle, double q, std::uint64_t seed);

inline SolverSettings estimated_solver() {
  SolverSettings s;
  s.weights = WeightSource::kEstimated;
  return s;
}

// A real network with known classes, ratings synthesised on top.
struct SemiRealSpec {
  HypergraphBundle network;
  ClusterAssignment classes;
  int m = 90;
  double gamma = 0.22;
  double theta = 0.1;
  double p = 0.1;
  std::vector<double> q_values{1.0};
  int trials = 20;
  std::uint64_t master_seed = 0;
  std::vector<Variant> variants{Variant::kMch, Variant::kGraphOnly};
  SolverSettings solver = estimated_solver();
  int threads = 1;
};

// Per q and trial: nominal vectors over the real classes, a sub-sampled
// matrix, and the network degraded with q. Rows are (q, variant) aggregates.
std::vector<SweepRow> semi_real_pipeline(const SemiRealSpec& spec);

// CSV with columns axis,variant,n_trials,err_prob,err_ci,mean_mae,mae_sd.
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

// Runs fn(0..count-1) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace hypermc::exp
