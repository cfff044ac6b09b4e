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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypermc/error.hpp"
#include "hypermc/experiments/harness.hpp"
#include "hypermc/experiments/metrics.hpp"
#include "hypermc/synthgen.hpp"
#include "hypermc/theory.hpp"
#include "support/oracles.hpp"

namespace hypermc {
namespace {

ModelParams small_config() {
  ModelParams p;
  p.n = 60;
  p.m = 30;
  p.K = 3;
  p.theta = 0.1;
  p.p = 0.15;
  p.gamma = 0.3;
  p.W = 3;
  p.alpha = {{2, 0.2}, {3, 0.02}};
  p.beta = {{2, 0.05}, {3, 0.004}};
  return p;
}

// Endpoints of {p : |phat - p| <= z sqrt(p (1 - p) / n)} by bisection.
double wilson_by_bisection(int failures, int trials) {
  const double z = 1.959963984540054, phat = static_cast<double>(failures) / trials;
  const auto inside = [&](double p) {
    return std::abs(phat - p) <= z * std::sqrt(p * (1 - p) / trials);
  };
  const auto edge = [&](double in, double out) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (in + out);
      (inside(mid) ? in : out) = mid;
    }
    return in;
  };
  return 0.5 * (edge(phat, 1.0) - edge(phat, 0.0));
}

TEST(Metrics, MeanAbsoluteError) {
  const SignMatrix truth(2, 3, {1, 1, 1, -1, -1, -1});
  EXPECT_EQ(exp::mean_absolute_error(truth, truth), 0.0);
  const SignMatrix one_row(2, 3, {1, 1, 1, -1, 1, 1});
  EXPECT_DOUBLE_EQ(exp::mean_absolute_error(one_row, truth), 2.0 / 6.0);
  EXPECT_THROW(exp::mean_absolute_error(SignMatrix(1, 3, {1, 1, 1}), truth), ValidationError);
}

TEST(Metrics, ClusterErrorMatchesAllPermutations) {
  std::mt19937_64 rng(81);
  for (int round = 0; round < 300; ++round) {
    const int K = 2 + static_cast<int>(rng() % 5);
    const int n = K + static_cast<int>(rng() % 20);
    const auto a = testing::random_assignment(n, K, rng);
    const auto b = testing::random_assignment(n, K, rng);
    ASSERT_NEAR(exp::cluster_error_fraction(a, b), testing::brute_cluster_error(a, b), 1e-15);
  }
  const ClusterAssignment a(2, {0, 0, 1, 1}), swapped(2, {1, 1, 0, 0});
  EXPECT_EQ(exp::cluster_error_fraction(a, swapped), 0.0);
}

TEST(Metrics, HungarianIsOptimal) {
  std::mt19937_64 rng(82);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 200; ++round) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<double>> cost(k, std::vector<double>(k));
    for (auto& row : cost) {
      for (auto& c : row) c = std::floor(10 * unit(rng));
    }
    const auto assign = exp::min_cost_assignment(cost);
    double got = 0;
    for (int r = 0; r < k; ++r) got += cost[r][assign[r]];
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do {
      double total = 0;
      for (int r = 0; r < k; ++r) total += cost[r][perm[r]];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    ASSERT_EQ(got, best);
    ASSERT_TRUE(std::is_permutation(assign.begin(), assign.end(), perm.begin()));
  }
}

TEST(Metrics, WilsonHalfWidth) {
  for (const auto [f, t] : {std::pair{0, 50}, std::pair{5, 50}, std::pair{25, 50},
                            std::pair{50, 50}, std::pair{1, 7}, std::pair{97, 100}}) {
    EXPECT_NEAR(exp::wilson_half_width(f, t), wilson_by_bisection(f, t), 1e-12) << f << "/" << t;
  }
  EXPECT_EQ(exp::wilson_half_width(0, 0), 0.0);
}

TEST(RunTrial, PerfectRecoveryOnSaturatedInstance) {
  auto p = small_config();
  p.theta = 0.0;
  p.p = 1.0;
  p.alpha = {{2, 1.0}, {3, 1.0}};
  p.beta = {{2, 0.0}, {3, 0.0}};
  const auto r = exp::run_trial(p, exp::Variant::kMch, GenSeed{1, 0});
  EXPECT_TRUE(r.exact_recovery);
  EXPECT_EQ(r.mae, 0.0);
  EXPECT_EQ(r.cluster_error_fraction, 0.0);
  EXPECT_FALSE(r.solver_failed);
}

TEST(RunTrial, ExactRecoveryIffZeroMae) {
  const auto p = small_config();
  for (std::uint64_t t = 0; t < 10; ++t) {
    for (const auto v : {exp::Variant::kMch, exp::Variant::kGraphOnly, exp::Variant::kCliqueExpanded}) {
      const auto r = exp::run_trial(p, v, GenSeed{2, t});
      ASSERT_EQ(r.exact_recovery, r.mae == 0.0);
      ASSERT_GE(r.mae, 0.0);
      ASSERT_LE(r.mae, 1.0);
    }
  }
}

TEST(RunTrial, SolverFailureIsRecorded) {
  auto p = small_config();
  const auto inst = synth::gen_instance(p, GenSeed{3, 0});
  // theta cannot be estimated without a single observed entry.
  exp::SolverSettings solver;
  solver.weights = exp::WeightSource::kEstimated;
  const auto r = exp::evaluate_variant(inst.ratings, ObservedMatrix(60, 30), inst.bundle,
                                       exp::Variant::kMch, std::nullopt, solver, GenSeed{3, 0});
  EXPECT_TRUE(r.solver_failed);
  EXPECT_FALSE(r.error.empty());
  EXPECT_FALSE(r.exact_recovery);
}

TEST(Variants, BundlesAndNames) {
  HypergraphBundle b(5, 3);
  b.set_layer(UniformHypergraph(5, 2, {{0, 1}}));
  b.set_layer(UniformHypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}}));
  const auto graph = exp::variant_bundle(b, exp::Variant::kGraphOnly);
  EXPECT_EQ(graph.W(), 2);
  EXPECT_EQ(graph.layer(2).size(), 1u);
  const auto clique = exp::variant_bundle(b, exp::Variant::kCliqueExpanded);
  EXPECT_EQ(clique.W(), 2);
  EXPECT_EQ(clique.layer(2).size(), 6u);  // {0,1} merged with the triangle's copy
  EXPECT_TRUE(exp::variant_bundle(b, exp::Variant::kMch) == b);
  for (const auto v : {exp::Variant::kMch, exp::Variant::kGraphOnly, exp::Variant::kCliqueExpanded}) {
    EXPECT_EQ(exp::parse_variant(exp::to_string(v)), v);
  }
  EXPECT_THROW(exp::parse_variant("spectral"), ValidationError);
  EXPECT_THROW(exp::parse_axis("theta"), ValidationError);
}

TEST(Variants, GraphOnlyEqualsMchWithoutHigherLayers) {
  auto p = small_config();
  p.W = 2;
  p.alpha.erase(3);
  p.beta.erase(3);
  for (std::uint64_t t = 0; t < 5; ++t) {
    const auto a = exp::run_trial(p, exp::Variant::kMch, GenSeed{4, t});
    const auto b = exp::run_trial(p, exp::Variant::kGraphOnly, GenSeed{4, t});
    ASSERT_EQ(a.mae, b.mae);
    ASSERT_EQ(a.exact_recovery, b.exact_recovery);
    ASSERT_EQ(a.cluster_error_fraction, b.cluster_error_fraction);
  }
}

TEST(Sweep, NoiselessSweepHasNoErrors) {
  exp::SweepSpec spec;
  spec.base = small_config();
  spec.base.theta = 0.0;
  spec.base.alpha = {{2, 1.0}, {3, 1.0}};
  spec.base.beta = {{2, 0.0}, {3, 0.0}};
  spec.axis = exp::Axis::kP;
  spec.values = {1.0};
  spec.trials = 1;
  const auto rows = exp::run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].err_prob, 0.0);
  EXPECT_EQ(rows[0].mean_mae, 0.0);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  exp::SweepSpec spec;
  spec.base = small_config();
  spec.axis = exp::Axis::kPMultiple;
  spec.values = {0.5, 1.5};
  spec.trials = 6;
  spec.master_seed = 99;
  spec.variants = {exp::Variant::kMch, exp::Variant::kGraphOnly};
  const auto one = exp::format_sweep_csv(exp::run_sweep(spec));
  EXPECT_EQ(one, exp::format_sweep_csv(exp::run_sweep(spec)));
  spec.threads = 3;
  EXPECT_EQ(one, exp::format_sweep_csv(exp::run_sweep(spec)));
  spec.master_seed = 100;
  EXPECT_NE(one, exp::format_sweep_csv(exp::run_sweep(spec)));
  EXPECT_EQ(one.substr(0, one.find('\n')), "axis,variant,n_trials,err_prob,err_ci,mean_mae,mae_sd");
}

TEST(Sweep, AggregateAndAxisParameters) {
  std::vector<exp::TrialResult> trials(4);
  trials[0].exact_recovery = true;
  trials[0].mae = 0.0;
  trials[1].mae = 0.2;
  trials[2].mae = 0.4;
  trials[3].mae = 0.2;
  trials[3].solver_failed = true;
  const auto row = exp::aggregate(1.0, exp::Variant::kMch, trials);
  EXPECT_EQ(row.n_trials, 4);
  EXPECT_EQ(row.failures, 3);
  EXPECT_DOUBLE_EQ(row.err_prob, 0.75);
  EXPECT_DOUBLE_EQ(row.mean_mae, 0.2);
  EXPECT_EQ(row.solver_errors, 1);
  EXPECT_DOUBLE_EQ(row.err_ci, exp::wilson_half_width(3, 4));

  exp::SweepSpec spec;
  spec.base = small_config();
  spec.axis = exp::Axis::kPMultiple;
  const double p_star = theory::info_quantities(spec.base).threshold.p_star;
  EXPECT_NEAR(exp::params_at(spec, 1.5).p, 1.5 * p_star, 1e-15);
  spec.axis = exp::Axis::kP;
  EXPECT_EQ(exp::params_at(spec, 0.3).p, 0.3);
  spec.axis = exp::Axis::kI3Hat;
  const auto l3 = synth::layer_from_quality(60, 3, 2.0, spec.beta_ratio);
  EXPECT_EQ(exp::params_at(spec, 2.0).alpha.at(3), l3.alpha);
  EXPECT_EQ(exp::params_at(spec, 2.0).beta.at(3), l3.beta);
  EXPECT_EQ(exp::params_at(spec, 2.0).alpha.at(2), spec.base.alpha.at(2));
}

TEST(DegradeNetwork, ExtremesAndRetentionRate) {
  const auto inst = synth::gen_instance(small_config(), GenSeed{5, 0});
  EXPECT_TRUE(exp::degrade_network(inst.bundle, 1.0, 3) == inst.bundle);
  EXPECT_EQ(exp::degrade_network(inst.bundle, 0.0, 3).total_edges(), 0u);
  EXPECT_THROW(exp::degrade_network(inst.bundle, 1.2, 3), ValidationError);

  std::mt19937_64 rng(83);
  HypergraphBundle big(200, 4);
  big.set_layer(UniformHypergraph(200, 3, testing::random_edges(200, 3, 1500, rng)));
  big.set_layer(UniformHypergraph(200, 4, testing::random_edges(200, 4, 820, rng)));
  ASSERT_EQ(big.total_edges(), 2320u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto kept = exp::degrade_network(big, 0.5, seed);
    ASSERT_TRUE(testing::within_5_sigma(static_cast<double>(kept.total_edges()), 2320, 0.5));
    for (const auto& [d, layer] : kept.layers()) {
      for (const auto& e : layer.edge_list()) {
        const auto& all = big.layer(d).edge_list();
        ASSERT_TRUE(std::binary_search(all.begin(), all.end(), e));
      }
    }
  }
}

TEST(SemiReal, SmallNetworkRunsDeterministically) {
  // 45 users in 5 unequal classes, planted dense blocks.
  std::vector<int> labels;
  for (int k = 0; k < 5; ++k) labels.insert(labels.end(), 7 + 2 * k, k);
  const ClusterAssignment classes(5, labels);
  const int n = static_cast<int>(labels.size());
  std::mt19937_64 rng(84);
  std::bernoulli_distribution in(0.4), out(0.02), tri(0.05);
  std::vector<std::vector<int>> pairs, triples;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (classes.label(a) == classes.label(b) ? in(rng) : out(rng)) pairs.push_back({a, b});
      for (int c = b + 1; c < n; ++c) {
        const bool same = classes.label(a) == classes.label(b) && classes.label(b) == classes.label(c);
        if (same && tri(rng)) triples.push_back({a, b, c});
      }
    }
  }
  HypergraphBundle net(n, 3);
  net.set_layer(UniformHypergraph(n, 2, pairs));
  net.set_layer(UniformHypergraph(n, 3, triples));

  exp::SemiRealSpec spec;
  spec.network = net;
  spec.classes = classes;
  spec.m = 30;
  spec.gamma = 0.3;  // (K-1) * 9 > 30: sampled vectors
  spec.p = 0.3;
  spec.q_values = {0.5, 1.0};
  spec.trials = 3;
  spec.master_seed = 5;
  spec.variants = {exp::Variant::kMch, exp::Variant::kGraphOnly, exp::Variant::kCliqueExpanded};
  const auto rows = exp::semi_real_pipeline(spec);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.n_trials, 3);
    EXPECT_EQ(r.solver_errors, 0);
    EXPECT_GE(r.mean_mae, 0.0);
    EXPECT_LT(r.mean_mae, 0.5);
  }
  spec.threads = 2;
  EXPECT_EQ(exp::format_sweep_csv(rows), exp::format_sweep_csv(exp::semi_real_pipeline(spec)));
}

}  // namespace
}  // namespace hypermc
