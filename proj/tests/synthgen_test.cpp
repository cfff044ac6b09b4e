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
#include <set>

#include "hypermc/core/combinatorics.hpp"
#include "hypermc/core/counting.hpp"
#include "hypermc/error.hpp"
#include "hypermc/synthgen.hpp"
#include "support/oracles.hpp"

namespace hypermc {
namespace {

using testing::within_5_sigma;

int min_pairwise_distance(const std::vector<SignVector>& v) {
  int best = static_cast<int>(v[0].size()) + 1;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) best = std::min(best, hamming_distance(v[a], v[b]));
  }
  return best;
}

ModelParams small_params() {
  ModelParams p;
  p.n = 60;
  p.m = 40;
  p.K = 3;
  p.theta = 0.1;
  p.p = 0.3;
  p.gamma = 0.25;
  p.W = 3;
  p.alpha = {{2, 0.3}, {3, 0.05}};
  p.beta = {{2, 0.05}, {3, 0.005}};
  return p;
}

TEST(GenClusters, SymmetricAndSeeded) {
  const auto a = synth::gen_clusters(30, 3, 5);
  EXPECT_EQ(a.sizes(), (std::vector<int>{10, 10, 10}));
  EXPECT_TRUE(a == synth::gen_clusters(30, 3, 5));
  EXPECT_FALSE(a == synth::gen_clusters(30, 3, 6));
  EXPECT_THROW(synth::gen_clusters(31, 3, 5), ValidationError);
}

TEST(GenRatingVectors, WorkedExamples) {
  const auto v = synth::gen_rating_vectors(10, 3, 0.2, 1);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(min_pairwise_distance(v), 2);

  const auto w = synth::gen_rating_vectors(4, 2, 1.0, 2);
  for (int j = 0; j < 4; ++j) EXPECT_EQ(w[1][j], -w[0][j]);

  EXPECT_THROW(synth::gen_rating_vectors(10, 3, 0.0, 1), ValidationError);
  EXPECT_THROW(synth::gen_rating_vectors(10, 3, 0.6, 1), ValidationError);
}

TEST(GenRatingVectors, MinimumDistanceIsExact) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int m = 5 + static_cast<int>(seed % 40);
    const int K = 2 + static_cast<int>(seed % 4);
    const double gamma = 0.05 + 0.01 * static_cast<double>(seed % 15);
    const int g = min_distance_for(gamma, m);
    if ((K - 1) * g > m) continue;
    ASSERT_EQ(min_pairwise_distance(synth::gen_rating_vectors(m, K, gamma, seed)), g);
  }
}

TEST(GenRatingVectorsSampled, HandlesManyClustersFewItems) {
  // (K-1) * ceil(gamma m) = 160 > 90, outside the block construction.
  const auto v = synth::gen_rating_vectors_sampled(90, 9, 0.22, 3);
  ASSERT_EQ(v.size(), 9u);
  EXPECT_EQ(min_pairwise_distance(v), 20);
  EXPECT_THROW(synth::gen_rating_vectors(90, 9, 0.22, 3), ValidationError);
}

TEST(GenObserved, DegenerateSettings) {
  const auto c = synth::gen_clusters(12, 2, 1);
  const RatingMatrix r(synth::gen_rating_vectors(8, 2, 0.25, 1), c);
  const auto none = synth::gen_observed(r, 0.1, 0.0, 4);
  EXPECT_EQ(none.observed_count(), 0);
  const auto all = synth::gen_observed(r, 0.0, 1.0, 4);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 8; ++j) ASSERT_EQ(all.at(i, j), entry_from_sign(r.at(i, j)));
  }
  EXPECT_THROW(synth::gen_observed(r, 0.5, 0.5, 4), ValidationError);
  EXPECT_THROW(synth::gen_observed(r, 0.1, 1.5, 4), ValidationError);
}

TEST(GenObserved, SampleAndFlipRatesWithinFiveSigma) {
  const auto c = synth::gen_clusters(100, 2, 2);
  const RatingMatrix r(synth::gen_rating_vectors(50, 2, 0.3, 2), c);
  for (const auto [theta, p] : {std::pair{0.49, 1.0}, std::pair{0.1, 0.3}, std::pair{0.0, 0.7}}) {
    const auto u = synth::gen_observed(r, theta, p, 77);
    const double observed = static_cast<double>(u.observed_count());
    EXPECT_TRUE(within_5_sigma(observed, 5000, p));
    double flips = 0;
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 50; ++j) {
        if (u.at(i, j) != Entry::kMissing) flips += !entry_matches(u.at(i, j), r.at(i, j));
      }
    }
    EXPECT_TRUE(within_5_sigma(flips, observed, theta)) << flips << " of " << observed;
  }
}

TEST(GenHypergraph, DeterministicExtremes) {
  const ClusterAssignment c(2, {0, 0, 1, 1});
  const auto hg = synth::gen_hypergraph(c, 2, 1.0, 0.0, 3);
  EXPECT_EQ(hg.edge_list(), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(synth::gen_hypergraph(c, 2, 0.0, 0.0, 3).empty());
  EXPECT_THROW(synth::gen_hypergraph(c, 2, 0.1, 0.2, 3), ValidationError);
  EXPECT_THROW(synth::gen_hypergraph(c, 2, 1.1, 0.2, 3), ValidationError);
}

TEST(GenHypergraph, StratumCountsWithinFiveSigma) {
  const auto c = synth::gen_clusters(60, 3, 9);
  const double in_total = 3.0 * static_cast<double>(choose(20, 3));
  const double cross_total = static_cast<double>(choose(60, 3)) - in_total;
  EXPECT_DOUBLE_EQ(in_total * 0.05, 171.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto hg = synth::gen_hypergraph(c, 3, 0.05, 0.005, seed);
    const auto inside = in_cluster_counts(c, hg);
    const double in_count = static_cast<double>(std::accumulate(inside.begin(), inside.end(), 0LL));
    const double cross = static_cast<double>(hg.size()) - in_count;
    ASSERT_TRUE(within_5_sigma(in_count, in_total, 0.05)) << in_count;
    ASSERT_TRUE(within_5_sigma(cross, cross_total, 0.005)) << cross;
  }
}

TEST(GenHypergraph, InClusterStratumIsUniform) {
  // Every in-cluster pair of a 3 x 4 partition should show up about equally often.
  const auto c = synth::gen_clusters(12, 3, 4);
  std::map<std::vector<int>, int> hits;
  const int draws = 3000;
  for (int s = 0; s < draws; ++s) {
    for (const auto& e : synth::gen_hypergraph(c, 2, 0.2, 0.0, 1000 + s).edge_list()) ++hits[e];
  }
  EXPECT_EQ(hits.size(), 18u);
  for (const auto& [e, count] : hits) {
    EXPECT_TRUE(within_5_sigma(count, draws, 0.2)) << count;
  }
}

TEST(GenInstance, DeterministicAndWellFormed) {
  const auto p = small_params();
  const GenSeed seed{3, 8};
  const auto a = synth::gen_instance(p, seed);
  const auto b = synth::gen_instance(p, seed);
  EXPECT_TRUE(a.clusters == b.clusters);
  EXPECT_TRUE(a.observed == b.observed);
  EXPECT_TRUE(a.bundle == b.bundle);
  EXPECT_EQ(a.ratings.vectors(), b.ratings.vectors());
  EXPECT_EQ(a.observed.n(), 60);
  EXPECT_EQ(a.observed.m(), 40);
  EXPECT_EQ(a.bundle.W(), 3);
  EXPECT_EQ(min_pairwise_distance(a.ratings.vectors()), min_distance_for(p.gamma, p.m));

  const auto other = synth::gen_instance(p, GenSeed{3, 9});
  EXPECT_FALSE(a.observed == other.observed);
}

TEST(GenInstance, NoSignalStillWellFormed) {
  auto p = small_params();
  p.p = 0.0;
  p.alpha = {{2, 0.1}, {3, 0.01}};
  p.beta = p.alpha;
  const auto inst = synth::gen_instance(p, GenSeed{1, 1});
  EXPECT_EQ(inst.observed.observed_count(), 0);
  EXPECT_EQ(inst.clusters.n(), 60);
}

TEST(GenInstance, ReferenceConfigurationGenerates) {
  ModelParams p;
  p.n = 300;
  p.m = 100;
  p.K = 3;
  p.theta = 0.1;
  p.gamma = 0.4;
  p.p = 0.1;
  p.W = 3;
  const auto l2 = synth::layer_from_info(std::log(300.0) / 300.0, 0.25);
  const auto l3 = synth::layer_from_quality(300, 3, 2.0, 0.25);
  p.alpha = {{2, l2.alpha}, {3, l3.alpha}};
  p.beta = {{2, l2.beta}, {3, l3.beta}};
  EXPECT_NEAR(std::pow(std::sqrt(l3.alpha) - std::sqrt(l3.beta), 2),
              2.0 * std::log(300.0) / static_cast<double>(choose(299, 2)), 1e-15);
  EXPECT_NEAR(l2.beta, 0.25 * l2.alpha, 1e-15);
  const auto inst = synth::gen_instance(p, GenSeed{1, 0});
  EXPECT_EQ(inst.clusters.sizes(), (std::vector<int>{100, 100, 100}));
  EXPECT_GT(inst.bundle.layer(3).size(), 0u);
}

TEST(LayerParameterisation, NormalisedScale) {
  EXPECT_NEAR(synth::scale_normalized(300, 2, 1.0), std::log(300.0) / 299.0, 1e-15);
  EXPECT_NEAR(synth::scale_normalized(300, 3, 2.0), 2.0 * std::log(300.0) / 44551.0, 1e-15);
  const auto zero = synth::layer_from_info(0.0, 0.25);
  EXPECT_EQ(zero.alpha, 0.0);
  EXPECT_EQ(zero.beta, 0.0);
}

}  // namespace
}  // namespace hypermc
