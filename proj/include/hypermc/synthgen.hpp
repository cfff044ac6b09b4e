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
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"
#include "hypermc/random.hpp"

namespace hypermc::synth {

// Uniformly random partition of n users into K clusters of size n/K.
ClusterAssignment gen_clusters(int n, int K, std::uint64_t seed);

// v_1 uniform in {+1,-1}^m; v_k (k >= 2) is v_1 with its own block of
// ceil(gamma*m) coordinates flipped, blocks pairwise disjoint. The minimum
// pairwise Hamming distance is then exactly ceil(gamma*m). Requires
// (K-1)*ceil(gamma*m) <= m.
std::vector<SignVector> gen_rating_vectors(int m, int K, double gamma, std::uint64_t seed);

// Fallback for settings where disjoint blocks do not fit (many clusters, few
// items): v_2 is v_1 with ceil(gamma*m) coordinates flipped and the remaining
// vectors are uniform draws rejected until they sit at distance >=
// ceil(gamma*m) from all earlier ones. Minimum distance is again exact.
std::vector<SignVector> gen_rating_vectors_sampled(int m, int K, double gamma,
                                                   std::uint64_t seed);

// U_ij = R_ij w.p. p(1-theta), -R_ij w.p. p*theta, missing w.p. 1-p.
ObservedMatrix gen_observed(const RatingMatrix& r, double theta, double p, std::uint64_t seed);

// d-uniform HSBM layer: each size-d subset inside one cluster appears w.p.
// alpha, every other subset w.p. beta. Stratum counts are drawn from the exact
// binomials and filled with distinct uniform subsets.
UniformHypergraph gen_hypergraph(const ClusterAssignment& clusters, int d, double alpha,
                                 double beta, std::uint64_t seed);

struct Instance {
  ClusterAssignment clusters;
  RatingMatrix ratings;
  ObservedMatrix observed;
  HypergraphBundle bundle;
};

// Layer probabilities from the normalised quality Î_d: the layer carries
// I_d = Î_d log n / C(n-1, d-1) and beta_d = ratio * alpha_d.
struct LayerProbabilities {
  double alpha = 0.0;
  double beta = 0.0;
};
LayerProbabilities layer_from_quality(int n, int d, double quality_hat, double beta_ratio);

// The same split for an absolute quality I_d = (sqrt(alpha) - sqrt(beta))^2.
LayerProbabilities layer_from_info(double info, double beta_ratio);

// x * log n / C(n-1, d-1); used for alpha_hat / beta_hat style inputs.
double scale_normalized(int n, int d, double x);

Instance gen_instance(const ModelParams& params, const GenSeed& seed);

}  // namespace hypermc::synth
