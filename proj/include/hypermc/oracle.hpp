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
#include <map>
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"

namespace hypermc::oracle {

// a_d = log(alpha_d (1 - beta_d) / (beta_d (1 - alpha_d))), b = log((1 - theta) / theta).
struct LikelihoodWeights {
  std::map<int, double> a;
  double b = 0.0;

  // Probabilities are clamped the same way as the solver's estimates, so
  // saturated inputs (alpha = 1, beta = 0, theta = 0) give finite weights.
  static LikelihoodWeights from_params(double theta, const std::map<int, double>& alpha,
                                       const std::map<int, double>& beta);
  static LikelihoodWeights from_params(const ModelParams& params) {
    return from_params(params.theta, params.alpha, params.beta);
  }
};

// A rating matrix in factored form: clusters plus one vector per cluster.
struct Candidate {
  ClusterAssignment clusters;
  std::vector<SignVector> vectors;

  SignMatrix matrix() const { return RatingMatrix(vectors, clusters).dense(); }
};

// L(X) - C = sum_d a_d sum_k h_d(C_k, C_k) + b |Lambda_X|. C does not depend on
// X among equal-sized partitions, so only differences are meaningful.
double log_likelihood_rel(const Candidate& x, const HypergraphBundle& bundle,
                          const ObservedMatrix& u, const LikelihoodWeights& w);

// Enumeration caps for ml_brute_force.
inline constexpr int kMaxUsers = 10;
inline constexpr int kMaxItems = 4;

// Visits every candidate of the constrained search space: equal-sized
// partitions of n users into K = 2 clusters (user 1 always in cluster 1, the
// rest of cluster 1 in lexicographic order) times ordered vector pairs in
// {+1,-1}^m at Hamming distance exactly ceil(gamma*m), in binary order (bit j
// set means -1 at item j). Throws ValidationError beyond the caps.
void for_each_candidate(int n, int K, int m, double gamma,
                        const std::function<void(const Candidate&)>& visit);

struct MlResult {
  Candidate best;
  double value = 0.0;
  std::int64_t evaluated = 0;
  std::int64_t ties = 0;  // candidates matching the optimum (within 1e-12 relative)
};

// Exhaustive maximum-likelihood estimate; the first candidate in enumeration
// order wins ties.
MlResult ml_brute_force(const HypergraphBundle& bundle, const ObservedMatrix& u, int K, int m,
                        double gamma, const LikelihoodWeights& w);

}  // namespace hypermc::oracle
