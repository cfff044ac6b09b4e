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

#include "hypermc/mch/params.hpp"

#include <algorithm>
#include <cmath>

#include "hypermc/core/combinatorics.hpp"
#include "hypermc/core/counting.hpp"
#include "hypermc/error.hpp"

namespace hypermc::mch {

double clamp_theta(double theta) { return std::clamp(theta, kThetaFloor, 0.5 - kThetaFloor); }

double clamp_probability(double x) {
  return std::clamp(x, kProbabilityFloor, 1.0 - kProbabilityFloor);
}

EstimatedParams estimate_params(const ClusterAssignment& init_clusters,
                                const std::vector<SignVector>& init_vectors,
                                const HypergraphBundle& bundle, const ObservedMatrix& u) {
  require(init_clusters.n() == bundle.n() && init_clusters.n() == u.n(),
          "clusters, network and matrix disagree on n");
  require(static_cast<int>(init_vectors.size()) == init_clusters.K(),
          "need one rating vector per cluster");
  const std::int64_t observed = u.observed_count();
  require(observed > 0, "theta estimate undefined: no observed entries");

  const int n = init_clusters.n();
  const int K = init_clusters.K();
  EstimatedParams est;
  for (const auto& [d, hg] : bundle.layers()) {
    const auto in = in_cluster_counts(init_clusters, hg);
    double inside = 0.0;
    for (auto c : in) inside += static_cast<double>(c);
    const double in_slots = K * choose_real(static_cast<double>(n) / K, d);
    const double cross_slots = choose_real(n, d) - in_slots;
    const double a = in_slots > 0.0 ? inside / in_slots : 0.0;
    const double b = cross_slots > 0.0 ? (static_cast<double>(hg.size()) - inside) / cross_slots
                                       : 0.0;
    est.alpha_raw[d] = a;
    est.beta_raw[d] = b;
    est.alpha[d] = clamp_probability(a);
    est.beta[d] = clamp_probability(b);
  }

  std::int64_t agree = 0;
  for (int i = 0; i < n; ++i) {
    agree += agreement_count(i, init_vectors[init_clusters.label(i)], u);
  }
  est.theta_raw = 1.0 - static_cast<double>(agree) / static_cast<double>(observed);
  est.theta = clamp_theta(est.theta_raw);
  return est;
}

int default_iterations(int n) {
  int t = 0;
  while ((1LL << t) < n) ++t;
  return t;
}

RefineConfig default_refine_config(double theta, const std::map<int, double>& alpha,
                                   const std::map<int, double>& beta, int n, int K) {
  require(K >= 1, "K must be positive");
  RefineConfig cfg;
  cfg.T = default_iterations(n);
  const double t = clamp_theta(theta);
  const double rating = K * std::log((1.0 - t) / t);
  for (const auto& [d, a_raw] : alpha) {
    const double a = clamp_probability(a_raw);
    const double b = clamp_probability(beta.at(d));
    cfg.c[d] = a > b ? std::log(a * (1.0 - b) / (b * (1.0 - a))) / rating : 0.0;
  }
  return cfg;
}

RefineConfig default_refine_config(const ModelParams& params) {
  return default_refine_config(params.theta, params.alpha, params.beta, params.n, params.K);
}

RefineConfig default_refine_config(const EstimatedParams& est, int n, int K) {
  return default_refine_config(est.theta, est.alpha, est.beta, n, K);
}

}  // namespace hypermc::mch
