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

#include "hypermc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypermc/core/counting.hpp"
#include "hypermc/error.hpp"
#include "hypermc/mch/params.hpp"

namespace hypermc::oracle {

LikelihoodWeights LikelihoodWeights::from_params(double theta, const std::map<int, double>& alpha,
                                                 const std::map<int, double>& beta) {
  LikelihoodWeights w;
  const double t = mch::clamp_theta(theta);
  w.b = std::log((1.0 - t) / t);
  for (const auto& [d, a_raw] : alpha) {
    const double a = mch::clamp_probability(a_raw);
    const double b = mch::clamp_probability(beta.at(d));
    w.a[d] = std::log(a * (1.0 - b) / (b * (1.0 - a)));
  }
  return w;
}

double log_likelihood_rel(const Candidate& x, const HypergraphBundle& bundle,
                          const ObservedMatrix& u, const LikelihoodWeights& w) {
  require(x.clusters.n() == u.n() && x.clusters.n() == bundle.n(),
          "candidate, network and matrix disagree on n");
  require(static_cast<int>(x.vectors.size()) == x.clusters.K(),
          "candidate needs one vector per cluster");
  long double total = 0.0L;
  for (const auto& [d, a] : w.a) {
    if (d > bundle.W()) continue;
    std::int64_t inside = 0;
    for (auto c : in_cluster_counts(x.clusters, bundle.layer(d))) inside += c;
    total += static_cast<long double>(a) * static_cast<long double>(inside);
  }
  std::int64_t agree = 0;
  for (int i = 0; i < u.n(); ++i) {
    agree += agreement_count(i, x.vectors[x.clusters.label(i)], u);
  }
  total += static_cast<long double>(w.b) * static_cast<long double>(agree);
  return static_cast<double>(total);
}

void for_each_candidate(int n, int K, int m, double gamma,
                        const std::function<void(const Candidate&)>& visit) {
  require(K == 2, "brute force supports K = 2 only");
  require(n >= 2 && n <= kMaxUsers && n % 2 == 0,
          "brute force needs an even n in 2.." + std::to_string(kMaxUsers));
  require(m >= 1 && m <= kMaxItems, "brute force needs m in 1.." + std::to_string(kMaxItems));
  const int g = min_distance_for(gamma, m);
  require(g >= 1 && g <= m, "ceil(gamma*m) must lie in 1..m");

  std::vector<SignVector> codes;
  for (int code = 0; code < (1 << m); ++code) {
    SignVector v(m);
    for (int j = 0; j < m; ++j) v[j] = (code >> j) & 1 ? -1 : 1;
    codes.push_back(std::move(v));
  }

  // Partitions: cluster 0 = {0} u (subset of size n/2-1 from 1..n-1), subsets
  // visited in lexicographic order.
  const int half = n / 2;
  std::vector<int> pick(half - 1);
  for (int t = 0; t < half - 1; ++t) pick[t] = t + 1;
  Candidate cand;
  while (true) {
    std::vector<int> labels(n, 1);
    labels[0] = 0;
    for (int v : pick) labels[v] = 0;
    cand.clusters = ClusterAssignment(2, labels, /*symmetric=*/true);
    for (const auto& v1 : codes) {
      for (const auto& v2 : codes) {
        if (hamming_distance(v1, v2) != g) continue;
        cand.vectors = {v1, v2};
        visit(cand);
      }
    }
    int t = half - 2;
    while (t >= 0 && pick[t] == n - 1 - (half - 2 - t)) --t;
    if (t < 0) break;
    ++pick[t];
    for (int s = t + 1; s < half - 1; ++s) pick[s] = pick[s - 1] + 1;
  }
}

MlResult ml_brute_force(const HypergraphBundle& bundle, const ObservedMatrix& u, int K, int m,
                        double gamma, const LikelihoodWeights& w) {
  require(u.m() == m, "matrix has " + std::to_string(u.m()) + " items, expected " +
                          std::to_string(m));
  MlResult best;
  bool first = true;
  for_each_candidate(u.n(), K, m, gamma, [&](const Candidate& c) {
    const double value = log_likelihood_rel(c, bundle, u, w);
    ++best.evaluated;
    const double tol = 1e-12 * std::max(1.0, std::abs(best.value));
    if (first || value > best.value + tol) {
      best.best = c;
      best.value = value;
      best.ties = 1;
      first = false;
    } else if (std::abs(value - best.value) <= tol) {
      ++best.ties;
    }
  });
  return best;
}

}  // namespace hypermc::oracle
