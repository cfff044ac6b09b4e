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

#include "hypermc/mch/stages.hpp"

#include <algorithm>
#include <string>

#include "hypermc/core/counting.hpp"
#include "hypermc/error.hpp"

namespace hypermc::mch {

namespace {

// agreement[i][k] = |Lambda_i(v'_k)|; fixed for the whole of Stage 3.
std::vector<std::vector<int>> agreement_table(const ObservedMatrix& u,
                                              const std::vector<SignVector>& vectors) {
  std::vector<std::vector<int>> table(u.n(), std::vector<int>(vectors.size(), 0));
  for (int i = 0; i < u.n(); ++i) {
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      table[i][k] = agreement_count(i, vectors[k], u);
    }
  }
  return table;
}

ClusterAssignment step(const ClusterAssignment& prev, const HypergraphBundle& bundle,
                       const std::vector<std::vector<int>>& agreement, const RefineConfig& cfg) {
  const int n = prev.n();
  const int K = prev.K();
  const auto sizes = prev.sizes();
  for (int k = 0; k < K; ++k) {
    if (sizes[k] == 0) {
      fail_validation("refinement needs nonempty clusters; cluster " + std::to_string(k + 1) +
                      " is empty");
    }
  }
  std::vector<int> next(n, 0);
  std::vector<double> graph(K);
  for (int i = 0; i < n; ++i) {
    std::fill(graph.begin(), graph.end(), 0.0);
    for (const auto& [d, weight] : cfg.c) {
      if (weight == 0.0 || d > bundle.W()) continue;
      const auto& hg = bundle.layer(d);
      if (hg.empty()) continue;
      const auto links = user_cluster_links(i, prev.labels(), K, hg);
      for (int k = 0; k < K; ++k) graph[k] += weight * static_cast<double>(links[k]);
    }
    int best = 0;
    double best_score = 0.0;
    for (int k = 0; k < K; ++k) {
      const double score = static_cast<double>(n) * graph[k] / sizes[k] +
                           cfg.rating_weight * agreement[i][k];
      if (k == 0 || score > best_score) {
        best = k;
        best_score = score;
      }
    }
    next[i] = best;
  }
  return ClusterAssignment(K, std::move(next));
}

void check_shapes(const ClusterAssignment& prev, const HypergraphBundle& bundle,
                  const ObservedMatrix& u, const std::vector<SignVector>& vectors) {
  require(prev.n() == u.n(), "assignment has " + std::to_string(prev.n()) +
                                 " users but the matrix has " + std::to_string(u.n()));
  require(prev.n() == bundle.n(), "assignment has " + std::to_string(prev.n()) +
                                      " users but the network has " +
                                      std::to_string(bundle.n()));
  require(static_cast<int>(vectors.size()) == prev.K(), "need one rating vector per cluster");
  for (const auto& v : vectors) {
    require(static_cast<int>(v.size()) == u.m(), "rating vector length differs from m");
  }
}

}  // namespace

std::vector<SignVector> majority_vote(const ClusterAssignment& clusters, const ObservedMatrix& u) {
  require(clusters.n() == u.n(), "assignment and matrix differ in user count");
  const int K = clusters.K();
  std::vector<std::vector<int>> balance(K, std::vector<int>(u.m(), 0));
  for (int i = 0; i < u.n(); ++i) {
    auto& row_balance = balance[clusters.label(i)];
    auto row = u.row(i);
    for (int j = 0; j < u.m(); ++j) {
      if (row[j] == Entry::kPlus) ++row_balance[j];
      if (row[j] == Entry::kMinus) --row_balance[j];
    }
  }
  std::vector<SignVector> out(K, SignVector(u.m(), 1));
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j < u.m(); ++j) out[k][j] = balance[k][j] < 0 ? -1 : 1;
  }
  return out;
}

ClusterAssignment refine_step(const ClusterAssignment& prev, const HypergraphBundle& bundle,
                              const ObservedMatrix& u, const std::vector<SignVector>& vectors,
                              const RefineConfig& cfg) {
  check_shapes(prev, bundle, u, vectors);
  return step(prev, bundle, agreement_table(u, vectors), cfg);
}

RefineOutcome refine(const ClusterAssignment& initial, const HypergraphBundle& bundle,
                     const ObservedMatrix& u, const std::vector<SignVector>& vectors,
                     const RefineConfig& cfg) {
  require(cfg.T >= 0, "iteration count must be nonnegative");
  check_shapes(initial, bundle, u, vectors);
  const auto agreement = agreement_table(u, vectors);
  RefineOutcome out;
  out.clusters = initial;
  for (int t = 0; t < cfg.T; ++t) {
    ClusterAssignment next = step(out.clusters, bundle, agreement, cfg);
    const auto sizes = next.sizes();
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; })) {
      out.halted_on_empty = true;
      break;
    }
    ++out.iterations;
    if (next == out.clusters) {
      out.converged = true;
      break;
    }
    out.clusters = std::move(next);
  }
  return out;
}

}  // namespace hypermc::mch
