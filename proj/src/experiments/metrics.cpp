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

#include "hypermc/experiments/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypermc/error.hpp"

namespace hypermc::exp {

double mean_absolute_error(const SignMatrix& estimate, const SignMatrix& truth) {
  require(estimate.n() == truth.n() && estimate.m() == truth.m(), "matrix shapes differ");
  if (truth.values().empty()) return 0.0;
  std::size_t wrong = 0;
  auto a = estimate.values();
  auto b = truth.values();
  for (std::size_t t = 0; t < a.size(); ++t) wrong += a[t] != b[t];
  return static_cast<double>(wrong) / static_cast<double>(a.size());
}

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  // Shortest augmenting path formulation with row/column potentials.
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    match[0] = row;
    int col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[col0] = 1;
      const int r0 = match[col0];
      double delta = inf;
      int col1 = 0;
      for (int col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double cur = cost[r0 - 1][col - 1] - u[r0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const int col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<int> out(n, -1);
  for (int col = 1; col <= n; ++col) {
    if (match[col] > 0) out[match[col] - 1] = col - 1;
  }
  return out;
}

double cluster_error_fraction(const ClusterAssignment& truth, const ClusterAssignment& estimate) {
  require(truth.n() == estimate.n(), "assignments differ in user count");
  if (truth.n() == 0) return 0.0;
  const int K = std::max(truth.K(), estimate.K());
  // overlap[e][t] = users with estimated label e and true label t.
  std::vector<std::vector<double>> overlap(K, std::vector<double>(K, 0.0));
  for (int i = 0; i < truth.n(); ++i) overlap[estimate.label(i)][truth.label(i)] += 1.0;

  double matched = 0.0;
  if (K <= 12) {
    std::vector<std::vector<double>> cost(K, std::vector<double>(K));
    for (int e = 0; e < K; ++e) {
      for (int t = 0; t < K; ++t) cost[e][t] = -overlap[e][t];
    }
    const auto assign = min_cost_assignment(cost);
    for (int e = 0; e < K; ++e) matched += overlap[e][assign[e]];
  } else {
    std::vector<char> row_used(K, 0), col_used(K, 0);
    for (int step = 0; step < K; ++step) {
      int br = -1, bc = -1;
      for (int e = 0; e < K; ++e) {
        if (row_used[e]) continue;
        for (int t = 0; t < K; ++t) {
          if (col_used[t]) continue;
          if (br < 0 || overlap[e][t] > overlap[br][bc]) {
            br = e;
            bc = t;
          }
        }
      }
      row_used[br] = col_used[bc] = 1;
      matched += overlap[br][bc];
    }
  }
  return 1.0 - matched / truth.n();
}

double wilson_half_width(int failures, int trials) {
  if (trials <= 0) return 0.0;
  constexpr double z = 1.959963984540054;
  const double n = trials;
  const double phat = failures / n;
  const double denom = 1.0 + z * z / n;
  return z / denom * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n));
}

}  // namespace hypermc::exp
