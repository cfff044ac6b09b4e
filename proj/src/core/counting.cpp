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

#include "hypermc/core/counting.hpp"

#include <algorithm>

#include "hypermc/error.hpp"

namespace hypermc {

std::int64_t h_count(std::span<const int> s1, std::span<const int> s2,
                     const UniformHypergraph& hg) {
  if (s1.empty() || s2.empty() || hg.empty()) return 0;
  constexpr std::uint8_t kIn1 = 1;
  constexpr std::uint8_t kIn2 = 2;
  std::vector<std::uint8_t> mark(hg.n(), 0);
  for (int v : s1) mark.at(v) |= kIn1;
  for (int v : s2) mark.at(v) |= kIn2;

  std::vector<std::uint32_t> candidates;
  for (int v : s1) {
    auto inc = hg.incident(v);
    candidates.insert(candidates.end(), inc.begin(), inc.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::int64_t count = 0;
  for (std::uint32_t e : candidates) {
    std::uint8_t seen = 0;
    bool inside = true;
    for (int v : hg.edge(e)) {
      if (mark[v] == 0) {
        inside = false;
        break;
      }
      seen |= mark[v];
    }
    if (inside && seen == (kIn1 | kIn2)) ++count;
  }
  return count;
}

std::vector<std::int64_t> in_cluster_counts(const ClusterAssignment& clusters,
                                            const UniformHypergraph& hg) {
  require(clusters.n() == hg.n(), "assignment and hypergraph differ in node count");
  std::vector<std::int64_t> out(clusters.K(), 0);
  for (std::size_t e = 0; e < hg.size(); ++e) {
    auto members = hg.edge(e);
    const int k = clusters.label(members[0]);
    bool same = true;
    for (int v : members.subspan(1)) same = same && clusters.label(v) == k;
    if (same) ++out[k];
  }
  return out;
}

std::vector<std::int64_t> user_cluster_links(int user, std::span<const int> labels,
                                             int num_clusters,
                                             const UniformHypergraph& hg) {
  std::vector<std::int64_t> out(num_clusters, 0);
  for (std::uint32_t e : hg.incident(user)) {
    int k = -1;
    bool same = true;
    for (int v : hg.edge(e)) {
      if (v == user) continue;
      if (k < 0) {
        k = labels[v];
      } else if (labels[v] != k) {
        same = false;
        break;
      }
    }
    if (same && k >= 0) ++out[k];
  }
  return out;
}

int agreement_count(int user, std::span<const Sign> v, const ObservedMatrix& u) {
  require(static_cast<int>(v.size()) == u.m(), "rating vector length " +
                                                   std::to_string(v.size()) +
                                                   " does not match m = " +
                                                   std::to_string(u.m()));
  require(user >= 0 && user < u.n(), "user index out of range");
  int count = 0;
  auto row = u.row(user);
  for (int j = 0; j < u.m(); ++j) count += entry_matches(row[j], v[j]);
  return count;
}

std::int64_t global_agreement(const SignMatrix& x, const ObservedMatrix& u) {
  require(x.n() == u.n() && x.m() == u.m(), "matrix shapes differ");
  std::int64_t total = 0;
  for (int i = 0; i < x.n(); ++i) total += agreement_count(i, x.row(i), u);
  return total;
}

}  // namespace hypermc
