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
#include <span>
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"

namespace hypermc {

// h_d(S1, S2): hyperedges contained in S1 u S2 that meet both S1 and S2.
// With S1 = S2 = S this is the number of hyperedges inside S. Sets are lists
// of node ids; repeated ids are harmless.
std::int64_t h_count(std::span<const int> s1, std::span<const int> s2,
                     const UniformHypergraph& hg);

// Number of hyperedges lying entirely inside each cluster, indexed by label.
std::vector<std::int64_t> in_cluster_counts(const ClusterAssignment& clusters,
                                            const UniformHypergraph& hg);

// For one user i, entry k is h_d({i}, C_k \ {i}): hyperedges through i whose
// other members all carry label k.
std::vector<std::int64_t> user_cluster_links(int user, std::span<const int> labels,
                                             int num_clusters,
                                             const UniformHypergraph& hg);

// |Lambda_i(v)|: observed entries of row i equal to v(j).
int agreement_count(int user, std::span<const Sign> v, const ObservedMatrix& u);

// |Lambda_X|: observed entries equal to the matching entry of X.
std::int64_t global_agreement(const SignMatrix& x, const ObservedMatrix& u);

}  // namespace hypermc
