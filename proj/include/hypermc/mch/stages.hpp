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

#include <map>
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"

namespace hypermc::mch {

// Stage 3 score weights. The score of user i for cluster k is
//   n * sum_d c_d h_d({i}, C_k \ {i}) / |C_k|  +  rating_weight * |Lambda_i(v'_k)|.
// rating_weight is 1 in the algorithm; it exists so the score's scale
// invariance can be exercised.
struct RefineConfig {
  int T = 0;
  std::map<int, double> c;
  double rating_weight = 1.0;
};

// Stage 2: per cluster and item, the sign with more observed votes; ties and
// items without observations resolve to +1.
std::vector<SignVector> majority_vote(const ClusterAssignment& clusters, const ObservedMatrix& u);

// One synchronous Stage 3 pass: every user is scored against `prev`. Ties go
// to the smallest cluster index. Throws ValidationError if a cluster of
// `prev` is empty.
ClusterAssignment refine_step(const ClusterAssignment& prev, const HypergraphBundle& bundle,
                              const ObservedMatrix& u, const std::vector<SignVector>& vectors,
                              const RefineConfig& cfg);

struct RefineOutcome {
  ClusterAssignment clusters;
  int iterations = 0;  // refine_step calls whose result was accepted or matched
  bool converged = false;
  // A step emptied a cluster; refinement stopped at the previous assignment.
  bool halted_on_empty = false;
};

// Up to cfg.T passes of refine_step, stopping early once a pass changes
// nothing.
RefineOutcome refine(const ClusterAssignment& initial, const HypergraphBundle& bundle,
                     const ObservedMatrix& u, const std::vector<SignVector>& vectors,
                     const RefineConfig& cfg);

}  // namespace hypermc::mch
