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

#include "hypermc/mch/adjacency.hpp"

#include <vector>

namespace hypermc::mch {

Eigen::VectorXd WeightedAdjacency::degrees() const {
  Eigen::VectorXd deg = Eigen::VectorXd::Zero(n());
  for (int col = 0; col < a_.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(a_, col); it; ++it) {
      deg(it.row()) += it.value();
    }
  }
  return deg;
}

WeightedAdjacency build_adjacency(const HypergraphBundle& bundle) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& [d, hg] : bundle.layers()) {
    const double w = 1.0 / d;
    for (std::size_t e = 0; e < hg.size(); ++e) {
      auto members = hg.edge(e);
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          triplets.emplace_back(members[x], members[y], w);
          triplets.emplace_back(members[y], members[x], w);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> a(bundle.n(), bundle.n());
  a.setFromTriplets(triplets.begin(), triplets.end());  // duplicates are summed
  a.makeCompressed();
  return WeightedAdjacency(std::move(a));
}

}  // namespace hypermc::mch
