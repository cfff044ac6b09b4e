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

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hypermc/core/hypergraph.hpp"

namespace hypermc::mch {

// A = sum_d (1/d) H_d H_d^T with the diagonal removed: A_ij is the number of
// d-uniform hyperedges containing both i and j, weighted by 1/d.
class WeightedAdjacency {
 public:
  WeightedAdjacency() = default;
  explicit WeightedAdjacency(Eigen::SparseMatrix<double> a) : a_(std::move(a)) {}

  int n() const { return static_cast<int>(a_.rows()); }
  double at(int i, int j) const { return a_.coeff(i, j); }
  const Eigen::SparseMatrix<double>& matrix() const { return a_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(a_); }
  Eigen::VectorXd degrees() const;

 private:
  Eigen::SparseMatrix<double> a_;
};

WeightedAdjacency build_adjacency(const HypergraphBundle& bundle);

}  // namespace hypermc::mch
