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
#include <vector>

#include <Eigen/Dense>

#include "hypermc/core/types.hpp"
#include "hypermc/mch/adjacency.hpp"

namespace hypermc::mch {

// kAlgebraic keeps the K largest eigenvalues (the assortative block signal);
// kMagnitude keeps the K largest |eigenvalue|, which on small or sparse graphs
// can select negative, bipartite-like directions.
enum class EigenOrder { kAlgebraic, kMagnitude };

// kRaw embeds eigenvectors of A itself. kNormalized uses D^-1/2 A D^-1/2 and
// scales each embedded row to unit length, which keeps pairs joined by many
// hyperedges (large A_ij) from capturing the leading eigenvectors.
enum class Embedding { kRaw, kNormalized };

struct SpectralOptions {
  std::uint64_t seed = 0;
  Embedding embedding = Embedding::kNormalized;
  EigenOrder order = EigenOrder::kAlgebraic;
  // kRaw only: embed row i as (lambda_1 u_1(i), ..., lambda_K u_K(i)), i.e. row
  // i of the rank-K approximation in eigenbasis coordinates.
  bool scale_by_eigenvalue = true;
  // Zero out nodes whose weighted degree exceeds trim_factor x the mean.
  bool trim_high_degree = false;
  double trim_factor = 10.0;
  int kmeans_restarts = 10;
  int kmeans_max_iterations = 100;
  // Dense eigendecomposition up to this n, subspace iteration above.
  int dense_limit = 4096;
  double eigen_tolerance = 1e-8;
  int eigen_max_iterations = 20000;
};

struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // column c pairs with values(c)
};

// The K leading eigenpairs of a symmetric matrix under `order`, leading first.
EigenPairs top_eigenpairs(const Eigen::MatrixXd& a, int K, EigenOrder order);
// Subspace iteration for large sparse matrices; the algebraic order runs on
// A + sI with s a Gershgorin bound so that it reduces to the magnitude order.
EigenPairs top_eigenpairs(const Eigen::SparseMatrix<double>& a, int K, EigenOrder order,
                          double tolerance, int max_iterations, std::uint64_t seed);

struct KMeansResult {
  std::vector<int> labels;
  double inertia = 0.0;
};

// Lloyd's algorithm with ++ seeding, best of `restarts` by inertia. Every
// returned cluster is nonempty; throws RuntimeFailure if no restart manages
// that (only possible with fewer points than clusters).
KMeansResult kmeans(const Eigen::MatrixXd& points, int K, int restarts, int max_iterations,
                    std::uint64_t seed);

// Stage 1: leading K eigenvectors of A, rows clustered by k-means.
ClusterAssignment spectral_partition(const WeightedAdjacency& a, int K,
                                     const SpectralOptions& options = {});

}  // namespace hypermc::mch
