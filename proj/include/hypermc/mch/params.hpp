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
#include "hypermc/mch/stages.hpp"

namespace hypermc::mch {

inline constexpr double kThetaFloor = 1e-6;
inline constexpr double kProbabilityFloor = 1e-12;

// Parameters recovered from the Stage 1/2 output. The clamped values satisfy
// theta in [1e-6, 1/2 - 1e-6] and alpha, beta in [1e-12, 1 - 1e-12]; the raw
// values are what the plug-in estimators produced.
struct EstimatedParams {
  double theta = 0.0;
  std::map<int, double> alpha;
  std::map<int, double> beta;
  double theta_raw = 0.0;
  std::map<int, double> alpha_raw;
  std::map<int, double> beta_raw;
};

// Plug-in estimates from the initial clusters and vectors:
//   alpha'_d = sum_k h_d(C_k, C_k) / (K C(n/K, d))
//   beta'_d  = (|H_d| - sum_k h_d(C_k, C_k)) / (C(n, d) - K C(n/K, d))
//   theta'   = 1 - |Lambda_{R0}| / |U|
// C(n/K, d) is the falling-factorial binomial so that K need not divide n.
// Throws ValidationError when U has no observed entry.
EstimatedParams estimate_params(const ClusterAssignment& init_clusters,
                                const std::vector<SignVector>& init_vectors,
                                const HypergraphBundle& bundle, const ObservedMatrix& u);

double clamp_theta(double theta);
double clamp_probability(double x);

// T = ceil(log2 n) and
//   c_d = log(alpha_d (1 - beta_d) / (beta_d (1 - alpha_d))) / (K log((1 - theta) / theta))
// after clamping; a layer whose clamped alpha_d <= beta_d gets c_d = 0.
RefineConfig default_refine_config(double theta, const std::map<int, double>& alpha,
                                   const std::map<int, double>& beta, int n, int K);
RefineConfig default_refine_config(const ModelParams& params);
RefineConfig default_refine_config(const EstimatedParams& est, int n, int K);

int default_iterations(int n);

}  // namespace hypermc::mch
