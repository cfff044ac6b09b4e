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
#include <optional>
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"
#include "hypermc/mch/params.hpp"
#include "hypermc/mch/spectral.hpp"
#include "hypermc/mch/stages.hpp"

namespace hypermc::mch {

// Where Stage 3 takes its weights c_d from.
struct MchOptions {
  // Known model parameters; c_d follows from them directly.
  std::optional<ModelParams> true_params;
  // Fixed c_d for every listed layer (takes precedence over everything else).
  std::optional<std::map<int, double>> fixed_c;
  // Overrides T = ceil(log2 n).
  std::optional<int> iterations;
  SpectralOptions spectral;
};

struct MchResult {
  SignMatrix completed;
  ClusterAssignment initial;
  ClusterAssignment clusters;
  std::vector<SignVector> vectors;
  std::optional<EstimatedParams> estimates;
  RefineConfig config;
  RefineOutcome refinement;
};

// Stage 1 (spectral partition of the weighted adjacency), Stage 2 (majority
// vote), parameter estimation when neither true parameters nor fixed weights
// are supplied, Stage 3 (refinement), then row i of the output is v'_k for the
// final cluster k of user i.
MchResult run_mch(const HypergraphBundle& bundle, const ObservedMatrix& u, int K,
                  const MchOptions& options = {});

}  // namespace hypermc::mch
