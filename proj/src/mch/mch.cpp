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

#include "hypermc/mch/mch.hpp"

#include <string>

#include "hypermc/error.hpp"
#include "hypermc/mch/adjacency.hpp"

namespace hypermc::mch {

MchResult run_mch(const HypergraphBundle& bundle, const ObservedMatrix& u, int K,
                  const MchOptions& options) {
  require(bundle.n() == u.n(), "network has n = " + std::to_string(bundle.n()) +
                                   " but the matrix has n = " + std::to_string(u.n()));
  require(K >= 2 && K <= u.n(), "K must lie in 2..n");

  MchResult out;
  out.initial = spectral_partition(build_adjacency(bundle), K, options.spectral);
  out.vectors = majority_vote(out.initial, u);

  if (options.fixed_c) {
    out.config.T = default_iterations(u.n());
    out.config.c = *options.fixed_c;
  } else if (options.true_params) {
    out.config = default_refine_config(options.true_params->theta, options.true_params->alpha,
                                       options.true_params->beta, u.n(), K);
  } else {
    out.estimates = estimate_params(out.initial, out.vectors, bundle, u);
    out.config = default_refine_config(*out.estimates, u.n(), K);
  }
  if (options.iterations) out.config.T = *options.iterations;

  out.refinement = refine(out.initial, bundle, u, out.vectors, out.config);
  out.clusters = out.refinement.clusters;
  out.completed = RatingMatrix(out.vectors, out.clusters).dense();
  return out;
}

}  // namespace hypermc::mch
