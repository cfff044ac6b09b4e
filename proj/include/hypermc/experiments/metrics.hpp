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

#include <vector>

#include "hypermc/core/types.hpp"

namespace hypermc::exp {

// Fraction of entries where the estimate differs from the truth.
double mean_absolute_error(const SignMatrix& estimate, const SignMatrix& truth);

// Minimum-cost perfect matching (rows to columns) of a square cost matrix.
// Returns the column assigned to each row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Misclassified fraction after the best relabelling of `estimate` onto
// `truth`. Exact (Hungarian) for up to 12 labels, greedy above.
double cluster_error_fraction(const ClusterAssignment& truth, const ClusterAssignment& estimate);

// Half-width of the 95% Wilson score interval for `failures` out of `trials`.
double wilson_half_width(int failures, int trials);

}  // namespace hypermc::exp
