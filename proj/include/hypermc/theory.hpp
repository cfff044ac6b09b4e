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
#include <string_view>
#include <vector>

#include "hypermc/core/types.hpp"

namespace hypermc::theory {

// I_theta = (sqrt(1 - theta) - sqrt(theta))^2, theta in [0, 1/2).
double info_theta(double theta);

// I_d = (sqrt(alpha) - sqrt(beta))^2, both in [0, 1].
double info_d(double alpha, double beta);

// I_h = sum_d C(n-1, d-1) K^(1-d) I_d.
double info_h(int n, int K, const std::map<int, double>& i_d);

// Which term of the threshold binds.
enum class Regime { kClusterRecovery, kVectorRecovery };
std::string_view to_string(Regime r);

struct Threshold {
  double p_star = 0.0;         // clamped to [0, 1]
  double cluster_term = 0.0;   // (log n - I_h) / (I_theta gamma m), floored at 0
  double cluster_term_raw = 0.0;
  double vector_term = 0.0;    // K log m / (I_theta n)
  Regime regime = Regime::kClusterRecovery;
  bool clamped = false;        // the formula exceeded 1
};

// Optimal sample probability
//   p* = max{ (log n - I_h) / (I_theta gamma m), K log m / (I_theta n) }
// with the first term floored at 0. Throws ValidationError when I_theta = 0.
Threshold p_star_from_ih(int n, int m, int K, double gamma, double theta, double i_h);
Threshold p_star(int n, int m, int K, double gamma, double theta,
                 const std::map<int, double>& i_d);

// g* = (log n / (gamma m) - K log m / n) / I_theta. May be negative, in which
// case the graph side can never bring the threshold down.
double max_gain(int n, int m, int K, double gamma, double theta);

struct RecoveryCheck {
  bool holds = false;
  double cluster_lhs = 0.0;  // I_h + gamma m p I_theta
  double cluster_rhs = 0.0;  // (1 + eps) log n
  double vector_lhs = 0.0;   // n p I_theta / K
  double vector_rhs = 0.0;   // (1 + eps) log m
};

// The two sufficient conditions, in their reformulated (multiplied-out) form.
RecoveryCheck recovery_condition(const ModelParams& params, double epsilon);

// Collected quantities for one parameter set.
struct InfoQuantities {
  double i_theta = 0.0;
  std::map<int, double> i_d;
  double i_h = 0.0;
  Threshold threshold;
  double g_star = 0.0;
  double sample_complexity = 0.0;  // n m p*
};

InfoQuantities info_quantities(const ModelParams& params);

struct CurvePoint {
  double i_h = 0.0;
  double p_star = 0.0;
};

// p* as a function of I_h: linear with slope -1/(I_theta gamma m), then flat
// past the kink at log n - K gamma m log m / n. Grid values must be >= 0.
std::vector<CurvePoint> gain_curve(int n, int m, int K, double gamma, double theta,
                                   const std::vector<double>& i_h_grid);
double gain_kink(int n, int m, int K, double gamma);

}  // namespace hypermc::theory
