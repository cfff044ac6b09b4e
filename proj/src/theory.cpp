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

#include "hypermc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypermc/core/combinatorics.hpp"
#include "hypermc/error.hpp"

namespace hypermc::theory {

double info_theta(double theta) {
  require(theta >= 0.0 && theta < 0.5, "theta must lie in [0, 1/2)");
  const double s = std::sqrt(1.0 - theta) - std::sqrt(theta);
  return s * s;
}

double info_d(double alpha, double beta) {
  require(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0,
          "alpha and beta must lie in [0, 1]");
  const double s = std::sqrt(alpha) - std::sqrt(beta);
  return s * s;
}

double info_h(int n, int K, const std::map<int, double>& i_d) {
  double total = 0.0;
  for (const auto& [d, q] : i_d) {
    total += choose_real(n - 1, d - 1) * std::pow(static_cast<double>(K), 1 - d) * q;
  }
  return total;
}

std::string_view to_string(Regime r) {
  return r == Regime::kClusterRecovery ? "cluster-recovery" : "vector-recovery";
}

Threshold p_star_from_ih(int n, int m, int K, double gamma, double theta, double i_h) {
  require(n >= 2 && m >= 2 && K >= 2, "need n, m, K >= 2");
  require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  const double it = info_theta(theta);
  require(it > 0.0, "I_theta = 0: the threshold diverges");
  Threshold t;
  t.cluster_term_raw = (std::log(n) - i_h) / (it * gamma * m);
  t.cluster_term = std::max(0.0, t.cluster_term_raw);
  t.vector_term = K * std::log(m) / (it * n);
  t.regime = t.cluster_term >= t.vector_term ? Regime::kClusterRecovery : Regime::kVectorRecovery;
  const double p = std::max(t.cluster_term, t.vector_term);
  t.clamped = p > 1.0;
  t.p_star = std::min(p, 1.0);
  return t;
}

Threshold p_star(int n, int m, int K, double gamma, double theta,
                 const std::map<int, double>& i_d) {
  return p_star_from_ih(n, m, K, gamma, theta, info_h(n, K, i_d));
}

double max_gain(int n, int m, int K, double gamma, double theta) {
  const double it = info_theta(theta);
  require(it > 0.0, "I_theta = 0: the gain is undefined");
  return (std::log(n) / (gamma * m) - K * std::log(m) / n) / it;
}

namespace {

std::map<int, double> layer_qualities(const ModelParams& params) {
  std::map<int, double> out;
  for (const auto& [d, a] : params.alpha) out[d] = info_d(a, params.beta.at(d));
  return out;
}

}  // namespace

RecoveryCheck recovery_condition(const ModelParams& params, double epsilon) {
  const double it = info_theta(params.theta);
  RecoveryCheck c;
  c.cluster_lhs = info_h(params.n, params.K, layer_qualities(params)) +
                  params.gamma * params.m * params.p * it;
  c.cluster_rhs = (1.0 + epsilon) * std::log(params.n);
  c.vector_lhs = params.n * params.p * it / params.K;
  c.vector_rhs = (1.0 + epsilon) * std::log(params.m);
  c.holds = c.cluster_lhs >= c.cluster_rhs && c.vector_lhs >= c.vector_rhs;
  return c;
}

InfoQuantities info_quantities(const ModelParams& params) {
  InfoQuantities q;
  q.i_theta = info_theta(params.theta);
  q.i_d = layer_qualities(params);
  q.i_h = info_h(params.n, params.K, q.i_d);
  q.threshold = p_star_from_ih(params.n, params.m, params.K, params.gamma, params.theta, q.i_h);
  q.g_star = max_gain(params.n, params.m, params.K, params.gamma, params.theta);
  q.sample_complexity = static_cast<double>(params.n) * params.m * q.threshold.p_star;
  return q;
}

double gain_kink(int n, int m, int K, double gamma) {
  return std::log(n) - K * gamma * m * std::log(m) / n;
}

std::vector<CurvePoint> gain_curve(int n, int m, int K, double gamma, double theta,
                                   const std::vector<double>& i_h_grid) {
  std::vector<CurvePoint> out;
  out.reserve(i_h_grid.size());
  for (double ih : i_h_grid) {
    require(ih >= 0.0, "I_h grid values must be nonnegative");
    out.push_back({ih, p_star_from_ih(n, m, K, gamma, theta, ih).p_star});
  }
  return out;
}

}  // namespace hypermc::theory
