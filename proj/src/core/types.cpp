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

#include "hypermc/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypermc/error.hpp"

namespace hypermc {

ClusterAssignment::ClusterAssignment(int num_clusters, std::vector<int> labels,
                                     bool symmetric)
    : num_clusters_(num_clusters), labels_(std::move(labels)), symmetric_(symmetric) {
  require(num_clusters_ >= 1, "cluster count must be positive");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 0 || labels_[i] >= num_clusters_) {
      fail_validation("user " + std::to_string(i + 1) + " has label " +
                      std::to_string(labels_[i] + 1) + " outside 1.." +
                      std::to_string(num_clusters_));
    }
  }
  if (symmetric_) {
    require(n() % num_clusters_ == 0, "symmetric assignment needs K | n");
    for (int s : sizes()) {
      require(s == n() / num_clusters_, "symmetric assignment has unequal clusters");
    }
  }
}

std::vector<int> ClusterAssignment::sizes() const {
  std::vector<int> out(num_clusters_, 0);
  for (int l : labels_) ++out[l];
  return out;
}

std::vector<int> ClusterAssignment::members(int k) const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i) {
    if (labels_[i] == k) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> ClusterAssignment::clusters() const {
  std::vector<std::vector<int>> out(num_clusters_);
  for (int i = 0; i < n(); ++i) out[labels_[i]].push_back(i);
  return out;
}

SignMatrix::SignMatrix(int n, int m, std::vector<Sign> values)
    : n_(n), m_(m), values_(std::move(values)) {
  require(n >= 0 && m >= 0, "matrix dimensions must be nonnegative");
  require(values_.size() == static_cast<std::size_t>(n) * m,
          "matrix value count does not match n*m");
  for (Sign s : values_) require(s == 1 || s == -1, "ratings must be +1 or -1");
}

RatingMatrix::RatingMatrix(std::vector<SignVector> vectors,
                           ClusterAssignment assignment, double gamma)
    : vectors_(std::move(vectors)), assignment_(std::move(assignment)), gamma_(gamma) {
  require(static_cast<int>(vectors_.size()) == assignment_.K(),
          "need one nominal vector per cluster");
  m_ = vectors_.empty() ? 0 : static_cast<int>(vectors_.front().size());
  for (const auto& v : vectors_) {
    require(static_cast<int>(v.size()) == m_, "nominal vectors differ in length");
    for (Sign s : v) require(s == 1 || s == -1, "ratings must be +1 or -1");
  }
}

SignMatrix RatingMatrix::dense() const {
  std::vector<Sign> values;
  values.reserve(static_cast<std::size_t>(n()) * m_);
  for (int i = 0; i < n(); ++i) {
    const auto& v = vectors_[assignment_.label(i)];
    values.insert(values.end(), v.begin(), v.end());
  }
  return SignMatrix(n(), m_, std::move(values));
}

ObservedMatrix::ObservedMatrix(int n, int m)
    : n_(n), m_(m), entries_(static_cast<std::size_t>(n) * m, Entry::kMissing) {
  require(n >= 0 && m >= 0, "matrix dimensions must be nonnegative");
}

ObservedMatrix::ObservedMatrix(int n, int m, std::vector<Entry> entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
  require(n >= 0 && m >= 0, "matrix dimensions must be nonnegative");
  require(entries_.size() == static_cast<std::size_t>(n) * m,
          "entry count does not match n*m");
  for (Entry e : entries_) {
    require(e == Entry::kMissing || e == Entry::kPlus || e == Entry::kMinus,
            "invalid entry symbol");
  }
}

std::int64_t ObservedMatrix::observed_count() const {
  std::int64_t c = 0;
  for (Entry e : entries_) c += e != Entry::kMissing;
  return c;
}

int ObservedMatrix::row_observed_count(int i) const {
  int c = 0;
  for (Entry e : row(i)) c += e != Entry::kMissing;
  return c;
}

namespace {

void require_probability(double x, const std::string& name) {
  if (!(x >= 0.0 && x <= 1.0)) fail_validation(name + " must lie in [0, 1]");
}

}  // namespace

void ModelParams::validate() const {
  require(n >= 1, "n must be positive");
  require(m >= 1, "m must be positive");
  require(K >= 2, "K must be at least 2");
  require(K <= n, "K must not exceed n");
  require(n % K == 0, "K must divide n (symmetric setting)");
  require(theta >= 0.0 && theta < 0.5, "theta must lie in [0, 1/2)");
  require_probability(p, "p");
  require(gamma > 0.0 && gamma <= 1.0, "gamma must lie in (0, 1]");
  require(W >= 2, "W must be at least 2");
  const int g = min_distance_for(gamma, m);
  require(g >= 1, "ceil(gamma*m) must be at least 1");
  require(static_cast<long long>(K - 1) * g <= m,
          "(K-1)*ceil(gamma*m) must not exceed m");
  for (const auto& [d, a] : alpha) {
    const std::string tag = "layer " + std::to_string(d);
    require(d >= 2 && d <= W, tag + ": uniformity outside 2..W");
    require(d <= n, tag + ": uniformity exceeds n");
    require_probability(a, tag + " alpha");
    auto it = beta.find(d);
    require(it != beta.end(), tag + ": alpha given without beta");
    require_probability(it->second, tag + " beta");
    require(a >= it->second, tag + ": alpha must be at least beta");
  }
  for (const auto& [d, b] : beta) {
    require(alpha.count(d) != 0, "layer " + std::to_string(d) + ": beta given without alpha");
  }
}

int min_distance_for(double gamma, int m) {
  const double raw = gamma * m;
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) <= 1e-9 * std::max(1.0, std::abs(raw))) {
    return static_cast<int>(nearest);
  }
  return static_cast<int>(std::ceil(raw));
}

int hamming_distance(std::span<const Sign> a, std::span<const Sign> b) {
  require(a.size() == b.size(), "vectors differ in length");
  int d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
  return d;
}

}  // namespace hypermc
