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

#include "hypermc/core/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hypermc/error.hpp"

namespace hypermc {

namespace {

std::string edge_text(const std::vector<int>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i] + 1);
  }
  return s + "}";
}

}  // namespace

UniformHypergraph::UniformHypergraph(int n, int d, std::vector<std::vector<int>> edges)
    : n_(n), d_(d) {
  require(n >= 0, "node count must be nonnegative");
  require(d >= 2, "uniformity must be at least 2");
  for (auto& e : edges) {
    require(static_cast<int>(e.size()) == d,
            "hyperedge " + edge_text(e) + " does not have " + std::to_string(d) + " members");
    std::sort(e.begin(), e.end());
    for (int v : e) {
      require(v >= 0 && v < n, "hyperedge " + edge_text(e) + " names a node outside 1.." +
                                   std::to_string(n));
    }
    require(std::adjacent_find(e.begin(), e.end()) == e.end(),
            "hyperedge " + edge_text(e) + " repeats a member");
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  require(dup == edges.end(),
          dup == edges.end() ? "" : "duplicate hyperedge " + edge_text(*dup));

  n_edges_ = edges.size();
  members_.reserve(n_edges_ * d);
  for (const auto& e : edges) members_.insert(members_.end(), e.begin(), e.end());

  incidence_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v : members_) ++incidence_offset_[v + 1];
  for (int v = 0; v < n; ++v) incidence_offset_[v + 1] += incidence_offset_[v];
  incidence_.resize(members_.size());
  std::vector<std::size_t> cursor(incidence_offset_.begin(), incidence_offset_.end() - 1);
  for (std::size_t e = 0; e < n_edges_; ++e) {
    for (int v : edge(e)) incidence_[cursor[v]++] = static_cast<std::uint32_t>(e);
  }
}

std::vector<std::vector<int>> UniformHypergraph::edge_list() const {
  std::vector<std::vector<int>> out;
  out.reserve(n_edges_);
  for (std::size_t e = 0; e < n_edges_; ++e) {
    auto span = edge(e);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

HypergraphBundle::HypergraphBundle(int n, int max_uniformity)
    : n_(n), max_uniformity_(max_uniformity) {
  require(n >= 0, "node count must be nonnegative");
  require(max_uniformity >= 2, "W must be at least 2");
  for (int d = 2; d <= max_uniformity; ++d) layers_.emplace(d, UniformHypergraph(n, d, {}));
}

void HypergraphBundle::set_layer(UniformHypergraph layer) {
  require(layer.n() == n_, "layer node count " + std::to_string(layer.n()) +
                               " differs from bundle node count " + std::to_string(n_));
  const int d = layer.d();
  for (int k = max_uniformity_ + 1; k < d; ++k) layers_.emplace(k, UniformHypergraph(n_, k, {}));
  max_uniformity_ = std::max(max_uniformity_, d);
  layers_.insert_or_assign(d, std::move(layer));
}

std::size_t HypergraphBundle::total_edges() const {
  std::size_t total = 0;
  for (const auto& [d, hg] : layers_) total += hg.size();
  return total;
}

HypergraphBundle HypergraphBundle::truncated(int max_d) const {
  HypergraphBundle out(n_, std::max(2, std::min(max_d, max_uniformity_)));
  for (const auto& [d, hg] : layers_) {
    if (d <= max_d) out.layers_.insert_or_assign(d, hg);
  }
  return out;
}

}  // namespace hypermc
