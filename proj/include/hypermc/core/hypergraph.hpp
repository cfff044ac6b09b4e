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
#include <map>
#include <span>
#include <vector>

namespace hypermc {

// d-uniform hypergraph on nodes 0..n-1. Hyperedges are stored as sorted member
// lists in lexicographic order, so two hypergraphs with the same edge set
// compare equal. A per-node incidence index backs the counting primitives.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  // Throws ValidationError on a wrong-sized edge, repeated member, out of
  // range node or duplicate hyperedge.
  UniformHypergraph(int n, int d, std::vector<std::vector<int>> edges);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return n_edges_; }
  bool empty() const { return n_edges_ == 0; }

  std::span<const int> edge(std::size_t e) const {
    return {members_.data() + e * static_cast<std::size_t>(d_),
            static_cast<std::size_t>(d_)};
  }
  // Ids of hyperedges containing `node`, increasing.
  std::span<const std::uint32_t> incident(int node) const {
    return {incidence_.data() + incidence_offset_[node],
            incidence_.data() + incidence_offset_[node + 1]};
  }
  std::vector<std::vector<int>> edge_list() const;

  bool operator==(const UniformHypergraph& o) const {
    return n_ == o.n_ && d_ == o.d_ && members_ == o.members_;
  }

 private:
  int n_ = 0;
  int d_ = 2;
  std::size_t n_edges_ = 0;
  std::vector<int> members_;
  std::vector<std::size_t> incidence_offset_;
  std::vector<std::uint32_t> incidence_;
};

// One uniform layer per d in 2..W, all over the same node set. The d = 2
// layer is the social graph. Every key in 2..W is present; layers that were
// never observed are empty.
class HypergraphBundle {
 public:
  HypergraphBundle() = default;
  HypergraphBundle(int n, int max_uniformity);

  int n() const { return n_; }
  int W() const { return max_uniformity_; }

  // Replaces the layer for layer.d(); raises W (adding empty layers) when d
  // exceeds it.
  void set_layer(UniformHypergraph layer);
  // Throws std::out_of_range for d outside 2..W.
  const UniformHypergraph& layer(int d) const { return layers_.at(d); }
  const std::map<int, UniformHypergraph>& layers() const { return layers_; }
  std::size_t total_edges() const;

  // Copy with only layers d <= max_d retained.
  HypergraphBundle truncated(int max_d) const;

  bool operator==(const HypergraphBundle& o) const {
    return n_ == o.n_ && layers_ == o.layers_;
  }

 private:
  int n_ = 0;
  int max_uniformity_ = 2;
  std::map<int, UniformHypergraph> layers_;
};

}  // namespace hypermc
