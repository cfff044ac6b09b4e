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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermc/core/hypergraph.hpp"
#include "hypermc/core/types.hpp"
#include "hypermc/error.hpp"

namespace hypermc::io {

// Malformed input text; what() starts with "line N:".
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Hyperedge list: one hyperedge per line as 1-based node ids. Lines starting
// with '#' are comments except the directives '#nodes N' (node count, else the
// largest id seen) and '#labels', after which each line reads "node class".
struct Network {
  HypergraphBundle bundle;
  std::optional<ClusterAssignment> labels;
  std::vector<std::string> class_names;  // class index -> name as written
  int duplicates = 0;
};

Network parse_hyperedge_list(std::string_view text);
std::string format_hyperedge_list(const HypergraphBundle& bundle,
                                  const std::optional<ClusterAssignment>& labels = std::nullopt);

// Every hyperedge of size d >= 3 becomes its C(d,2) pairs; the result holds
// one simple graph layer.
HypergraphBundle clique_expand(const HypergraphBundle& bundle);

// Matrices: header "n m", then n rows of m tokens. Observed rows use
// {+1, -1, *}; completed rows use {+1, -1}. '#' lines are skipped.
ObservedMatrix parse_observed(std::string_view text);
std::string format_observed(const ObservedMatrix& u);
SignMatrix parse_completed(std::string_view text);
std::string format_completed(const SignMatrix& r);

// Cluster files: one "user cluster" pair per line, both 1-based.
ClusterAssignment parse_clusters(std::string_view text);
std::string format_clusters(const ClusterAssignment& c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hypermc::io
