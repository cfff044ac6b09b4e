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

#include "hypermc/io/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace hypermc::io {

ParseError::ParseError(int line, const std::string& what)
    : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

const std::string kFormatHeader = "# hypermc-format v1\n";

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-blank lines with their 1-based numbers, comments kept.
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool is_comment(const Line& l) { return l.tokens.front().starts_with('#'); }

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

int node_id(std::string_view token, int line) {
  const auto v = to_integer(token);
  if (!v) throw ParseError(line, "'" + std::string(token) + "' is not an integer node id");
  if (*v < 1) throw ParseError(line, "node id " + std::to_string(*v) + " is below 1");
  if (*v > std::numeric_limits<int>::max() / 2) {
    throw ParseError(line, "node id " + std::to_string(*v) + " is too large");
  }
  return static_cast<int>(*v);
}

}  // namespace

Network parse_hyperedge_list(std::string_view text) {
  std::map<int, std::set<std::vector<int>>> by_size;
  std::optional<int> declared_n;
  int max_id = 0;
  int max_line = 0;
  int duplicates = 0;
  bool in_labels = false;
  std::vector<std::pair<int, std::string>> label_lines;  // (node, class)
  std::map<int, int> label_line_of;

  for (const auto& line : lines_of(text)) {
    const auto& tok = line.tokens;
    if (is_comment(line)) {
      if (tok.front() == "#nodes") {
        if (tok.size() != 2) throw ParseError(line.number, "'#nodes' takes one value");
        const auto v = to_integer(tok[1]);
        if (!v || *v < 1 || *v > std::numeric_limits<int>::max() / 2) {
          throw ParseError(line.number, "'#nodes' needs a positive integer");
        }
        declared_n = static_cast<int>(*v);
      } else if (tok.front() == "#labels") {
        in_labels = true;
      }
      continue;
    }
    if (in_labels) {
      if (tok.size() != 2) throw ParseError(line.number, "label lines read 'node class'");
      const int node = node_id(tok[0], line.number);
      if (label_line_of.contains(node)) {
        throw ParseError(line.number, "node " + std::to_string(node) +
                                          " already labelled on line " +
                                          std::to_string(label_line_of[node]));
      }
      label_line_of[node] = line.number;
      label_lines.emplace_back(node, std::string(tok[1]));
      if (node > max_id) {
        max_id = node;
        max_line = line.number;
      }
      continue;
    }
    if (tok.size() < 2) {
      throw ParseError(line.number, "hyperedge of size " + std::to_string(tok.size()) +
                                        " (need at least 2 nodes)");
    }
    std::vector<int> edge;
    for (auto t : tok) edge.push_back(node_id(t, line.number));
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ParseError(line.number, "hyperedge repeats a node");
    }
    if (edge.back() > max_id) {
      max_id = edge.back();
      max_line = line.number;
    }
    if (!by_size[static_cast<int>(edge.size())].insert(std::move(edge)).second) ++duplicates;
  }

  const int n = declared_n.value_or(max_id);
  if (declared_n && max_id > *declared_n) {
    throw ParseError(max_line, "node id " + std::to_string(max_id) + " exceeds '#nodes " +
                                   std::to_string(*declared_n) + "'");
  }
  require(n >= 1, "network has no nodes");
  const int W = by_size.empty() ? 2 : std::max(2, by_size.rbegin()->first);
  require(W <= n, "hyperedge larger than the node count");

  Network out;
  out.duplicates = duplicates;
  out.bundle = HypergraphBundle(n, W);
  for (auto& [d, edges] : by_size) {
    std::vector<std::vector<int>> zero_based;
    zero_based.reserve(edges.size());
    for (const auto& e : edges) {
      std::vector<int> z(e.size());
      std::transform(e.begin(), e.end(), z.begin(), [](int v) { return v - 1; });
      zero_based.push_back(std::move(z));
    }
    out.bundle.set_layer(UniformHypergraph(n, d, std::move(zero_based)));
  }

  if (!label_lines.empty()) {
    for (int node = 1; node <= n; ++node) {
      require(label_line_of.contains(node),
              "node " + std::to_string(node) + " has no class label");
    }
    const bool numeric = std::all_of(label_lines.begin(), label_lines.end(), [](const auto& l) {
      const auto v = to_integer(l.second);
      return v && *v >= 1 && *v <= 1'000'000;
    });
    std::vector<int> labels(n, 0);
    int K = 0;
    if (numeric) {
      for (const auto& [node, cls] : label_lines) {
        labels[node - 1] = static_cast<int>(*to_integer(cls)) - 1;
        K = std::max(K, labels[node - 1] + 1);
      }
      for (int k = 1; k <= K; ++k) out.class_names.push_back(std::to_string(k));
    } else {
      std::map<std::string, int> index;
      for (const auto& [node, cls] : label_lines) {
        auto [it, added] = index.emplace(cls, static_cast<int>(index.size()));
        if (added) out.class_names.push_back(cls);
        labels[node - 1] = it->second;
      }
      K = static_cast<int>(index.size());
    }
    out.labels = ClusterAssignment(K, std::move(labels));
  }
  return out;
}

std::string format_hyperedge_list(const HypergraphBundle& bundle,
                                  const std::optional<ClusterAssignment>& labels) {
  std::ostringstream out;
  out << kFormatHeader << "#nodes " << bundle.n() << '\n';
  for (const auto& [d, layer] : bundle.layers()) {
    for (std::size_t e = 0; e < layer.size(); ++e) {
      const auto members = layer.edge(e);
      for (std::size_t i = 0; i < members.size(); ++i) {
        out << (i ? " " : "") << members[i] + 1;
      }
      out << '\n';
    }
  }
  if (labels) {
    require(labels->n() == bundle.n(), "labels and network disagree on n");
    out << "#labels\n";
    for (int i = 0; i < labels->n(); ++i) out << i + 1 << ' ' << labels->label(i) + 1 << '\n';
  }
  return out.str();
}

HypergraphBundle clique_expand(const HypergraphBundle& bundle) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& [d, layer] : bundle.layers()) {
    for (std::size_t e = 0; e < layer.size(); ++e) {
      const auto m = layer.edge(e);
      for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) pairs.emplace(m[a], m[b]);
      }
    }
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  HypergraphBundle out(bundle.n(), 2);
  out.set_layer(UniformHypergraph(bundle.n(), 2, std::move(edges)));
  return out;
}

namespace {

struct MatrixText {
  int n = 0;
  int m = 0;
  std::vector<Line> rows;
};

MatrixText matrix_lines(std::string_view text) {
  MatrixText out;
  std::vector<Line> lines;
  for (auto& l : lines_of(text)) {
    if (!is_comment(l)) lines.push_back(std::move(l));
  }
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must read 'n m'");
  const auto n = to_integer(header.tokens[0]);
  const auto m = to_integer(header.tokens[1]);
  if (!n || !m || *n < 1 || *m < 1 || *n > 100'000'000 || *m > 100'000'000) {
    throw ParseError(header.number, "header must hold two positive integers");
  }
  out.n = static_cast<int>(*n);
  out.m = static_cast<int>(*m);
  const std::size_t found = lines.size() - 1;
  if (found != static_cast<std::size_t>(out.n)) {
    const int at = found > static_cast<std::size_t>(out.n) ? lines[out.n + 1].number
                                                           : lines.back().number;
    throw ParseError(at, "expected " + std::to_string(out.n) + " rows, found " +
                             std::to_string(found));
  }
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].tokens.size() != static_cast<std::size_t>(out.m)) {
      throw ParseError(lines[r].number, "row " + std::to_string(r) + " has " +
                                            std::to_string(lines[r].tokens.size()) +
                                            " entries, expected " + std::to_string(out.m));
    }
    out.rows.push_back(std::move(lines[r]));
  }
  return out;
}

std::string cell_error(int row, int col, std::string_view token,
                       std::string_view alphabet) {
  return "entry (" + std::to_string(row + 1) + ", " + std::to_string(col + 1) + ") is '" +
         std::string(token) + "', expected one of " + std::string(alphabet);
}

}  // namespace

ObservedMatrix parse_observed(std::string_view text) {
  const auto mt = matrix_lines(text);
  ObservedMatrix u(mt.n, mt.m);
  for (int i = 0; i < mt.n; ++i) {
    for (int j = 0; j < mt.m; ++j) {
      const auto t = mt.rows[i].tokens[j];
      if (t == "+1") {
        u.set(i, j, Entry::kPlus);
      } else if (t == "-1") {
        u.set(i, j, Entry::kMinus);
      } else if (t != "*") {
        throw ParseError(mt.rows[i].number, cell_error(i, j, t, "+1 -1 *"));
      }
    }
  }
  return u;
}

std::string format_observed(const ObservedMatrix& u) {
  std::string out = kFormatHeader + std::to_string(u.n()) + " " + std::to_string(u.m()) + "\n";
  for (int i = 0; i < u.n(); ++i) {
    for (int j = 0; j < u.m(); ++j) {
      if (j) out += ' ';
      switch (u.at(i, j)) {
        case Entry::kPlus: out += "+1"; break;
        case Entry::kMinus: out += "-1"; break;
        case Entry::kMissing: out += '*'; break;
      }
    }
    out += '\n';
  }
  return out;
}

SignMatrix parse_completed(std::string_view text) {
  const auto mt = matrix_lines(text);
  std::vector<Sign> values;
  values.reserve(static_cast<std::size_t>(mt.n) * mt.m);
  for (int i = 0; i < mt.n; ++i) {
    for (int j = 0; j < mt.m; ++j) {
      const auto t = mt.rows[i].tokens[j];
      if (t == "+1") {
        values.push_back(1);
      } else if (t == "-1") {
        values.push_back(-1);
      } else {
        throw ParseError(mt.rows[i].number, cell_error(i, j, t, "+1 -1"));
      }
    }
  }
  return SignMatrix(mt.n, mt.m, std::move(values));
}

std::string format_completed(const SignMatrix& r) {
  std::string out = kFormatHeader + std::to_string(r.n()) + " " + std::to_string(r.m()) + "\n";
  for (int i = 0; i < r.n(); ++i) {
    for (int j = 0; j < r.m(); ++j) {
      if (j) out += ' ';
      out += r.at(i, j) > 0 ? "+1" : "-1";
    }
    out += '\n';
  }
  return out;
}

ClusterAssignment parse_clusters(std::string_view text) {
  std::map<int, int> label_of;
  int K = 0;
  for (const auto& line : lines_of(text)) {
    if (is_comment(line)) continue;
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'user cluster'");
    const int user = node_id(line.tokens[0], line.number);
    const auto cluster = to_integer(line.tokens[1]);
    if (!cluster || *cluster < 1 || *cluster > 1'000'000) {
      throw ParseError(line.number, "cluster must be a positive integer");
    }
    if (!label_of.emplace(user, static_cast<int>(*cluster) - 1).second) {
      throw ParseError(line.number, "user " + std::to_string(user) + " listed twice");
    }
    K = std::max(K, static_cast<int>(*cluster));
  }
  require(!label_of.empty(), "cluster file is empty");
  const int n = label_of.rbegin()->first;
  std::vector<int> labels(n);
  for (int i = 1; i <= n; ++i) {
    auto it = label_of.find(i);
    require(it != label_of.end(), "user " + std::to_string(i) + " has no cluster");
    labels[i - 1] = it->second;
  }
  return ClusterAssignment(K, std::move(labels));
}

std::string format_clusters(const ClusterAssignment& c) {
  std::string out = kFormatHeader;
  for (int i = 0; i < c.n(); ++i) {
    out += std::to_string(i + 1) + " " + std::to_string(c.label(i) + 1) + "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeFailure("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw RuntimeFailure("write to '" + path.string() + "' failed");
}

}  // namespace hypermc::io
