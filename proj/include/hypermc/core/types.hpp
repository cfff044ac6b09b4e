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

// A rating is +1 (like) or -1 (dislike).
using Sign = std::int8_t;
using SignVector = std::vector<Sign>;

// Partition of users 0..n-1 into K labelled clusters. Clusters may be empty
// unless the assignment is marked symmetric, in which case every cluster has
// exactly n/K members.
class ClusterAssignment {
 public:
  ClusterAssignment() = default;
  ClusterAssignment(int num_clusters, std::vector<int> labels,
                    bool symmetric = false);

  int n() const { return static_cast<int>(labels_.size()); }
  int K() const { return num_clusters_; }
  int label(int user) const { return labels_[user]; }
  std::span<const int> labels() const { return labels_; }
  bool is_symmetric() const { return symmetric_; }

  std::vector<int> sizes() const;
  // Members of cluster k in increasing order.
  std::vector<int> members(int k) const;
  std::vector<std::vector<int>> clusters() const;

  // Same labels (the symmetric flag is metadata and does not participate).
  bool operator==(const ClusterAssignment& other) const {
    return num_clusters_ == other.num_clusters_ && labels_ == other.labels_;
  }

 private:
  int num_clusters_ = 0;
  std::vector<int> labels_;
  bool symmetric_ = false;
};

// Dense n x m matrix over {+1,-1}: ground truth R or a completed estimate.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(int n, int m, std::vector<Sign> values);

  int n() const { return n_; }
  int m() const { return m_; }
  Sign at(int i, int j) const { return values_[static_cast<std::size_t>(i) * m_ + j]; }
  std::span<const Sign> row(int i) const {
    return {values_.data() + static_cast<std::size_t>(i) * m_,
            static_cast<std::size_t>(m_)};
  }
  std::span<const Sign> values() const { return values_; }

  bool operator==(const SignMatrix&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Sign> values_;
};

// Nominal rating matrix: K nominal vectors plus the user -> cluster map.
class RatingMatrix {
 public:
  RatingMatrix() = default;
  RatingMatrix(std::vector<SignVector> vectors, ClusterAssignment assignment,
               double gamma = 0.0);

  int n() const { return assignment_.n(); }
  int m() const { return m_; }
  int K() const { return assignment_.K(); }
  double gamma() const { return gamma_; }
  const std::vector<SignVector>& vectors() const { return vectors_; }
  const ClusterAssignment& assignment() const { return assignment_; }
  Sign at(int i, int j) const { return vectors_[assignment_.label(i)][j]; }

  SignMatrix dense() const;

 private:
  int m_ = 0;
  std::vector<SignVector> vectors_;
  ClusterAssignment assignment_;
  double gamma_ = 0.0;
};

// Entry of the sub-sampled matrix. kMissing is its own symbol; it never takes
// part in sign arithmetic.
enum class Entry : std::uint8_t { kMissing, kPlus, kMinus };

inline Entry entry_from_sign(Sign s) { return s > 0 ? Entry::kPlus : Entry::kMinus; }
inline bool entry_matches(Entry e, Sign s) {
  return (e == Entry::kPlus && s > 0) || (e == Entry::kMinus && s < 0);
}

class ObservedMatrix {
 public:
  ObservedMatrix() = default;
  ObservedMatrix(int n, int m);  // all missing
  ObservedMatrix(int n, int m, std::vector<Entry> entries);

  int n() const { return n_; }
  int m() const { return m_; }
  Entry at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, Entry e) { entries_[index(i, j)] = e; }
  std::span<const Entry> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * m_,
            static_cast<std::size_t>(m_)};
  }
  std::span<const Entry> entries() const { return entries_; }

  // |U|, the number of observed entries.
  std::int64_t observed_count() const;
  int row_observed_count(int i) const;

  bool operator==(const ObservedMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * m_ + j;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<Entry> entries_;
};

// Ground-truth parameters of the generative model. Layers are keyed by
// uniformity d in 2..W; a missing key means that layer is not observed.
struct ModelParams {
  int n = 0;
  int m = 0;
  int K = 2;
  double theta = 0.0;
  double p = 0.0;
  double gamma = 0.0;
  int W = 2;
  std::map<int, double> alpha;
  std::map<int, double> beta;

  // Throws ValidationError naming the first violated constraint.
  void validate() const;
};

// ceil(gamma * m) robust to representation error (0.4 * 100 is 40, not 41).
int min_distance_for(double gamma, int m);

int hamming_distance(std::span<const Sign> a, std::span<const Sign> b);

}  // namespace hypermc
