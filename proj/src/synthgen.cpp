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

#include "hypermc/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "hypermc/core/combinatorics.hpp"
#include "hypermc/error.hpp"

namespace hypermc::synth {

namespace {

// Largest stratum we are willing to enumerate when a layer is dense enough
// that rejection sampling would stall.
constexpr std::int64_t kMaxEnumeratedStratum = 5'000'000;

std::int64_t draw_binomial(std::int64_t trials, double prob, Rng& rng) {
  if (trials <= 0 || prob <= 0.0) return 0;
  if (prob >= 1.0) return trials;
  return std::binomial_distribution<std::int64_t>(trials, prob)(rng);
}

// Floyd's algorithm: k distinct indices from [0, pool), returned sorted.
std::vector<int> sample_indices(int pool, int k, Rng& rng) {
  std::vector<int> chosen;
  chosen.reserve(k);
  for (int j = pool - k; j < pool; ++j) {
    const int t = std::uniform_int_distribution<int>(0, j)(rng);
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool single_cluster(const std::vector<int>& edge, std::span<const int> labels) {
  for (int v : edge) {
    if (labels[v] != labels[edge[0]]) return false;
  }
  return true;
}

// Calls visit(subset) for every size-d subset of `pool` in lexicographic order.
template <typename Visit>
void for_each_subset(const std::vector<int>& pool, int d, Visit&& visit) {
  const int size = static_cast<int>(pool.size());
  if (d > size) return;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> subset(d);
  while (true) {
    for (int t = 0; t < d; ++t) subset[t] = pool[idx[t]];
    visit(subset);
    int t = d - 1;
    while (t >= 0 && idx[t] == size - d + t) --t;
    if (t < 0) return;
    ++idx[t];
    for (int u = t + 1; u < d; ++u) idx[u] = idx[u - 1] + 1;
  }
}

// Fills `out` with `count` distinct uniform members of a stratum of `total`
// subsets. `draw` proposes a uniform member (or returns false to reject);
// `enumerate` lists the whole stratum for the dense case.
template <typename Draw, typename Enumerate>
void fill_stratum(std::int64_t count, std::int64_t total, Rng& rng, Draw&& draw,
                  Enumerate&& enumerate, std::vector<std::vector<int>>& out) {
  if (count == 0) return;
  if (2 * count <= total) {
    std::set<std::vector<int>> picked;
    const std::int64_t max_attempts = std::max<std::int64_t>(100 * count, 100);
    std::vector<int> candidate;
    for (std::int64_t attempt = 0; static_cast<std::int64_t>(picked.size()) < count;
         ++attempt) {
      if (attempt >= max_attempts) {
        throw RuntimeFailure("hyperedge sampling exceeded its retry budget");
      }
      if (draw(candidate)) picked.insert(candidate);
    }
    out.insert(out.end(), picked.begin(), picked.end());
    return;
  }
  if (total > kMaxEnumeratedStratum) {
    fail_validation("hypergraph layer too dense to sample (" + std::to_string(count) +
                    " of " + std::to_string(total) + " subsets)");
  }
  std::vector<std::vector<int>> all;
  all.reserve(static_cast<std::size_t>(total));
  enumerate(all);
  for (std::int64_t i = 0; i < count; ++i) {
    const auto j = std::uniform_int_distribution<std::int64_t>(
        i, static_cast<std::int64_t>(all.size()) - 1)(rng);
    std::swap(all[i], all[j]);
    out.push_back(std::move(all[i]));
  }
}

}  // namespace

ClusterAssignment gen_clusters(int n, int K, std::uint64_t seed) {
  require(K >= 1 && n >= K, "need 1 <= K <= n");
  require(n % K == 0, "K = " + std::to_string(K) + " does not divide n = " + std::to_string(n));
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> labels(n);
  const int size = n / K;
  for (int pos = 0; pos < n; ++pos) labels[order[pos]] = pos / size;
  return ClusterAssignment(K, std::move(labels), /*symmetric=*/true);
}

std::vector<SignVector> gen_rating_vectors(int m, int K, double gamma, std::uint64_t seed) {
  require(m >= 1 && K >= 2, "need m >= 1 and K >= 2");
  const int g = min_distance_for(gamma, m);
  require(g >= 1, "ceil(gamma*m) = 0: distinct nominal vectors impossible");
  require(static_cast<long long>(K - 1) * g <= m,
          "(K-1)*ceil(gamma*m) = " + std::to_string(static_cast<long long>(K - 1) * g) +
              " exceeds m = " + std::to_string(m));
  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  SignVector base(m);
  for (auto& s : base) s = coin(rng) ? 1 : -1;
  std::vector<int> coords(m);
  std::iota(coords.begin(), coords.end(), 0);
  std::shuffle(coords.begin(), coords.end(), rng);

  std::vector<SignVector> out{base};
  for (int k = 1; k < K; ++k) {
    SignVector v = base;
    for (int t = (k - 1) * g; t < k * g; ++t) v[coords[t]] = static_cast<Sign>(-v[coords[t]]);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SignVector> gen_rating_vectors_sampled(int m, int K, double gamma,
                                                   std::uint64_t seed) {
  require(m >= 1 && K >= 2, "need m >= 1 and K >= 2");
  const int g = min_distance_for(gamma, m);
  require(g >= 1 && g <= m, "ceil(gamma*m) must lie in 1..m");
  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  SignVector base(m);
  for (auto& s : base) s = coin(rng) ? 1 : -1;
  SignVector second = base;
  for (int j : sample_indices(m, g, rng)) second[j] = static_cast<Sign>(-second[j]);
  std::vector<SignVector> out{base, second};

  constexpr int kMaxAttempts = 100000;
  for (int k = 2; k < K; ++k) {
    SignVector v(m);
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kMaxAttempts) {
        throw RuntimeFailure("could not place nominal vector " + std::to_string(k + 1) +
                             " at distance >= " + std::to_string(g));
      }
      for (auto& s : v) s = coin(rng) ? 1 : -1;
      bool ok = true;
      for (const auto& w : out) ok = ok && hamming_distance(v, w) >= g;
      if (ok) break;
    }
    out.push_back(std::move(v));
  }
  return out;
}

ObservedMatrix gen_observed(const RatingMatrix& r, double theta, double p,
                            std::uint64_t seed) {
  require(theta >= 0.0 && theta < 0.5, "theta must lie in [0, 1/2)");
  require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
  Rng rng(seed);
  std::bernoulli_distribution sampled(p);
  std::bernoulli_distribution flipped(theta);
  ObservedMatrix u(r.n(), r.m());
  for (int i = 0; i < r.n(); ++i) {
    for (int j = 0; j < r.m(); ++j) {
      if (!sampled(rng)) continue;
      const Sign s = flipped(rng) ? static_cast<Sign>(-r.at(i, j)) : r.at(i, j);
      u.set(i, j, entry_from_sign(s));
    }
  }
  return u;
}

UniformHypergraph gen_hypergraph(const ClusterAssignment& clusters, int d, double alpha,
                                 double beta, std::uint64_t seed) {
  require(d >= 2, "uniformity must be at least 2");
  require(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0,
          "layer " + std::to_string(d) + ": probabilities must lie in [0, 1]");
  require(alpha >= beta, "layer " + std::to_string(d) + ": alpha must be at least beta");
  const int n = clusters.n();
  Rng rng(seed);

  const auto members = clusters.clusters();
  std::vector<std::int64_t> per_cluster;
  std::int64_t in_total = 0;
  for (const auto& c : members) {
    per_cluster.push_back(choose(static_cast<std::int64_t>(c.size()), d));
    in_total += per_cluster.back();
  }
  const std::int64_t cross_total = choose(n, d) - in_total;
  const std::int64_t in_count = draw_binomial(in_total, alpha, rng);
  const std::int64_t cross_count = draw_binomial(cross_total, beta, rng);

  std::vector<std::vector<int>> edges;
  const auto labels = clusters.labels();

  std::vector<double> weights(per_cluster.begin(), per_cluster.end());
  if (in_total == 0) weights.assign(weights.size(), 1.0);
  std::discrete_distribution<int> pick_cluster(weights.begin(), weights.end());
  fill_stratum(
      in_count, in_total, rng,
      [&](std::vector<int>& out) {
        const auto& c = members[pick_cluster(rng)];
        out.clear();
        for (int t : sample_indices(static_cast<int>(c.size()), d, rng)) out.push_back(c[t]);
        return true;
      },
      [&](std::vector<std::vector<int>>& all) {
        for (const auto& c : members) {
          for_each_subset(c, d, [&](const std::vector<int>& s) { all.push_back(s); });
        }
      },
      edges);

  std::vector<int> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);
  fill_stratum(
      cross_count, cross_total, rng,
      [&](std::vector<int>& out) {
        out = sample_indices(n, d, rng);
        return !single_cluster(out, labels);
      },
      [&](std::vector<std::vector<int>>& all) {
        for_each_subset(everyone, d, [&](const std::vector<int>& s) {
          if (!single_cluster(s, labels)) all.push_back(s);
        });
      },
      edges);

  return UniformHypergraph(n, d, std::move(edges));
}

Instance gen_instance(const ModelParams& params, const GenSeed& seed) {
  params.validate();
  Instance inst;
  inst.clusters = gen_clusters(params.n, params.K, seed.derive(Stream::kClusters));
  inst.ratings = RatingMatrix(
      gen_rating_vectors(params.m, params.K, params.gamma, seed.derive(Stream::kVectors)),
      inst.clusters, params.gamma);
  inst.observed = gen_observed(inst.ratings, params.theta, params.p,
                               seed.derive(Stream::kObserved));
  inst.bundle = HypergraphBundle(params.n, params.W);
  for (const auto& [d, a] : params.alpha) {
    inst.bundle.set_layer(gen_hypergraph(inst.clusters, d, a, params.beta.at(d), seed.layer(d)));
  }
  return inst;
}

}  // namespace hypermc::synth

namespace hypermc::synth {

double scale_normalized(int n, int d, double x) {
  require(n >= 2 && d >= 2 && d <= n, "need 2 <= d <= n");
  return x * std::log(static_cast<double>(n)) / choose_real(n - 1, d - 1);
}

LayerProbabilities layer_from_info(double info, double beta_ratio) {
  require(info >= 0.0, "layer quality must be non-negative");
  require(beta_ratio >= 0.0 && beta_ratio < 1.0, "beta ratio must lie in [0, 1)");
  const double gap = 1.0 - std::sqrt(beta_ratio);
  LayerProbabilities out;
  out.alpha = info / (gap * gap);
  out.beta = beta_ratio * out.alpha;
  require(out.alpha <= 1.0, "layer quality " + std::to_string(info) + " needs alpha > 1");
  return out;
}

LayerProbabilities layer_from_quality(int n, int d, double quality_hat, double beta_ratio) {
  require(quality_hat >= 0.0, "layer quality must be non-negative");
  return layer_from_info(scale_normalized(n, d, quality_hat), beta_ratio);
}

}  // namespace hypermc::synth
