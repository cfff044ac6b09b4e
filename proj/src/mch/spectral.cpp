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

#include "hypermc/mch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "hypermc/error.hpp"
#include "hypermc/random.hpp"

namespace hypermc::mch {

namespace {

// Indices of eigenvalues sorted by decreasing magnitude. Magnitudes equal up
// to rounding (a +lambda/-lambda pair, common on tiny graphs) put the positive
// eigenvalue first, since it carries the assortative block structure.
std::vector<int> order_by_magnitude(const Eigen::VectorXd& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return std::abs(values(x)) > std::abs(values(y));
  });
  const double scale = values.size() ? std::max(1.0, values.cwiseAbs().maxCoeff()) : 1.0;
  std::size_t start = 0;
  while (start < idx.size()) {
    std::size_t end = start + 1;
    while (end < idx.size() &&
           std::abs(values(idx[start])) - std::abs(values(idx[end])) <= 1e-9 * scale) {
      ++end;
    }
    std::stable_sort(idx.begin() + start, idx.begin() + end,
                     [&](int x, int y) { return values(x) > values(y); });
    start = end;
  }
  return idx;
}

double squared_distance(const Eigen::MatrixXd& points, int row, const Eigen::MatrixXd& centers,
                        int c) {
  return (points.row(row) - centers.row(c)).squaredNorm();
}

struct LloydRun {
  std::vector<int> labels;
  double inertia = std::numeric_limits<double>::infinity();
  bool all_nonempty = false;
};

LloydRun lloyd(const Eigen::MatrixXd& points, int K, int max_iterations, Rng& rng) {
  const int n = static_cast<int>(points.rows());
  const int dim = static_cast<int>(points.cols());
  Eigen::MatrixXd centers(K, dim);
  std::vector<char> used(n, 0);

  // ++ seeding: first center uniform, the rest proportional to D^2. When all
  // remaining D^2 vanish (duplicate points) fall back to an unused point.
  int first = std::uniform_int_distribution<int>(0, n - 1)(rng);
  centers.row(0) = points.row(first);
  used[first] = 1;
  std::vector<double> d2(n);
  for (int i = 0; i < n; ++i) d2[i] = squared_distance(points, i, centers, 0);
  for (int c = 1; c < K; ++c) {
    const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
    int pick = -1;
    if (total > 0.0) {
      pick = std::discrete_distribution<int>(d2.begin(), d2.end())(rng);
    } else {
      std::vector<int> free;
      for (int i = 0; i < n; ++i) {
        if (!used[i]) free.push_back(i);
      }
      if (free.empty()) free.push_back(0);
      pick = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    }
    used[pick] = 1;
    centers.row(c) = points.row(pick);
    for (int i = 0; i < n; ++i) d2[i] = std::min(d2[i], squared_distance(points, i, centers, c));
  }

  LloydRun run;
  run.labels.assign(n, -1);
  std::vector<double> dist(n, 0.0);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = squared_distance(points, i, centers, 0);
      for (int c = 1; c < K; ++c) {
        const double dc = squared_distance(points, i, centers, c);
        if (dc < best_d) {
          best_d = dc;
          best = c;
        }
      }
      if (run.labels[i] != best) changed = true;
      run.labels[i] = best;
      dist[i] = best_d;
    }

    // Repair empty clusters with the point farthest from its center, taken
    // from a cluster that can spare it.
    std::vector<int> count(K, 0);
    for (int l : run.labels) ++count[l];
    for (int c = 0; c < K; ++c) {
      if (count[c] != 0) continue;
      int donor = -1;
      for (int i = 0; i < n; ++i) {
        if (count[run.labels[i]] > 1 && (donor < 0 || dist[i] > dist[donor])) donor = i;
      }
      if (donor < 0) break;
      --count[run.labels[donor]];
      run.labels[donor] = c;
      dist[donor] = 0.0;
      ++count[c];
      changed = true;
    }

    centers.setZero();
    for (int i = 0; i < n; ++i) centers.row(run.labels[i]) += points.row(i);
    for (int c = 0; c < K; ++c) {
      if (count[c] > 0) centers.row(c) /= count[c];
    }
    if (!changed) break;
  }

  run.inertia = 0.0;
  std::vector<int> count(K, 0);
  for (int i = 0; i < n; ++i) {
    run.inertia += squared_distance(points, i, centers, run.labels[i]);
    ++count[run.labels[i]];
  }
  run.all_nonempty = std::all_of(count.begin(), count.end(), [](int c) { return c > 0; });
  return run;
}

}  // namespace

EigenPairs top_eigenpairs(const Eigen::MatrixXd& a, int K, EigenOrder order) {
  require(K >= 1 && K <= a.rows(), "need 1 <= K <= n eigenpairs");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw RuntimeFailure("dense eigensolve failed");
  const auto& values = solver.eigenvalues();  // ascending
  std::vector<int> idx;
  if (order == EigenOrder::kMagnitude) {
    idx = order_by_magnitude(values);
  } else {
    for (int c = static_cast<int>(values.size()) - 1; c >= 0; --c) idx.push_back(c);
  }
  EigenPairs out{Eigen::VectorXd(K), Eigen::MatrixXd(a.rows(), K)};
  for (int c = 0; c < K; ++c) {
    out.values(c) = values(idx[c]);
    out.vectors.col(c) = solver.eigenvectors().col(idx[c]);
  }
  return out;
}

EigenPairs top_eigenpairs(const Eigen::SparseMatrix<double>& a_in, int K, EigenOrder order,
                          double tolerance, int max_iterations, std::uint64_t seed) {
  const int n = static_cast<int>(a_in.rows());
  require(K >= 1 && K <= n, "need 1 <= K <= n eigenpairs");
  Eigen::SparseMatrix<double> a = a_in;
  double shift = 0.0;
  if (order == EigenOrder::kAlgebraic) {
    for (int col = 0; col < a.outerSize(); ++col) {
      double row_sum = 0.0;
      for (Eigen::SparseMatrix<double>::InnerIterator it(a, col); it; ++it) {
        row_sum += std::abs(it.value());
      }
      shift = std::max(shift, row_sum);
    }
    Eigen::SparseMatrix<double> eye(n, n);
    eye.setIdentity();
    a += shift * eye;
  }
  const int block = std::min(n, 2 * K + 4);
  Rng rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd q(n, block);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < block; ++c) q(i, c) = gauss(rng);
  }
  q = Eigen::HouseholderQR<Eigen::MatrixXd>(q).householderQ() * Eigen::MatrixXd::Identity(n, block);

  // Subspace iteration with Rayleigh-Ritz; converges to the eigenvalues of
  // largest magnitude.
  for (int iter = 0; iter < max_iterations; ++iter) {
    Eigen::MatrixXd y = a * q;
    Eigen::MatrixXd h = q.transpose() * y;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small((h + h.transpose()) / 2.0);
    const auto idx = order_by_magnitude(small.eigenvalues());
    Eigen::MatrixXd ritz(n, block);
    Eigen::VectorXd values(block);
    for (int c = 0; c < block; ++c) {
      ritz.col(c) = q * small.eigenvectors().col(idx[c]);
      values(c) = small.eigenvalues()(idx[c]);
    }
    const double scale = std::max(1.0, std::abs(values(0)));
    double worst = 0.0;
    for (int c = 0; c < K; ++c) {
      worst = std::max(worst, (a * ritz.col(c) - values(c) * ritz.col(c)).norm());
    }
    if (worst <= tolerance * scale) {
      EigenPairs out{values.head(K).array() - shift, ritz.leftCols(K)};
      return out;
    }
    Eigen::MatrixXd next = a * ritz;
    q = Eigen::HouseholderQR<Eigen::MatrixXd>(next).householderQ() *
        Eigen::MatrixXd::Identity(n, block);
  }
  throw RuntimeFailure("subspace iteration did not reach residual tolerance");
}

KMeansResult kmeans(const Eigen::MatrixXd& points, int K, int restarts, int max_iterations,
                    std::uint64_t seed) {
  require(K >= 1, "k-means needs K >= 1");
  require(points.rows() >= K, "k-means needs at least K points");
  require(restarts >= 1, "k-means needs at least one restart");
  Rng rng(seed);
  LloydRun best;
  bool found = false;
  for (int r = 0; r < restarts; ++r) {
    LloydRun run = lloyd(points, K, max_iterations, rng);
    if (!run.all_nonempty) continue;
    if (!found || run.inertia < best.inertia) {
      best = std::move(run);
      found = true;
    }
  }
  if (!found) {
    throw RuntimeFailure("k-means left a cluster empty in all " + std::to_string(restarts) +
                         " restarts");
  }
  return {std::move(best.labels), best.inertia};
}

ClusterAssignment spectral_partition(const WeightedAdjacency& a, int K,
                                     const SpectralOptions& options) {
  const int n = a.n();
  require(K >= 2, "spectral partition needs K >= 2");
  require(n >= K, "spectral partition needs n >= K");

  Eigen::SparseMatrix<double> mat = a.matrix();
  if (options.trim_high_degree) {
    const Eigen::VectorXd deg = a.degrees();
    const double cutoff = options.trim_factor * deg.mean();
    for (int col = 0; col < mat.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(mat, col); it; ++it) {
        if (deg(it.row()) > cutoff || deg(it.col()) > cutoff) it.valueRef() = 0.0;
      }
    }
  }

  Eigen::VectorXd inv_sqrt_degree;
  if (options.embedding == Embedding::kNormalized) {
    inv_sqrt_degree = Eigen::VectorXd::Zero(n);
    for (int col = 0; col < mat.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(mat, col); it; ++it) {
        inv_sqrt_degree(it.row()) += it.value();
      }
    }
    for (int i = 0; i < n; ++i) {
      const double deg = inv_sqrt_degree(i);
      inv_sqrt_degree(i) = deg > 0.0 ? 1.0 / std::sqrt(deg) : 0.0;
    }
    mat = inv_sqrt_degree.asDiagonal() * mat * inv_sqrt_degree.asDiagonal();
  }

  const EigenPairs pairs =
      n <= options.dense_limit
          ? top_eigenpairs(Eigen::MatrixXd(mat), K, options.order)
          : top_eigenpairs(mat, K, options.order, options.eigen_tolerance,
                           options.eigen_max_iterations, splitmix64(options.seed ^ 0x5bd1e995ULL));
  Eigen::MatrixXd embedding = pairs.vectors;
  if (options.embedding == Embedding::kNormalized) {
    for (int i = 0; i < n; ++i) {
      const double norm = embedding.row(i).norm();
      if (norm > 0.0) embedding.row(i) /= norm;
    }
  } else if (options.scale_by_eigenvalue) {
    embedding = embedding * pairs.values.asDiagonal();
  }
  auto result = kmeans(embedding, K, options.kmeans_restarts, options.kmeans_max_iterations,
                       options.seed);
  return ClusterAssignment(K, std::move(result.labels));
}

}  // namespace hypermc::mch
