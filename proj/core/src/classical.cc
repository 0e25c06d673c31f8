// Copyright 2026 The tspvqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tspvqa/classical.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tspvqa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_distances(const DistanceMatrix &d, const char *caller) {
  if (d.entries.rows() != d.n_cities || d.entries.cols() != d.n_cities) {
    std::ostringstream msg;
    msg << caller << ": distance matrix shape " << d.entries.rows() << "x"
        << d.entries.cols() << " does not match n_cities=" << d.n_cities
        << ".";
    throw std::invalid_argument(msg.str());
  }
  if (d.n_cities < 3) {
    std::ostringstream msg;
    msg << caller << ": need at least 3 cities, got " << d.n_cities << ".";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double route_length(const DistanceMatrix &d, const RoutePermutation &route) {
  check_distances(d, "route_length");
  if (route.size() != d.n_cities) {
    std::ostringstream msg;
    msg << "route_length: route over " << route.size() << " cities does not "
        << "match distance matrix with " << d.n_cities << " cities.";
    throw std::invalid_argument(msg.str());
  }
  double total = 0.0;
  for (int k = 0; k < route.size(); ++k) {
    total += d.entries(k, route.next(k));
  }
  return total;
}

std::pair<RoutePermutation, double> brute_force_tsp(const DistanceMatrix &d) {
  check_distances(d, "brute_force_tsp");
  const int n = d.n_cities;
  if (n > kMaxBruteForceCities) {
    std::ostringstream msg;
    msg << "brute_force_tsp: " << n << " cities exceeds the exhaustive "
        << "search cap of " << kMaxBruteForceCities << ".";
    throw std::invalid_argument(msg.str());
  }

  // Fix city 0 as the start and enumerate orderings of the rest in
  // lexicographic order, so the first route attaining the optimum is the
  // lexicographically smallest sequence.
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> best_rest;
  double best_len = kInf;
  do {
    double len = d.entries(0, rest.front());
    for (std::size_t k = 0; k + 1 < rest.size(); ++k) {
      len += d.entries(rest[k], rest[k + 1]);
    }
    len += d.entries(rest.back(), 0);
    if (len < best_len) {
      best_len = len;
      best_rest = rest;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::vector<int> sigma(n, 0);
  int prev = 0;
  for (int city : best_rest) {
    sigma[prev] = city;
    prev = city;
  }
  sigma[prev] = 0;
  return {RoutePermutation(sigma), best_len};
}

double held_karp(const DistanceMatrix &d) {
  check_distances(d, "held_karp");
  const int n = d.n_cities;
  if (n > kMaxHeldKarpCities) {
    std::ostringstream msg;
    msg << "held_karp: " << n << " cities exceeds the dynamic-programming "
        << "cap of " << kMaxHeldKarpCities << ".";
    throw std::invalid_argument(msg.str());
  }

  // dp[mask][j]: best path starting at city 0, visiting exactly the cities
  // {j+1 : bit j of mask set}, and ending at city j+1.
  const int m = n - 1;
  const std::size_t full = std::size_t{1} << m;
  std::vector<double> dp(full * static_cast<std::size_t>(m), kInf);
  for (int j = 0; j < m; ++j) {
    dp[(std::size_t{1} << j) * m + j] = d.entries(0, j + 1);
  }
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double cur = dp[mask * m + j];
      if (cur == kInf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        double &slot = dp[next * m + k];
        const double cand = cur + d.entries(j + 1, k + 1);
        if (cand < slot) slot = cand;
      }
    }
  }
  double best = kInf;
  for (int j = 0; j < m; ++j) {
    best = std::min(best, dp[(full - 1) * m + j] + d.entries(j + 1, 0));
  }
  return best;
}

std::pair<std::vector<int>, double> min_cost_assignment(
    const RealMatrix &cost) {
  if (cost.rows() == 0 || cost.rows() != cost.cols()) {
    std::ostringstream msg;
    msg << "min_cost_assignment: need a nonempty square matrix, got "
        << cost.rows() << "x" << cost.cols() << ".";
    throw std::invalid_argument(msg.str());
  }
  if (!cost.allFinite()) {
    throw std::invalid_argument(
        "min_cost_assignment: cost matrix has non-finite entries.");
  }
  const int n = static_cast<int>(cost.rows());

  // Shortest augmenting paths with row/column potentials (1-indexed; column
  // 0 is a virtual source). p[j] is the row currently matched to column j.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0);
  std::vector<int> way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> assignment(n, -1);
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    assignment[p[j] - 1] = j - 1;
    total += cost(p[j] - 1, j - 1);
  }
  return {std::move(assignment), total};
}

RoutePermutation nearest_permutation(const RealMatrix &x) {
  if (x.rows() == 0 || x.rows() != x.cols()) {
    std::ostringstream msg;
    msg << "nearest_permutation: need a nonempty square matrix, got "
        << x.rows() << "x" << x.cols() << ".";
    throw std::invalid_argument(msg.str());
  }
  if (!x.allFinite()) {
    throw std::invalid_argument(
        "nearest_permutation: matrix has non-finite entries.");
  }
  const int n = static_cast<int>(x.rows());
  const double best = -min_cost_assignment(-x).second;
  const double tol = 1e-12 * std::max(1.0, x.cwiseAbs().maxCoeff());

  // Fix sigma(0), sigma(1), ... to the smallest column that still attains
  // the optimal score on the remaining rows, which yields the
  // lexicographically smallest optimal permutation.
  std::vector<int> sigma(n, -1);
  std::vector<char> used(n, 0);
  double fixed = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      double value = fixed + x(i, j);
      const int m = n - i - 1;
      if (m > 0) {
        std::vector<int> free_cols;
        free_cols.reserve(m);
        for (int c = 0; c < n; ++c) {
          if (!used[c] && c != j) free_cols.push_back(c);
        }
        RealMatrix sub(m, m);
        for (int r = 0; r < m; ++r) {
          for (int c = 0; c < m; ++c) {
            sub(r, c) = -x(i + 1 + r, free_cols[c]);
          }
        }
        value -= min_cost_assignment(sub).second;
      }
      if (value >= best - tol) {
        sigma[i] = j;
        used[j] = 1;
        fixed += x(i, j);
        break;
      }
    }
    if (sigma[i] < 0) {
      throw std::runtime_error(
          "nearest_permutation: no column attains the optimal score; "
          "this indicates an internal consistency bug.");
    }
  }
  return RoutePermutation(std::move(sigma));
}

RoutePermutation nearest_permutation(const CorrelationMatrix &x) {
  return nearest_permutation(x.entries);
}

BirkhoffDecomposition birkhoff_decompose(const RealMatrix &x) {
  if (x.rows() == 0 || x.rows() != x.cols()) {
    std::ostringstream msg;
    msg << "birkhoff_decompose: need a nonempty square matrix, got "
        << x.rows() << "x" << x.cols() << ".";
    throw std::invalid_argument(msg.str());
  }
  if (!x.allFinite()) {
    throw std::invalid_argument(
        "birkhoff_decompose: matrix has non-finite entries.");
  }
  const int n = static_cast<int>(x.rows());

  constexpr double kStochasticTol = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(x.row(i).sum() - 1.0));
    worst = std::max(worst, std::abs(x.col(i).sum() - 1.0));
  }
  worst = std::max(worst, -x.minCoeff());
  if (worst > kStochasticTol) {
    std::ostringstream msg;
    msg << "birkhoff_decompose: matrix is not doubly stochastic within "
        << kStochasticTol << " (worst deviation " << worst << ").";
    throw std::invalid_argument(msg.str());
  }

  constexpr double kSupportEps = 1e-12;
  constexpr double kStopTol = 1e-12;
  const int max_terms = (n - 1) * (n - 1) + 1;

  BirkhoffDecomposition out;
  RealMatrix residue = x.cwiseMax(0.0);
  for (int term = 0; term < max_terms; ++term) {
    if (residue.cwiseAbs().maxCoeff() <= kStopTol) break;
    // Find a permutation lying entirely inside the support of the residue.
    // Maximizing the number of strictly positive entries hit (rather than
    // the entry values) keeps the peeling robust near convergence, where
    // the surviving entries span many orders of magnitude.
    RealMatrix indicator(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        indicator(i, j) = residue(i, j) > kSupportEps ? -1.0 : 0.0;
      }
    }
    auto [sigma, score] = min_cost_assignment(indicator);
    if (score > -n + 0.5) break;  // No fully-supported permutation remains.
    double weight = kInf;
    for (int i = 0; i < n; ++i) {
      weight = std::min(weight, residue(i, sigma[i]));
    }
    for (int i = 0; i < n; ++i) {
      residue(i, sigma[i]) -= weight;
    }
    out.terms.push_back({weight, RoutePermutation(std::move(sigma))});
  }

  RealMatrix recon = RealMatrix::Zero(n, n);
  for (const auto &term : out.terms) {
    recon += term.weight * term.permutation.matrix();
  }
  out.residual = (x - recon).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace tspvqa
