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

#ifndef TSPVQA_CLASSICAL_H_
#define TSPVQA_CLASSICAL_H_

#include <utility>
#include <vector>

#include "tspvqa/cost.h"
#include "tspvqa/linalg.h"
#include "tspvqa/measurement.h"
#include "tspvqa/route.h"

namespace tspvqa {

// Exhaustive enumeration is capped at 11 cities (10! sequences); the dynamic
// program at 20 (2^19 subsets).
inline constexpr int kMaxBruteForceCities = 11;
inline constexpr int kMaxHeldKarpCities = 20;

// Sum of D[k][sigma(k)] over cities. For a valid tour this is the closed
// route length; for other permutations it includes whatever diagonal
// penalties and cycle edges the permutation selects.
double route_length(const DistanceMatrix &d, const RoutePermutation &route);

// Globally optimal valid tour by enumerating all (N-1)! sequences starting
// at city 1. Ties resolve to the lexicographically smallest sequence.
// Throws std::invalid_argument above kMaxBruteForceCities.
std::pair<RoutePermutation, double> brute_force_tsp(const DistanceMatrix &d);

// Optimal tour length via dynamic programming over (visited subset, last
// city) states, O(N^2 * 2^N) time. Throws above kMaxHeldKarpCities.
double held_karp(const DistanceMatrix &d);

// Minimum-cost perfect assignment (one column per row) by shortest
// augmenting paths with potentials, O(N^3). Returns the column of each row
// and the total cost.
std::pair<std::vector<int>, double> min_cost_assignment(const RealMatrix &cost);

// The permutation maximizing Tr[X * x^T], i.e. the closest route matrix to X
// under the linear overlap score. Ties resolve to the lexicographically
// smallest sigma (so a uniform X rounds to the identity). The result is
// invariant under positive rescaling of X. Requires a square matrix with
// finite entries.
RoutePermutation nearest_permutation(const RealMatrix &x);
RoutePermutation nearest_permutation(const CorrelationMatrix &x);

// A doubly-stochastic matrix expressed as a convex combination of
// permutation matrices.
struct BirkhoffDecomposition {
  struct Term {
    double weight = 0.0;
    RoutePermutation permutation;
  };
  std::vector<Term> terms;
  // Max-abs error of sum(weight_k * matrix_k) against the input.
  double residual = 0.0;
};

// Greedy peeling: repeatedly finds a permutation supported on the strictly
// positive entries (assignment on a 0/1 indicator weight, for robustness
// against near-zero entries), subtracts the minimum entry along it, and
// stops when the remaining mass is negligible. At most (N-1)^2 + 1 terms.
// The decomposition is not unique; only the reconstruction is promised.
// Throws std::invalid_argument unless the input is doubly stochastic within
// 1e-6, with the worst deviation reported in the message.
BirkhoffDecomposition birkhoff_decompose(const RealMatrix &x);

}  // namespace tspvqa

#endif  // TSPVQA_CLASSICAL_H_
