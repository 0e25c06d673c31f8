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

#ifndef TSPVQA_COST_H_
#define TSPVQA_COST_H_

#include <cstdint>
#include <vector>

#include "tspvqa/linalg.h"
#include "tspvqa/measurement.h"
#include "tspvqa/route.h"

namespace tspvqa {

// Full-mode subset enumeration walks all 2^N - 2 proper nonempty city
// subsets; 20 cities (~10^6 subsets) is the supported ceiling.
inline constexpr int kMaxSubtourCities = 20;

// A TSP instance. Distances are nonnegative; the diagonal is not data but a
// penalty discouraging self-loops, so construction overwrites it with
// diag_penalty.
struct DistanceMatrix {
  int n_cities = 0;
  RealMatrix entries;
  double diag_penalty = 100.0;
};

// Validates entries (finite, >= 0, N x N with N >= 3) and stamps the
// diagonal with diag_penalty. Instances with fewer than 3 cities are
// rejected: no fixed-point-free tour exists for one city, and a two-city
// round trip would traverse the same edge pair both ways.
DistanceMatrix make_distance_matrix(int n_cities, RealMatrix entries,
                                    double diag_penalty = 100.0);

enum class SubtourMode { kFull, kLazy, kOff };

// City subsets are bitmasks: bit c set means city c+1 belongs to the subset.
using CitySubset = uint32_t;

// Sorted 1-based city labels of a subset bitmask.
std::vector<int> subset_cities(CitySubset subset);

struct CostConfig {
  double a_sub = 50.0;  // weight of the subtour-elimination reward
  SubtourMode subtour_mode = SubtourMode::kFull;
  std::vector<CitySubset> active_subsets;  // consulted in lazy mode only
};

// The instance padded to the register dimension 2^n: spectator rows and
// columns carry zero distance, so probability parked there never costs
// anything, and subset enumeration stays restricted to real cities.
struct PaddedProblem {
  int dim = 0;
  int n_cities = 0;
  RealMatrix padded;
};

PaddedProblem pad_problem(const DistanceMatrix &d);

// Sum_ij D_ij X_ij over the padded matrices.
double route_length_term(const PaddedProblem &padded,
                         const CorrelationMatrix &x);

// Probability mass crossing out of city subsets: for each subset S in play,
// sum of X_ij with i in S and j a city outside S. Full mode puts every
// proper nonempty subset of {1..N} in play; lazy mode only the configured
// active ones. The value is returned unscaled; total_cost subtracts it times
// a_sub. Throws std::invalid_argument when a subset names cities above N,
// when the mode is kOff, or when N exceeds kMaxSubtourCities in full mode.
double subtour_term(const CorrelationMatrix &x, const CostConfig &config,
                    int n_cities);

// route_length_term - a_sub * subtour_term (the subtour part is dropped in
// kOff mode). Linear in X for a fixed configuration, which is what makes
// permutation matrices the extreme points of its landscape.
double total_cost(const PaddedProblem &padded, const CorrelationMatrix &x,
                  const CostConfig &config);

// Vertex sets of every cycle shorter than N, as subset bitmasks; empty iff
// the permutation is one full tour. These are exactly the constraint
// violations worth activating after a converged run rounds to `x`.
std::vector<CitySubset> detect_violated_subsets(const RoutePermutation &x);

}  // namespace tspvqa

#endif  // TSPVQA_COST_H_
