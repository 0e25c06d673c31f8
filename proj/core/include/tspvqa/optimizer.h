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

#ifndef TSPVQA_OPTIMIZER_H_
#define TSPVQA_OPTIMIZER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tspvqa/cost.h"
#include "tspvqa/measurement.h"
#include "tspvqa/params.h"
#include "tspvqa/route.h"

namespace tspvqa {

// How the correlation matrix behind each cost evaluation is produced.
enum class Protocol {
  kUniversal,   // statevector simulation of the two register meshes
  kProjectors,  // sixteen-coincidence-projector emulation (4 cities only)
};

struct OptimizerConfig {
  // Sized to the penalty scale of the default cost (diagonal 100, subtour
  // 50): larger rates oscillate instead of descending.
  double learning_rate = 0.005;
  double fd_step = 0.05;  // radians, central differences
  // Cap on the iteration index per start, counting both gradient updates and
  // the re-initializations of the lazy subtour loop.
  int max_iters = 500;
  // Plateau threshold on |cost change|; unset picks 1e-4 in exact mode and
  // 1.0 in sampled mode (the shot-noise scale at the default 2000 shots).
  std::optional<double> cost_tol;
  int patience = 10;  // consecutive plateau iterations before stopping
  int n_starts = 5;
  uint64_t shots = 0;  // 0 = exact expectation values
  uint64_t seed = 0;
  Protocol protocol = Protocol::kUniversal;
  SubtourMode subtour_mode = SubtourMode::kLazy;
  double a_sub = 50.0;
  // Cap on constraint-activation rounds of the lazy loop within one start.
  int max_lazy_rounds = 10;
  // Run the independent starts on a thread pool. Results are bit-identical
  // either way; each start derives its own seed streams.
  bool parallel_starts = true;
};

// One evaluated point of the descent. In sampled mode `cost` carries the
// same shot noise the gradient probes saw (one fresh seed per iteration,
// shared across all probes so finite differences subtract correlated noise).
struct IterationRecord {
  int iteration = 0;
  double cost = 0.0;
  double grad_norm = 0.0;
  std::vector<double> angles;
};

// Everything observable about one optimizer start (or the best of several).
struct RunTrace {
  std::vector<IterationRecord> records;
  CorrelationMatrix final_x;
  RoutePermutation rounded;     // nearest permutation to final X (city block)
  double route_length = 0.0;    // length of `rounded` under the instance
  double overlap = 0.0;         // agreement of final X with `rounded`
  bool converged = false;       // plateaued with no pending subtour violation
  // Active subtour subsets during each lazy round, in activation order;
  // a single empty entry when the lazy loop never added a constraint.
  std::vector<std::vector<CitySubset>> active_subsets_history;
  uint64_t start_seed = 0;  // derived seed this start ran under
  int start_index = 0;
};

// Angles i.i.d. uniform on [0, pi), one per parameter of the N-city ansatz.
// Deterministic given the seed.
VariationalParams random_init(int n_cities, uint64_t seed);

// Central differences: g_k = (cost(a + h e_k) - cost(a - h e_k)) / (2h).
// Throws std::invalid_argument when h <= 0 and std::runtime_error when a
// probe returns a non-finite cost.
std::vector<double> finite_diff_gradient(
    const std::function<double(const std::vector<double> &)> &cost_at,
    const std::vector<double> &angles, double h);

// Gradient descent on the trial-state cost with multi-start and, in lazy
// subtour mode, constraint activation: each converged round rounds X to the
// nearest permutation, adds any violated city subsets, and restarts from a
// fresh random point, until no new violation appears (or budgets run out).
//
// Returns the best start: valid rounded tours beat invalid ones, shorter
// rounded routes beat longer, higher overlap breaks length ties, earlier
// start indices break what remains; if no start rounds to a valid tour, the
// lowest final cost wins. Non-convergence is reported through the flag,
// never an error.
RunTrace optimize(const DistanceMatrix &problem, const OptimizerConfig &config);

}  // namespace tspvqa

#endif  // TSPVQA_OPTIMIZER_H_
