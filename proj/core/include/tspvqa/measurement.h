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

#ifndef TSPVQA_MEASUREMENT_H_
#define TSPVQA_MEASUREMENT_H_

#include <cstdint>
#include <utility>

#include "tspvqa/linalg.h"
#include "tspvqa/route.h"
#include "tspvqa/trial_state.h"

namespace tspvqa {

enum class MeasurementMode { kExact, kSampled };

// The quantum route adjacency matrix X: joint computational-basis outcome
// probabilities of the two registers, scaled by 2^n so that a route state
// yields exactly the route's 0/1 permutation matrix.
//
// In exact mode every row and column sums to 1 within 1e-10 (the trial states
// are built from unitaries, which makes X doubly stochastic). In sampled mode
// the entries sum to `dim` exactly by construction (they are scaled count
// fractions), but individual row/column sums fluctuate with shot noise.
struct CorrelationMatrix {
  int dim = 0;
  RealMatrix entries;
  MeasurementMode mode = MeasurementMode::kExact;
  uint64_t shots = 0;  // total coincidence events; 0 in exact mode
};

// Raw coincidence statistics behind a sampled correlation matrix.
struct CoincidenceRecord {
  Eigen::Matrix<uint64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      counts;
  uint64_t total = 0;
  uint64_t seed = 0;
};

// X_ij = 2^n * |amplitude(i, j)|^2.
CorrelationMatrix correlation_exact(const Statevector &state);

// Draws `shots` joint outcomes from one multinomial over all 2^(2n) basis
// pairs (probabilities |amplitude|^2), then scales: X_ij = 2^n * CC_ij / CC.
// Deterministic given the seed. Throws std::invalid_argument when shots = 0.
std::pair<CorrelationMatrix, CoincidenceRecord> correlation_sampled(
    const Statevector &state, uint64_t shots, uint64_t seed);

// Agreement score (1/2^n) * Tr[X * x^T] in [0, 1]; 1 exactly when X is the
// permutation matrix of x_ref. When x_ref covers fewer cities than X has
// modes, the reference matrix is padded with the identity on spectator
// modes, where trial states park unit probability. Throws
// std::invalid_argument when x_ref has more cities than X has modes.
double overlap(const CorrelationMatrix &x_hat, const RoutePermutation &x_ref);

struct StochasticityReport {
  double max_row_deviation = 0.0;
  double max_col_deviation = 0.0;
  bool pass = false;
};

// Reports the worst row-sum and column-sum deviation from 1 and whether both
// stay within tol.
StochasticityReport assert_doubly_stochastic(const CorrelationMatrix &x,
                                             double tol);

}  // namespace tspvqa

#endif  // TSPVQA_MEASUREMENT_H_
