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

#ifndef TSPVQA_ROUTE_H_
#define TSPVQA_ROUTE_H_

#include <vector>

#include "tspvqa/linalg.h"

namespace tspvqa {

// A tour candidate: a permutation sigma over cities, where sigma(k) is the
// city the route visits right after city k. Cities are 0-based internally;
// all input and output surfaces use 1-based labels.
//
// The matrix form x has x[k][sigma(k)] = 1 and zeros elsewhere, so it always
// satisfies the one-departure-per-city and one-arrival-per-city constraints.
// A candidate is a valid tour only when sigma is a single N-cycle, which in
// particular rules out fixed points (a city departing to itself).
class RoutePermutation {
 public:
  RoutePermutation() = default;

  // Takes sigma with 0-based city indices; throws std::invalid_argument
  // unless it is a permutation of {0..N-1}.
  explicit RoutePermutation(std::vector<int> sigma);

  int size() const { return static_cast<int>(sigma_.size()); }
  int next(int city) const { return sigma_[city]; }
  const std::vector<int> &sigma() const { return sigma_; }

  // N x N 0/1 matrix with ones at (k, sigma(k)).
  RealMatrix matrix() const;

  // True iff sigma is one N-cycle covering every city.
  bool valid_tour() const;

  // Vertex sets of the disjoint cycles, each sorted ascending; cycles are
  // ordered by their smallest vertex. 0-based.
  std::vector<std::vector<int>> cycles() const;

  // Canonical 1-based city sequence starting at city 1. Throws
  // std::invalid_argument when the permutation is not a single cycle.
  std::vector<int> to_sequence() const;

  bool operator==(const RoutePermutation &other) const {
    return sigma_ == other.sigma_;
  }

 private:
  std::vector<int> sigma_;
};

// Builds the permutation of the tour visiting `sequence` in order and
// returning to its first city. The sequence uses 1-based labels and must
// visit every city of {1..N} exactly once (starting city is free; the stored
// form is the same regardless of rotation).
RoutePermutation route_to_matrix(const std::vector<int> &sequence);

// Recovers the canonical sequence (1-based, starting at city 1) from a 0/1
// permutation matrix. Throws std::invalid_argument when the matrix is not a
// permutation matrix or encodes more than one cycle.
std::vector<int> matrix_to_route(const RealMatrix &x);

}  // namespace tspvqa

#endif  // TSPVQA_ROUTE_H_
