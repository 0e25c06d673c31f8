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

#include "tspvqa/route.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tspvqa {

RoutePermutation::RoutePermutation(std::vector<int> sigma)
    : sigma_(std::move(sigma)) {
  const int n = static_cast<int>(sigma_.size());
  std::vector<bool> seen(n, false);
  for (int v : sigma_) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument(
          "RoutePermutation needs a permutation of {0..N-1}.");
    }
    seen[v] = true;
  }
}

RealMatrix RoutePermutation::matrix() const {
  const int n = size();
  RealMatrix x = RealMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    x(k, sigma_[k]) = 1.0;
  }
  return x;
}

bool RoutePermutation::valid_tour() const {
  return size() > 0 && cycles().size() == 1 && sigma_[0] != 0;
}

std::vector<std::vector<int>> RoutePermutation::cycles() const {
  const int n = size();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) {
      continue;
    }
    std::vector<int> cycle;
    int c = start;
    while (!visited[c]) {
      visited[c] = true;
      cycle.push_back(c);
      c = sigma_[c];
    }
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> RoutePermutation::to_sequence() const {
  if (size() == 0 || cycles().size() != 1) {
    throw std::invalid_argument(
        "Route is not a single cycle; no city sequence exists.");
  }
  std::vector<int> seq;
  seq.reserve(size());
  int c = 0;
  do {
    seq.push_back(c + 1);
    c = sigma_[c];
  } while (c != 0);
  return seq;
}

RoutePermutation route_to_matrix(const std::vector<int> &sequence) {
  const int n = static_cast<int>(sequence.size());
  if (n == 0) {
    throw std::invalid_argument("City sequence is empty.");
  }
  std::vector<bool> seen(n, false);
  for (int label : sequence) {
    if (label < 1 || label > n || seen[label - 1]) {
      throw std::invalid_argument(
          "City sequence must visit each of {1.." + std::to_string(n) +
          "} exactly once; got a repeated, missing, or out-of-range city.");
    }
    seen[label - 1] = true;
  }
  std::vector<int> sigma(n);
  for (int k = 0; k < n; ++k) {
    sigma[sequence[k] - 1] = sequence[(k + 1) % n] - 1;
  }
  return RoutePermutation(std::move(sigma));
}

std::vector<int> matrix_to_route(const RealMatrix &x) {
  const int n = static_cast<int>(x.rows());
  if (x.cols() != n || n == 0) {
    throw std::invalid_argument("Route matrix must be square and nonempty.");
  }
  std::vector<int> sigma(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = x(i, j);
      if (v == 0.0) {
        continue;
      }
      if (v != 1.0 || sigma[i] != -1) {
        throw std::invalid_argument(
            "Route matrix must have exactly one 1 per row, zeros elsewhere.");
      }
      sigma[i] = j;
    }
    if (sigma[i] == -1) {
      throw std::invalid_argument("Route matrix has an all-zero row.");
    }
  }
  return RoutePermutation(std::move(sigma)).to_sequence();
}

}  // namespace tspvqa
