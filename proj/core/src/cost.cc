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

#include "tspvqa/cost.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tspvqa {

namespace {

int register_dim_for(int n_cities) {
  int dim = 1;
  while (dim < n_cities) {
    dim <<= 1;
  }
  return dim;
}

// Mass leaving subset S: sum of X_ij over i in S, j in {cities} \ S.
// Summation order is fixed (row-major over ascending indices) so results are
// bitwise reproducible.
double crossing_mass(const RealMatrix &x, CitySubset subset, int n_cities) {
  double sum = 0.0;
  for (int i = 0; i < n_cities; ++i) {
    if (!(subset >> i & 1u)) {
      continue;
    }
    for (int j = 0; j < n_cities; ++j) {
      if (subset >> j & 1u) {
        continue;
      }
      sum += x(i, j);
    }
  }
  return sum;
}

}  // namespace

DistanceMatrix make_distance_matrix(int n_cities, RealMatrix entries,
                                    double diag_penalty) {
  if (n_cities < 3) {
    throw std::invalid_argument(
        "Instances need at least 3 cities; no fixed-point-free tour exists "
        "below that.");
  }
  if (entries.rows() != n_cities || entries.cols() != n_cities) {
    throw std::invalid_argument("Distance matrix must be " +
                                std::to_string(n_cities) + "x" +
                                std::to_string(n_cities) + ".");
  }
  if (!std::isfinite(diag_penalty)) {
    throw std::invalid_argument("Diagonal penalty must be finite.");
  }
  for (int i = 0; i < n_cities; ++i) {
    for (int j = 0; j < n_cities; ++j) {
      const double v = entries(i, j);
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(
            "Distances must be finite and nonnegative; entry (" +
            std::to_string(i + 1) + ", " + std::to_string(j + 1) +
            ") is not.");
      }
    }
  }
  DistanceMatrix d;
  d.n_cities = n_cities;
  d.entries = std::move(entries);
  d.diag_penalty = diag_penalty;
  d.entries.diagonal().setConstant(diag_penalty);
  return d;
}

std::vector<int> subset_cities(CitySubset subset) {
  std::vector<int> cities;
  for (int c = 0; c < 32; ++c) {
    if (subset >> c & 1u) {
      cities.push_back(c + 1);
    }
  }
  return cities;
}

PaddedProblem pad_problem(const DistanceMatrix &d) {
  PaddedProblem padded;
  padded.n_cities = d.n_cities;
  padded.dim = register_dim_for(d.n_cities);
  padded.padded = RealMatrix::Zero(padded.dim, padded.dim);
  padded.padded.topLeftCorner(d.n_cities, d.n_cities) = d.entries;
  return padded;
}

double route_length_term(const PaddedProblem &padded,
                         const CorrelationMatrix &x) {
  if (x.dim != padded.dim) {
    throw std::invalid_argument(
        "Correlation matrix dimension " + std::to_string(x.dim) +
        " does not match the padded instance dimension " +
        std::to_string(padded.dim) + ".");
  }
  return padded.padded.cwiseProduct(x.entries).sum();
}

double subtour_term(const CorrelationMatrix &x, const CostConfig &config,
                    int n_cities) {
  if (n_cities > x.dim) {
    throw std::invalid_argument("Subtour term over " +
                                std::to_string(n_cities) +
                                " cities exceeds the matrix dimension.");
  }
  if (config.subtour_mode == SubtourMode::kOff) {
    throw std::invalid_argument("Subtour term requested with mode off.");
  }
  const CitySubset all = (n_cities >= 32)
                             ? ~CitySubset{0}
                             : ((CitySubset{1} << n_cities) - 1);
  double sum = 0.0;
  if (config.subtour_mode == SubtourMode::kFull) {
    if (n_cities > kMaxSubtourCities) {
      throw std::invalid_argument(
          "Full subset enumeration is capped at " +
          std::to_string(kMaxSubtourCities) + " cities (got " +
          std::to_string(n_cities) + "); use lazy activation instead.");
    }
    for (CitySubset s = 1; s < all; ++s) {
      sum += crossing_mass(x.entries, s, n_cities);
    }
  } else {
    for (CitySubset s : config.active_subsets) {
      if (s == 0 || (s & ~all) != 0 || s == all) {
        throw std::invalid_argument(
            "Active subsets must be proper nonempty subsets of the " +
            std::to_string(n_cities) + " cities.");
      }
      sum += crossing_mass(x.entries, s, n_cities);
    }
  }
  return sum;
}

double total_cost(const PaddedProblem &padded, const CorrelationMatrix &x,
                  const CostConfig &config) {
  const double length = route_length_term(padded, x);
  if (config.subtour_mode == SubtourMode::kOff) {
    return length;
  }
  return length - config.a_sub * subtour_term(x, config, padded.n_cities);
}

std::vector<CitySubset> detect_violated_subsets(const RoutePermutation &x) {
  std::vector<CitySubset> out;
  const int n = x.size();
  for (const std::vector<int> &cycle : x.cycles()) {
    if (static_cast<int>(cycle.size()) >= n) {
      continue;
    }
    CitySubset mask = 0;
    for (int c : cycle) {
      mask |= CitySubset{1} << c;
    }
    out.push_back(mask);
  }
  return out;
}

}  // namespace tspvqa
