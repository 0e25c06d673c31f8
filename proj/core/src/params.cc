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

#include "tspvqa/params.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tspvqa {

int param_count_for(int n_cities) {
  if (n_cities < 3) {
    throw std::invalid_argument(
        "Instances need at least 3 cities; no fixed-point-free tour exists "
        "below that.");
  }
  if (n_cities == 4) {
    return 6;
  }
  return n_cities * (n_cities - 1);
}

void validate_params(const VariationalParams &params) {
  const int expected = param_count_for(params.n_cities);
  if (static_cast<int>(params.angles.size()) != expected) {
    throw std::invalid_argument(
        "Expected " + std::to_string(expected) + " angles for " +
        std::to_string(params.n_cities) + " cities, got " +
        std::to_string(params.angles.size()) + ".");
  }
  for (double a : params.angles) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("Variational angles must be finite.");
    }
  }
}

}  // namespace tspvqa
