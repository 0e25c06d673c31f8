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

#ifndef TSPVQA_PARAMS_H_
#define TSPVQA_PARAMS_H_

#include <vector>

namespace tspvqa {

// The variational angle vector parameterizing the departure and arrival
// meshes. The first half drives the departure transformation, the second
// half the arrival transformation.
struct VariationalParams {
  std::vector<double> angles;
  int n_cities = 0;
};

// Number of angles for an N-city instance: 6 for N = 4, where the redundancy
// conditions fixing city 1 as the first departure cut the count down, and
// N(N-1) otherwise (a full N(N-1)/2-angle rectangular mesh per register; no
// analogous reduction is known for general N, so the redundancy is kept in
// favor of correctness).
int param_count_for(int n_cities);

// Throws std::invalid_argument unless params.angles has exactly
// param_count_for(params.n_cities) finite entries.
void validate_params(const VariationalParams &params);

}  // namespace tspvqa

#endif  // TSPVQA_PARAMS_H_
