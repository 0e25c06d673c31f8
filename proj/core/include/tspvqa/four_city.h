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

#ifndef TSPVQA_FOUR_CITY_H_
#define TSPVQA_FOUR_CITY_H_

#include <array>
#include <cstdint>
#include <utility>

#include "tspvqa/linalg.h"
#include "tspvqa/measurement.h"
#include "tspvqa/params.h"
#include "tspvqa/route.h"

namespace tspvqa {

// The four-city problem admits a fully closed-form layer: real orthogonal
// 4x4 register transformations with only three angles each, an explicit
// trigonometric correlation matrix, and an emulation of the whole
// preparation with sixteen two-mode coincidence projectors on triangular
// meshes (the form photonic hardware implements natively). This header is
// both a fast path for N = 4 and an independent cross-check of the generic
// statevector simulator.

// The six mesh angles (a[0..2] departure, a[3..5] arrival), radians.
struct FourCityParams {
  std::array<double, 6> a{};
};

VariationalParams to_variational(const FourCityParams &params);
FourCityParams from_variational(const VariationalParams &params);

// Closed-form departure transformation. Real orthogonal; fixes the first
// basis vector (city 1 always departs first), so row 1 and column 1 are e1.
RealMatrix departure_unitary_4(double a1, double a2, double a3);

// Closed-form arrival transformation. Real orthogonal; its first row is e4
// (the first arrival slot is fed from basis vector 4).
RealMatrix arrival_unitary_4(double a4, double a5, double a6);

// The 4x4 correlation matrix as explicit trigonometric expressions in the
// six angles (entry (1,1) is identically zero). Matches the statevector
// simulator's exact correlation matrix for the same angles.
CorrelationMatrix four_city_correlation(const FourCityParams &params);

// Mesh angles realizing each of the six valid four-city tours exactly
// (correlation matrix = the tour's permutation matrix). The choice is not
// unique; this is one fixed catalog. Throws std::invalid_argument unless
// the route is a valid 4-city tour.
FourCityParams route_phase_settings(const RoutePermutation &route);

// Output port of the triangular mesh whose coincidences are counted
// (0-based mode index; the mesh's second output).
inline constexpr int kProjectorOutputPort = 1;

// Triangular-mesh angle triples projecting onto each row of the two
// register transformations: idler[j] makes row kProjectorOutputPort of the
// triangular mesh equal to row j of departure_unitary_4, and signal[j]
// likewise for arrival_unitary_4. All angles are finite for any input.
struct ProjectorSettings {
  std::array<std::array<double, 3>, 4> idler{};
  std::array<std::array<double, 3>, 4> signal{};
};

// Computes the eight triples. Inverse-trigonometric branch choices follow
// the row being projected (via atan2), so the settings reproduce the rows
// exactly for every input; when a row leaves an angle undetermined (a
// vanishing pair of components), that angle is set to 0.
ProjectorSettings projector_settings(const FourCityParams &params);

// Emulates the sixteen-projector coincidence measurement: for each idler x
// signal setting pair, the probability that both photons of the maximally
// entangled source exit port kProjectorOutputPort of their triangular
// mesh. Assembles X from those sixteen probabilities (exact mode), or from
// multinomially sampled counts across the sixteen outcomes, in which case
// the entries sum to 4 exactly. Sampling throws std::invalid_argument when
// shots is zero.
CorrelationMatrix emulate_projectors(const FourCityParams &params);
std::pair<CorrelationMatrix, CoincidenceRecord> emulate_projectors(
    const FourCityParams &params, uint64_t shots, uint64_t seed);

}  // namespace tspvqa

#endif  // TSPVQA_FOUR_CITY_H_
