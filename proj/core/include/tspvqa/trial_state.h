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

#ifndef TSPVQA_TRIAL_STATE_H_
#define TSPVQA_TRIAL_STATE_H_

#include <cstdint>

#include "tspvqa/linalg.h"
#include "tspvqa/params.h"

namespace tspvqa {

// Largest per-register qubit count; 2^(2*13) amplitudes is about 1 GiB of
// complex doubles, a sensible desk-scale ceiling.
inline constexpr int kMaxQubitsPerRegister = 13;

// Joint state of the departure and arrival registers, each holding n qubits.
// Amplitudes are indexed by (departure index i, arrival index j) at position
// i * 2^n + j. City c corresponds to basis index c - 1.
struct Statevector {
  int n_qubits_per_register = 0;
  ComplexVector amplitudes;

  // Dimension 2^n of one register.
  int register_dim() const { return 1 << n_qubits_per_register; }
};

// The maximally entangled register pair: amplitude 2^(-n/2) on every (k, k),
// zero elsewhere. Its reduced state on either register is maximally mixed.
// Throws std::invalid_argument unless 1 <= n <= kMaxQubitsPerRegister.
Statevector prepare_bell_registers(int n);

// The two per-register transformations. When N < 2^n the modes above N are
// spectators: both matrices act as the identity on them.
struct RegisterUnitaries {
  ComplexMatrix u_d;  // departure register
  ComplexMatrix u_a;  // arrival register
  int n_cities = 0;
};

// Applies u_d to the departure register and u_a to the arrival register.
// Norm is preserved. Throws std::invalid_argument on dimension mismatch.
Statevector apply_register_unitaries(const Statevector &state,
                                     const RegisterUnitaries &regs);

// Builds the two register meshes from the variational angles.
//
// N = 4 uses the reduced six-angle form: the rectangular four-mode mesh with
// three of its six angles pinned so that city 1 is always the first
// departure (departure mesh, pins pi/2) and the first arrival comes from
// city 4's slot (arrival mesh, pins 0). Other N use a full
// N(N-1)/2-angle rectangular mesh per register over the first N modes,
// direct-summed with the identity on spectator modes.
RegisterUnitaries register_unitaries_from_params(
    const VariationalParams &params);

// prepare -> transform in one call: the trial state whose joint outcome
// probabilities carry the route information.
Statevector build_trial_state(int n_cities, const VariationalParams &params);

}  // namespace tspvqa

#endif  // TSPVQA_TRIAL_STATE_H_
