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

#include "tspvqa/trial_state.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace tspvqa {

namespace {

constexpr double kPi = std::numbers::pi;

int qubits_for(int n_cities) {
  int n = 0;
  while ((1 << n) < n_cities) {
    ++n;
  }
  return n;
}

}  // namespace

Statevector prepare_bell_registers(int n) {
  if (n < 1 || n > kMaxQubitsPerRegister) {
    throw std::invalid_argument(
        "Register size must be between 1 and " +
        std::to_string(kMaxQubitsPerRegister) + " qubits, got " +
        std::to_string(n) + ".");
  }
  Statevector state;
  state.n_qubits_per_register = n;
  const int dim = state.register_dim();
  state.amplitudes = ComplexVector::Zero(static_cast<int64_t>(dim) * dim);
  const double amp = std::pow(2.0, -0.5 * n);
  for (int k = 0; k < dim; ++k) {
    state.amplitudes[static_cast<int64_t>(k) * dim + k] = amp;
  }
  return state;
}

Statevector apply_register_unitaries(const Statevector &state,
                                     const RegisterUnitaries &regs) {
  const int dim = state.register_dim();
  if (regs.u_d.rows() != dim || regs.u_d.cols() != dim ||
      regs.u_a.rows() != dim || regs.u_a.cols() != dim) {
    throw std::invalid_argument(
        "Register unitaries must match the register dimension " +
        std::to_string(dim) + ".");
  }
  // With amplitudes laid out row-major as a matrix A over (departure,
  // arrival), acting with u_d on the first register and u_a on the second
  // maps A to u_d * A * u_a^T.
  Eigen::Map<const ComplexMatrix> a(state.amplitudes.data(), dim, dim);
  Statevector out;
  out.n_qubits_per_register = state.n_qubits_per_register;
  out.amplitudes.resize(state.amplitudes.size());
  Eigen::Map<ComplexMatrix> result(out.amplitudes.data(), dim, dim);
  result = regs.u_d * a * regs.u_a.transpose();
  return out;
}

RegisterUnitaries register_unitaries_from_params(
    const VariationalParams &params) {
  validate_params(params);
  const int n_cities = params.n_cities;
  const int dim = 1 << qubits_for(n_cities);
  const std::vector<double> &a = params.angles;

  RegisterUnitaries regs;
  regs.n_cities = n_cities;
  if (n_cities == 4) {
    const double h = kPi / 2;
    regs.u_d = compose_mesh(rectangular_mesh(4, {h, h, a[0], h, a[1], a[2]}));
    regs.u_a = compose_mesh(rectangular_mesh(4, {0, a[3], 0, a[4], 0, a[5]}));
  } else {
    const size_t half = a.size() / 2;
    const std::vector<double> departure(a.begin(), a.begin() + half);
    const std::vector<double> arrival(a.begin() + half, a.end());
    regs.u_d = direct_sum_identity(
        compose_mesh(rectangular_mesh(n_cities, departure)), dim);
    regs.u_a = direct_sum_identity(
        compose_mesh(rectangular_mesh(n_cities, arrival)), dim);
  }
  if (!is_unitary(regs.u_d) || !is_unitary(regs.u_a)) {
    throw std::runtime_error("Composed register mesh failed unitarity check.");
  }
  return regs;
}

Statevector build_trial_state(int n_cities, const VariationalParams &params) {
  if (params.n_cities != n_cities) {
    throw std::invalid_argument("Parameter vector is for " +
                                std::to_string(params.n_cities) +
                                " cities, not " + std::to_string(n_cities) +
                                ".");
  }
  const RegisterUnitaries regs = register_unitaries_from_params(params);
  const Statevector bell = prepare_bell_registers(qubits_for(n_cities));
  return apply_register_unitaries(bell, regs);
}

}  // namespace tspvqa
