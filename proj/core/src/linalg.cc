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

#include "tspvqa/linalg.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tspvqa {

namespace {

void check_pair(const Su2Block &block, int dim) {
  const auto [k, k1] = block.pair;
  if (k1 != k + 1) {
    throw std::invalid_argument("Su2Block pair (" + std::to_string(k) + ", " +
                                std::to_string(k1) +
                                ") must name adjacent modes (k, k+1).");
  }
  if (k < 1 || k1 > dim) {
    throw std::invalid_argument("Su2Block pair (" + std::to_string(k) + ", " +
                                std::to_string(k1) +
                                ") out of range for dimension " +
                                std::to_string(dim) + ".");
  }
}

void check_finite(const Su2Block &block) {
  if (!std::isfinite(block.theta) || !std::isfinite(block.phi1) ||
      !std::isfinite(block.phi2)) {
    throw std::invalid_argument("Su2Block angles must be finite.");
  }
}

}  // namespace

Su2Block real_block(int k, double theta) {
  Su2Block block;
  block.theta = theta;
  block.pair = {k, k + 1};
  return block;
}

ComplexMatrix su2_block_matrix(const Su2Block &block) {
  check_finite(block);
  const double s = std::sin(block.theta);
  const double c = std::cos(block.theta);
  const Complex e1 = std::polar(1.0, block.phi1);
  const Complex e2 = std::polar(1.0, block.phi2);
  ComplexMatrix u(2, 2);
  u(0, 0) = e1 * s;
  u(0, 1) = e2 * c;
  u(1, 0) = std::conj(e2) * c;
  u(1, 1) = -std::conj(e1) * s;
  return u;
}

ComplexMatrix embed_block(const Su2Block &block, int dim) {
  if (dim < 2) {
    throw std::invalid_argument("Mesh dimension must be at least 2.");
  }
  check_pair(block, dim);
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix cell = su2_block_matrix(block);
  const int k = block.pair.first - 1;
  u(k, k) = cell(0, 0);
  u(k, k + 1) = cell(0, 1);
  u(k + 1, k) = cell(1, 0);
  u(k + 1, k + 1) = cell(1, 1);
  return u;
}

ComplexMatrix compose_mesh(const MeshSpec &spec) {
  if (spec.dim < 1) {
    throw std::invalid_argument("Mesh dimension must be positive.");
  }
  ComplexMatrix u = ComplexMatrix::Identity(spec.dim, spec.dim);
  for (const Su2Block &block : spec.blocks) {
    u = embed_block(block, spec.dim) * u;
  }
  return u;
}

MeshSpec rectangular_mesh(int dim, const std::vector<double> &thetas) {
  if (dim < 2) {
    throw std::invalid_argument("Rectangular mesh needs at least 2 modes.");
  }
  const size_t expected = static_cast<size_t>(dim) * (dim - 1) / 2;
  if (thetas.size() != expected) {
    throw std::invalid_argument("Rectangular mesh over " +
                                std::to_string(dim) + " modes needs " +
                                std::to_string(expected) + " angles, got " +
                                std::to_string(thetas.size()) + ".");
  }
  // Collect cells in written-product order, then reverse into application
  // order (the rightmost factor of the written product acts first).
  std::vector<Su2Block> written;
  written.reserve(expected);
  size_t next_angle = 0;
  for (int layer = 1; layer <= dim; ++layer) {
    const int first_mode = (layer % 2 == 1) ? 1 : 2;
    for (int k = first_mode; k + 1 <= dim; k += 2) {
      written.push_back(real_block(k, thetas[next_angle++]));
    }
  }
  MeshSpec spec;
  spec.dim = dim;
  spec.blocks.assign(written.rbegin(), written.rend());
  return spec;
}

MeshSpec triangular_mesh(const std::array<double, 3> &thetas) {
  MeshSpec spec;
  spec.dim = 4;
  // Application order: u34[t3] first, then u12[t2], then u23[t1].
  spec.blocks = {real_block(3, thetas[2]), real_block(1, thetas[1]),
                 real_block(2, thetas[0])};
  return spec;
}

ComplexMatrix direct_sum_identity(const ComplexMatrix &m, int dim) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("direct_sum_identity needs a square matrix.");
  }
  if (m.rows() > dim) {
    throw std::invalid_argument("direct_sum_identity target dimension " +
                                std::to_string(dim) +
                                " smaller than the matrix.");
  }
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  out.topLeftCorner(m.rows(), m.cols()) = m;
  return out;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  const ComplexMatrix gram = m * m.adjoint();
  const ComplexMatrix eye = ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs_diff(gram, eye) <= tol;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff dimension mismatch.");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const RealMatrix &a, const RealMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff dimension mismatch.");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace tspvqa
