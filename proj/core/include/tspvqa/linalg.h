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

#ifndef TSPVQA_LINALG_H_
#define TSPVQA_LINALG_H_

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tspvqa {

using Complex = std::complex<double>;

// Dense row-major storage throughout; mesh dimensions stay desk-scale, so
// dense is both the simplest and the fastest representation.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Max-norm tolerance for unitarity checks. Double precision leaves ~1e-15 of
// headroom per operation; 1e-12 absorbs accumulation over up to N^2 cells.
inline constexpr double kUnitaryTol = 1e-12;

// One 2x2 interferometer cell acting on a pair of adjacent modes (k, k+1),
// with 1-based mode indices. Its matrix is
//
//     [  e^{i phi1} * sin(theta)    e^{i phi2} * cos(theta) ]
//     [  e^{-i phi2} * cos(theta)  -e^{-i phi1} * sin(theta) ]
//
// which is unitary for any real angles.
struct Su2Block {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  std::pair<int, int> pair{1, 2};
};

// Convenience constructor for the phase-free (real) cell used by all route
// meshes: both phi angles zero, acting on modes (k, k+1).
Su2Block real_block(int k, double theta);

// An ordered list of cells composing a multimode transformation.
//
// Convention (documented once, here, to avoid transposition bugs): `blocks`
// is stored in application order. blocks.front() acts on the input first,
// i.e. it is the rightmost factor of the matrix product
//
//     compose_mesh = embed(blocks.back()) * ... * embed(blocks.front()).
struct MeshSpec {
  int dim = 0;
  std::vector<Su2Block> blocks;
};

// The 2x2 matrix of a single cell. Unitary to 1e-12 for finite angles.
ComplexMatrix su2_block_matrix(const Su2Block &block);

// Embeds a cell into a dim x dim identity, leaving every mode other than
// the cell's pair unaffected. Throws std::invalid_argument when the pair
// does not name two adjacent in-range modes.
ComplexMatrix embed_block(const Su2Block &block, int dim);

// Ordered product of the embedded cells, rightmost-stored block applied
// first (see MeshSpec). An empty block list yields the identity.
ComplexMatrix compose_mesh(const MeshSpec &spec);

// Rectangular mesh over `dim` modes with all phases zero and dim*(dim-1)/2
// angles, laid out in `dim` alternating layers:
//
//     layer 1 (leftmost factor):  cells on (1,2), (3,4), ...
//     layer 2:                    cells on (2,3), (4,5), ...
//     ...alternating down to layer `dim` (applied first).
//
// Angles are consumed in written-product order: left to right across layers,
// and top to bottom inside each layer. For dim = 4 this reproduces the
// six-cell network
//
//     U[t1..t6] = u12[t1] u34[t2] u23[t3] u12[t4] u34[t5] u23[t6].
MeshSpec rectangular_mesh(int dim, const std::vector<double> &thetas);

// The three-cell triangular network on four modes,
//
//     U[t1, t2, t3] = u23[t1] u12[t2] u34[t3],
//
// used by the projector emulation. Phase-free by construction.
MeshSpec triangular_mesh(const std::array<double, 3> &thetas);

// Places `m` in the top-left corner of a dim x dim identity.
ComplexMatrix direct_sum_identity(const ComplexMatrix &m, int dim);

// True when ||m * m^dagger - I||_max <= tol.
bool is_unitary(const ComplexMatrix &m, double tol = kUnitaryTol);

// ||a - b||_max over entries.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const RealMatrix &a, const RealMatrix &b);

}  // namespace tspvqa

#endif  // TSPVQA_LINALG_H_
