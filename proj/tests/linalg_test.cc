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
#include <vector>

#include "gtest/gtest.h"
#include "tspvqa/rng.h"

namespace tspvqa {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> random_angles(int count, uint64_t seed) {
  RandomStream stream(seed);
  std::vector<double> out(count);
  for (double &a : out) a = stream.uniform(0.0, 2.0 * kPi);
  return out;
}

TEST(Su2BlockMatrix, ThetaZeroIsSwap) {
  const ComplexMatrix m = su2_block_matrix(Su2Block{0.0, 0.0, 0.0, {1, 2}});
  EXPECT_NEAR(std::abs(m(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(m(0, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(1, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 1)), 0.0, 1e-15);
}

TEST(Su2BlockMatrix, ThetaHalfPiIsDiagSign) {
  const ComplexMatrix m =
      su2_block_matrix(Su2Block{kPi / 2, 0.0, 0.0, {1, 2}});
  EXPECT_NEAR(m(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(m(1, 1).real(), -1.0, 1e-15);
}

TEST(Su2BlockMatrix, ThetaQuarterPiIsHadamardLike) {
  const ComplexMatrix m =
      su2_block_matrix(Su2Block{kPi / 4, 0.0, 0.0, {1, 2}});
  const double s = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(m(0, 0).real(), s, 1e-15);
  EXPECT_NEAR(m(0, 1).real(), s, 1e-15);
  EXPECT_NEAR(m(1, 0).real(), s, 1e-15);
  EXPECT_NEAR(m(1, 1).real(), -s, 1e-15);
}

TEST(Su2BlockMatrix, GeneralPhasesMatchDefinition) {
  const Su2Block block{0.3, 0.7, -1.1, {1, 2}};
  const ComplexMatrix m = su2_block_matrix(block);
  const Complex i(0.0, 1.0);
  EXPECT_LT(std::abs(m(0, 0) - std::exp(i * 0.7) * std::sin(0.3)), 1e-15);
  EXPECT_LT(std::abs(m(0, 1) - std::exp(i * -1.1) * std::cos(0.3)), 1e-15);
  EXPECT_LT(std::abs(m(1, 0) - std::exp(-i * -1.1) * std::cos(0.3)), 1e-15);
  EXPECT_LT(std::abs(m(1, 1) + std::exp(-i * 0.7) * std::sin(0.3)), 1e-15);
}

TEST(Su2BlockMatrix, UnitaryForRandomAngles) {
  RandomStream stream(11);
  for (int k = 0; k < 200; ++k) {
    const Su2Block block{stream.uniform(-5.0, 5.0), stream.uniform(-5.0, 5.0),
                         stream.uniform(-5.0, 5.0),
                         {1, 2}};
    EXPECT_TRUE(is_unitary(su2_block_matrix(block)));
  }
}

TEST(EmbedBlock, LeavesOtherModesAlone) {
  const ComplexMatrix m = embed_block(Su2Block{0.0, 0.0, 0.0, {1, 2}}, 4);
  // Swap of modes 1,2 embedded in the 4x4 identity.
  EXPECT_NEAR(m(0, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(1, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(2, 2).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(3, 3).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(m(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(2, 3)), 0.0, 1e-15);
}

TEST(EmbedBlock, HighPairPlacesSignAtBottom) {
  const ComplexMatrix m =
      embed_block(Su2Block{kPi / 2, 0.0, 0.0, {3, 4}}, 4);
  EXPECT_NEAR(m(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(2, 2).real(), 1.0, 1e-15);
  EXPECT_NEAR(m(3, 3).real(), -1.0, 1e-15);
}

TEST(EmbedBlock, RejectsOutOfRangeOrNonAdjacentPairs) {
  EXPECT_THROW(embed_block(Su2Block{0.0, 0.0, 0.0, {4, 5}}, 4),
               std::invalid_argument);
  EXPECT_THROW(embed_block(Su2Block{0.0, 0.0, 0.0, {0, 1}}, 4),
               std::invalid_argument);
  EXPECT_THROW(embed_block(Su2Block{0.0, 0.0, 0.0, {1, 3}}, 4),
               std::invalid_argument);
}

TEST(EmbedBlock, UnitaryForRandomBlocks) {
  RandomStream stream(12);
  for (int k = 0; k < 100; ++k) {
    const int lo = 1 + static_cast<int>(stream.uniform(0.0, 3.0));
    const Su2Block block{stream.uniform(-5.0, 5.0), stream.uniform(-5.0, 5.0),
                         stream.uniform(-5.0, 5.0),
                         {lo, lo + 1}};
    EXPECT_TRUE(is_unitary(embed_block(block, 4)));
  }
}

TEST(ComposeMesh, EmptySpecIsIdentity) {
  const ComplexMatrix m = compose_mesh(MeshSpec{4, {}});
  EXPECT_LT(max_abs_diff(m, ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(ComposeMesh, AppliesStoredBlocksRightToLeft) {
  // First stored block acts first: column vector e1 goes through the (1,2)
  // swap, then the (2,3) swap, landing on e3.
  MeshSpec spec{3,
                {real_block(1, 0.0),    // swap modes 1,2
                 real_block(2, 0.0)}};  // swap modes 2,3
  const ComplexMatrix m = compose_mesh(spec);
  ComplexVector e1 = ComplexVector::Zero(3);
  e1(0) = 1.0;
  const ComplexVector out = m * e1;
  EXPECT_NEAR(std::abs(out(2)), 1.0, 1e-15);
}

TEST(ComposeMesh, TriangularAtZeroAnglesIsFixedPermutation) {
  // All-zero thetas turn each cell into a swap; the composed product routes
  // e1->e3, e2->e1, e3->e4, e4->e2.
  const ComplexMatrix m = compose_mesh(triangular_mesh({0.0, 0.0, 0.0}));
  RealMatrix expected(4, 4);
  expected.setZero();
  expected(2, 0) = 1.0;  // column of e1 has its one at row 3
  expected(0, 1) = 1.0;
  expected(3, 2) = 1.0;
  expected(1, 3) = 1.0;
  EXPECT_LT(max_abs_diff(m, expected.cast<Complex>()), 1e-15);
}

TEST(ComposeMesh, EmbeddingThenComposingMatchesManualProduct) {
  RandomStream stream(13);
  for (int k = 0; k < 50; ++k) {
    MeshSpec spec{4, {}};
    ComplexMatrix manual = ComplexMatrix::Identity(4, 4);
    for (int b = 0; b < 5; ++b) {
      const int lo = 1 + static_cast<int>(stream.uniform(0.0, 3.0));
      const Su2Block block{stream.uniform(-3.0, 3.0),
                           stream.uniform(-3.0, 3.0),
                           stream.uniform(-3.0, 3.0),
                           {lo, lo + 1}};
      spec.blocks.push_back(block);
      manual = embed_block(block, 4) * manual;
    }
    EXPECT_LT(max_abs_diff(compose_mesh(spec), manual), 1e-12);
  }
}

TEST(RectangularMesh, FourModeLayoutHasSixCells) {
  const MeshSpec spec = rectangular_mesh(4, random_angles(6, 21));
  EXPECT_EQ(spec.dim, 4);
  ASSERT_EQ(spec.blocks.size(), 6u);
  // Written-product order u12 u34 u23 u12 u34 u23 is stored reversed
  // (application order), so the first stored cell acts on modes (2,3).
  EXPECT_EQ(spec.blocks.front().pair.first, 2);
  EXPECT_EQ(spec.blocks.back().pair.first, 1);
}

TEST(RectangularMesh, AngleCountValidation) {
  EXPECT_THROW(rectangular_mesh(4, random_angles(5, 22)),
               std::invalid_argument);
  EXPECT_THROW(rectangular_mesh(2, {}), std::invalid_argument);
  EXPECT_NO_THROW(rectangular_mesh(5, random_angles(10, 23)));
}

TEST(RectangularMesh, ComposedUnitaryOverManyRandomDraws) {
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix u =
        compose_mesh(rectangular_mesh(4, random_angles(6, 1000 + k)));
    EXPECT_TRUE(is_unitary(u));
  }
}

TEST(RectangularMesh, PhaseFreeMeshesAreRealOrthogonal) {
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix u =
        compose_mesh(rectangular_mesh(5, random_angles(10, 2000 + k)));
    EXPECT_TRUE(is_unitary(u));
    double max_imag = 0.0;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        max_imag = std::max(max_imag, std::abs(u(i, j).imag()));
      }
    }
    EXPECT_LE(max_imag, 1e-12);
  }
}

TEST(TriangularMesh, ComposedUnitaryOverManyRandomDraws) {
  RandomStream stream(31);
  for (int k = 0; k < 1000; ++k) {
    const std::array<double, 3> t{stream.uniform(-4.0, 4.0),
                                  stream.uniform(-4.0, 4.0),
                                  stream.uniform(-4.0, 4.0)};
    EXPECT_TRUE(is_unitary(compose_mesh(triangular_mesh(t))));
  }
}

TEST(TriangularMesh, CellOrderMatchesThreeCellNetwork) {
  // U[t1,t2,t3] = u23[t1] u12[t2] u34[t3]; rightmost factor acts first.
  RandomStream stream(32);
  for (int k = 0; k < 50; ++k) {
    const std::array<double, 3> t{stream.uniform(-3.0, 3.0),
                                  stream.uniform(-3.0, 3.0),
                                  stream.uniform(-3.0, 3.0)};
    const ComplexMatrix manual =
        embed_block(real_block(2, t[0]), 4) *
        (embed_block(real_block(1, t[1]), 4) *
         embed_block(real_block(3, t[2]), 4));
    EXPECT_LT(max_abs_diff(compose_mesh(triangular_mesh(t)), manual), 1e-12);
  }
}

TEST(DirectSumIdentity, PlacesBlockTopLeft) {
  ComplexMatrix m(2, 2);
  m << Complex(0, 1), Complex(2, 0), Complex(3, 0), Complex(0, -4);
  const ComplexMatrix out = direct_sum_identity(m, 4);
  EXPECT_LT(std::abs(out(0, 0) - Complex(0, 1)), 1e-15);
  EXPECT_LT(std::abs(out(1, 1) - Complex(0, -4)), 1e-15);
  EXPECT_NEAR(out(2, 2).real(), 1.0, 1e-15);
  EXPECT_NEAR(out(3, 3).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(out(2, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out(0, 3)), 0.0, 1e-15);
}

TEST(IsUnitary, FlagsNonUnitary) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  EXPECT_TRUE(is_unitary(m));
  m(0, 0) = 1.5;
  EXPECT_FALSE(is_unitary(m));
}

TEST(MaxAbsDiff, ReportsWorstEntry) {
  RealMatrix a = RealMatrix::Zero(2, 2);
  RealMatrix b = a;
  b(1, 0) = -0.25;
  EXPECT_NEAR(max_abs_diff(a, b), 0.25, 1e-15);
}

}  // namespace
}  // namespace tspvqa
