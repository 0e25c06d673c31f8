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
#include <vector>

#include "gtest/gtest.h"

namespace tspvqa {
namespace {

TEST(RoutePermutation, RejectsNonPermutations) {
  EXPECT_THROW(RoutePermutation({0, 0, 2}), std::invalid_argument);
  EXPECT_THROW(RoutePermutation({0, 1, 3}), std::invalid_argument);
  EXPECT_THROW(RoutePermutation({-1, 1, 0}), std::invalid_argument);
  // The empty permutation is vacuously well-formed but never a tour.
  EXPECT_FALSE(RoutePermutation(std::vector<int>{}).valid_tour());
}

TEST(RoutePermutation, MatrixHasOnePerRowAtSigma) {
  const RoutePermutation perm({1, 2, 3, 0});  // 1->2->3->4->1
  const RealMatrix m = perm.matrix();
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(m.row(k).sum(), 1.0);
    EXPECT_EQ(m(k, perm.next(k)), 1.0);
  }
}

TEST(RoutePermutation, ValidTourIsSingleFullCycle) {
  EXPECT_TRUE(RoutePermutation({1, 2, 3, 0}).valid_tour());
  EXPECT_TRUE(RoutePermutation({2, 0, 3, 1}).valid_tour());
  // Two 2-cycles.
  EXPECT_FALSE(RoutePermutation({1, 0, 3, 2}).valid_tour());
  // Fixed point.
  EXPECT_FALSE(RoutePermutation({0, 2, 1}).valid_tour());
  // Identity.
  EXPECT_FALSE(RoutePermutation({0, 1, 2, 3}).valid_tour());
}

TEST(RoutePermutation, CyclesSortedBySmallestVertex) {
  const RoutePermutation perm({1, 0, 3, 2});  // (0 1)(2 3)
  const auto cycles = perm.cycles();
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(cycles[1], (std::vector<int>{2, 3}));
}

TEST(RoutePermutation, CyclesOfFullTourIsOneCycle) {
  const auto cycles = RoutePermutation({2, 3, 1, 0}).cycles();
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].size(), 4u);
}

TEST(RoutePermutation, SequenceStartsAtCityOne) {
  // 1->3->2->4->1 in 1-based labels.
  const RoutePermutation perm({2, 3, 1, 0});
  EXPECT_EQ(perm.to_sequence(), (std::vector<int>{1, 3, 2, 4}));
}

TEST(RoutePermutation, SequenceRejectsSubtours) {
  EXPECT_THROW(RoutePermutation({1, 0, 3, 2}).to_sequence(),
               std::invalid_argument);
}

TEST(RouteToMatrix, BuildsSuccessorPermutation) {
  const RoutePermutation perm = route_to_matrix({1, 2, 3, 4});
  EXPECT_EQ(perm.next(0), 1);
  EXPECT_EQ(perm.next(1), 2);
  EXPECT_EQ(perm.next(2), 3);
  EXPECT_EQ(perm.next(3), 0);
  EXPECT_TRUE(perm.valid_tour());
}

TEST(RouteToMatrix, RotationInvariant) {
  EXPECT_EQ(route_to_matrix({1, 3, 2, 4}), route_to_matrix({2, 4, 1, 3}));
  EXPECT_EQ(route_to_matrix({1, 3, 2, 4}), route_to_matrix({4, 1, 3, 2}));
}

TEST(RouteToMatrix, RejectsBadSequences) {
  EXPECT_THROW(route_to_matrix({1, 2, 2, 4}), std::invalid_argument);
  EXPECT_THROW(route_to_matrix({1, 2, 3, 5}), std::invalid_argument);
  EXPECT_THROW(route_to_matrix({}), std::invalid_argument);
  EXPECT_THROW(route_to_matrix({0, 1, 2, 3}), std::invalid_argument);
}

TEST(MatrixToRoute, RoundTripsAllSixFourCityTours) {
  const std::vector<std::vector<int>> tours{{1, 2, 3, 4}, {1, 2, 4, 3},
                                            {1, 3, 2, 4}, {1, 3, 4, 2},
                                            {1, 4, 2, 3}, {1, 4, 3, 2}};
  for (const auto &seq : tours) {
    const RoutePermutation perm = route_to_matrix(seq);
    EXPECT_EQ(matrix_to_route(perm.matrix()), seq);
  }
}

TEST(MatrixToRoute, RejectsNonPermutationMatrices) {
  RealMatrix half = RealMatrix::Constant(4, 4, 0.25);
  EXPECT_THROW(matrix_to_route(half), std::invalid_argument);
  RealMatrix two_ones = RealMatrix::Zero(3, 3);
  two_ones(0, 1) = 1.0;
  two_ones(0, 2) = 1.0;
  two_ones(1, 0) = 1.0;
  EXPECT_THROW(matrix_to_route(two_ones), std::invalid_argument);
}

TEST(MatrixToRoute, RejectsSubtourMatrices) {
  const RealMatrix m = RoutePermutation({1, 0, 3, 2}).matrix();
  EXPECT_THROW(matrix_to_route(m), std::invalid_argument);
}

TEST(RoutePermutation, ExactlySixValidToursOnFourCities) {
  std::vector<int> sigma{0, 1, 2, 3};
  int valid = 0;
  std::sort(sigma.begin(), sigma.end());
  do {
    valid += RoutePermutation(sigma).valid_tour() ? 1 : 0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  EXPECT_EQ(valid, 6);
}

}  // namespace
}  // namespace tspvqa
