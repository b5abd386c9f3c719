// Copyright 2026 The valmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "valmat/vmi.hpp"

namespace valmat {
namespace {

using testing::S;
using testing::V;
using testing::W;

Valuation U23(std::initializer_list<long> w) {
  return FromMatroidAndWeights(MakeUniform(3, 2), W(w));
}

UnivariateTable Squares(std::int64_t hi) {
  std::vector<ExtValue> values;
  for (std::int64_t j = 0; j <= hi; ++j) values.emplace_back(Rational(j * j));
  return UnivariateTable(0, values);
}

TEST(SolveVmi, UniformAgainstTriangle) {
  const Valuation omega1 = U23({1, 2, 4});
  const Valuation omega2 =
      FromMatroidAndWeights(MakeGraphic(3, {{0, 1}, {1, 2}, {0, 2}}), W({4, 2, 1}));
  const auto r = SolveVmi(omega1, omega2);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, V(9));
  EXPECT_EQ(r.X1, r.X2);
}

TEST(SolveVmi, Degenerate) {
  const Valuation omega1 = U23({1, 2, 4});
  const auto r = SolveVmi(omega1, MatroidIndicator(MakeUniform(3, 2)));
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, V(3));
  const Valuation a = MatroidIndicator(MakeFromBases({2, {S(2, {0})}}));
  const Valuation b = MatroidIndicator(MakeFromBases({2, {S(2, {1})}}));
  EXPECT_FALSE(SolveVmi(a, b).optimal());
  EXPECT_FALSE(SolveVmi(omega1, SizeConstrainedModular(W({0, 0, 0}), 1)).optimal());
}

TEST(SolveVIn, Examples) {
  const Valuation a = U23({1, 2, 4});
  const Valuation b = U23({4, 2, 1});
  const Valuation c = FromMatroidAndWeights(MakeUniform(3, 1), W({3, -1, 0}));
  const auto free = SolveVIn({a, b, c}, MakeFree(3));
  ASSERT_TRUE(free.optimal());
  EXPECT_EQ(free.value, V(3 + 3 - 1));
  const auto capped = SolveVIn({a, a}, MakeUniform(3, 1));
  ASSERT_TRUE(capped.optimal());
  EXPECT_EQ(capped.value, V(8));
  ASSERT_EQ(capped.sets.size(), 2u);
  EXPECT_EQ((capped.sets[0] & capped.sets[1]).count(), 1u);
  EXPECT_FALSE(SolveVIn({a, a}, MakeUniform(3, 0)).optimal());
}

TEST(SolveVLeqK, Examples) {
  const Valuation omega = U23({1, 2, 4});
  EXPECT_EQ(SolveVLeqK(omega, omega, 2).value, V(6));
  EXPECT_EQ(SolveVLeqK(omega, omega, 1).value, V(8));
  EXPECT_FALSE(SolveVLeqK(omega, omega, 0).optimal());
}

TEST(SolveVnW, Examples) {
  const Valuation a = U23({1, 2, 4});
  const Valuation b = U23({4, 2, 1});
  EXPECT_EQ(SolveVnW({a, b}, W({0, 0, 0})).value, V(6));
  const Valuation zero = FromMatroidAndWeights(MakeUniform(2, 1), W({0, 0}));
  const auto split = SolveVnW({zero, zero}, W({5, 5}));
  ASSERT_TRUE(split.optimal());
  EXPECT_EQ(split.value, V(0));
  EXPECT_NE(split.sets[0], split.sets[1]);
  const Valuation forced1 = FromMatroidAndWeights(MakeFromBases({2, {S(2, {0})}}), W({2, 0}));
  const Valuation forced2 = FromMatroidAndWeights(MakeFromBases({2, {S(2, {0})}}), W({3, 0}));
  EXPECT_EQ(SolveVnW({forced1, forced2}, W({7, 1})).value, V(12));
  EXPECT_THROW(SolveVnW({zero, zero}, W({-1, 0})), Error);
}

TEST(SumValuatedPlusLaminar, Examples) {
  const Valuation zero = FromMatroidAndWeights(MakeUniform(2, 1), W({0, 0}));
  LaminarSpec phi;
  phi.ground_size = 2;
  phi.members = {{S(2, {0}), Squares(2)}, {S(2, {1}), Squares(2)}};
  const auto r = SolveSumValuatedPlusLaminar({zero, zero}, phi);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, V(2));
  LaminarSpec none;
  none.ground_size = 3;
  none.lower = IntVector{0, 0, 0};
  none.upper = IntVector{3, 3, 3};
  EXPECT_EQ(SolveSumValuatedPlusLaminar({U23({1, 2, 4}), U23({4, 2, 1})}, none).value,
            V(6));
}

TEST(SolveVGeqKViaDual, MatchesDirect) {
  const Valuation omega1 = U23({1, 2, 4});
  const Valuation omega2 = U23({4, 2, 1});
  for (int k = 0; k <= 3; ++k) {
    const auto direct = SolveVGeqK(omega1, omega2, k);
    const auto dual = SolveVGeqKViaDual(omega1, omega2, k);
    EXPECT_EQ(direct.status, dual.status) << k;
    EXPECT_EQ(direct.value, dual.value) << k;
  }
}

}  // namespace
}  // namespace valmat
