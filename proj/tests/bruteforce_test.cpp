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
#include "valmat/bruteforce.hpp"

namespace valmat {
namespace {

using testing::S;
using testing::V;
using testing::W;

TEST(BruteVGeqK, Examples) {
  const Valuation o1 = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  const Valuation o2 = FromMatroidAndWeights(MakeUniform(3, 2), W({4, 2, 1}));
  EXPECT_EQ(BruteVGeqK(o1, o2, 2).value, V(9));
  const auto free = BruteVGeqK(o1, o2, 0);
  EXPECT_EQ(free.value, V(6));
  EXPECT_EQ(free.X1, S(3, {0, 1}));
  EXPECT_EQ(free.X2, S(3, {1, 2}));
  EXPECT_EQ(BruteVEqK(o1, o1, 1).value, V(8));
  EXPECT_EQ(BruteVLeqK(o1, o1, 1).value, V(8));
}

TEST(BruteVGeqK, EmptyDomain) {
  const Valuation none = ValuationFromSetFunction(
      3, 1, [](const Subset&) { return ExtValue::Infinity(); }, "none");
  const Valuation o = FromMatroidAndWeights(MakeUniform(3, 1), W({1, 2, 4}));
  EXPECT_FALSE(BruteVEqK(none, o, 0).optimal());
}

TEST(BruteVGeqK, Limit) {
  const Valuation big = SizeConstrainedModular(std::vector<Rational>(16, Rational(0)), 8);
  EXPECT_THROW(BruteVGeqK(big, big, 1, 1000), Error);
}

TEST(BruteMGeqKW, AgreesOnZeroOneBoxes) {
  const Valuation o1 = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  const Valuation o2 = FromMatroidAndWeights(MakeGraphic(3, {{0, 1}, {1, 2}, {0, 2}}),
                                             W({4, 2, 1}));
  for (int k = 0; k <= 2; ++k) {
    const MSolution m = BruteMGeqKW(ValuationAsFunction(o1), ValuationAsFunction(o2), k,
                                    W({0, 0, 0}));
    EXPECT_EQ(m.value, BruteVGeqK(o1, o2, k).value) << k;
  }
}

TEST(ThreeMatroidIntersection, Examples) {
  EXPECT_EQ(BruteThreeMatroidIntersection(MakeFree(3), MakeFree(3), MakeFree(3)),
            Subset::Full(3));
  EXPECT_EQ(BruteThreeMatroidIntersection(MakeFree(3), MakeUniform(3, 0), MakeFree(3)),
            Subset(3));
  const Matroid m1 = MakePartition(4, {{S(4, {0, 1}), 1}, {S(4, {2, 3}), 1}});
  const Matroid m2 = MakePartition(4, {{S(4, {0, 2}), 1}, {S(4, {1, 3}), 1}});
  const Matroid m3 = MakePartition(4, {{S(4, {0, 3}), 1}, {S(4, {1}), 1}, {S(4, {2}), 1}});
  // {a, d} violates the third matroid; {b, c} is the only common pair.
  EXPECT_EQ(BruteThreeMatroidIntersection(m1, m2, m3), S(4, {1, 2}));
}

TEST(BruteTuples, Examples) {
  const Valuation o = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  EXPECT_EQ(BruteVIn({o, o}, MakeUniform(3, 1)).value, V(8));
  const Valuation zero = MatroidIndicator(MakeUniform(2, 1));
  EXPECT_EQ(BruteVnW({zero, zero}, W({5, 5})).value, V(0));
  EXPECT_EQ(BruteVnW({zero, zero}, W({-5, -5})).value, V(-5));
}

}  // namespace
}  // namespace valmat
