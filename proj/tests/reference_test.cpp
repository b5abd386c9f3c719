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
#include "valmat/reference.hpp"

namespace valmat {
namespace {

using testing::S;
using testing::V;
using testing::W;

TEST(Lpt, Examples) {
  const Matroid u = MakeUniform(3, 2);
  const auto one = LptSolveWEqK(u, u, W({1, 2, 4}), W({1, 2, 4}), 1);
  ASSERT_TRUE(one.solution.optimal());
  EXPECT_EQ(one.solution.value, V(8));
  const auto two = LptSolveWEqK(u, u, W({1, 2, 4}), W({1, 2, 4}), 2);
  ASSERT_TRUE(two.solution.optimal());
  EXPECT_EQ(two.solution.value, V(6));
  EXPECT_EQ(two.solution.X1, S(3, {0, 1}));
  EXPECT_EQ(two.solution.X2, S(3, {0, 1}));
  const Matroid a = MakeFromBases({2, {S(2, {0})}});
  const Matroid b = MakeFromBases({2, {S(2, {1})}});
  EXPECT_FALSE(LptSolveWEqK(a, b, W({0, 0}), W({0, 0}), 1).solution.optimal());
}

TEST(Lpt, WitnessFromSolver) {
  const Matroid u = MakeUniform(3, 2);
  const auto w1 = W({1, 2, 4});
  const auto w2 = W({4, 2, 1});
  const auto r = LptSolveWEqK(u, u, w1, w2, 2);
  ASSERT_TRUE(r.lpt.has_value());
  const Valuation o1 = FromMatroidAndWeights(u, w1);
  const Valuation o2 = FromMatroidAndWeights(u, w2);
  EXPECT_TRUE(LptWitnessCheck(r.solution.X1, r.solution.X2, *r.lpt, o1, o2));
  EXPECT_TRUE(VerifySolution(r.solution, o1, o2));
}

TEST(LptWitnessCheck, Conditions) {
  const Valuation o1 = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  const Valuation o2 = FromMatroidAndWeights(MakeUniform(3, 2), W({4, 2, 1}));
  const Subset x1 = S(3, {0, 1});
  const Subset x2 = S(3, {1, 2});
  const LptWitness zero{W({0, 0, 0}), W({0, 0, 0}), Rational(0)};
  EXPECT_TRUE(LptWitnessCheck(x1, x2, zero, o1, o2));
  LptWitness broken = zero;
  broken.lambda = Rational(1);
  EXPECT_FALSE(LptWitnessCheck(x1, x2, broken, o1, o2));
}

TEST(ConvertWitness, RoundTrip) {
  const Subset x = S(3, {0, 1});
  const Witness zero{W({0, 0, 0}), W({0, 0, 0}), x};
  const LptWitness lpt = ConvertWitness(x, x, zero);
  EXPECT_EQ(lpt.q1, W({0, 0, 0}));
  EXPECT_EQ(lpt.q2, W({0, 0, 0}));
  EXPECT_EQ(lpt.lambda, Rational(0));
  const Witness back = WitnessFromLpt(x, x, lpt);
  EXPECT_EQ(back.p1, zero.p1);
  EXPECT_EQ(back.F, x);
  const Witness uneven{W({0, 1, 0}), W({0, 0, 0}), x};
  EXPECT_THROW(ConvertWitness(x, x, uneven), Error);
}

TEST(ConvertWitness, FromViap) {
  const Valuation o1 = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  const Valuation o2 = FromMatroidAndWeights(MakeUniform(3, 2), W({4, 2, 1}));
  const auto s = SolveVGeqK(o1, o2, 2);
  ASSERT_TRUE(s.witness.has_value());
  const LptWitness lpt = ConvertWitness(s.X1, s.X2, *s.witness);
  EXPECT_TRUE(LptWitnessCheck(s.X1, s.X2, lpt, o1, o2));
  EXPECT_TRUE(VerifyWitness(s.X1, s.X2, WitnessFromLpt(s.X1, s.X2, lpt), 2, o1, o2));
}

TEST(AltSolve, Examples) {
  const Valuation zero = MatroidIndicator(MakeUniform(3, 2));
  const auto r = AltSolveVEqK(zero, zero, 1);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, V(0));
  EXPECT_EQ((r.X1 & r.X2).count(), 1u);
  EXPECT_FALSE(AltSolveVEqK(zero, zero, 0).optimal());
  const Valuation o1 = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  EXPECT_EQ(AltSolveVEqK(o1, o1, 1).value, V(8));
}

}  // namespace
}  // namespace valmat
