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
#include "valmat/greedy.hpp"

namespace valmat {
namespace {

using testing::S;
using testing::V;
using testing::W;

TEST(Minimize, Modular) {
  const Minimizer m =
      MinimizeValuated(FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4})));
  EXPECT_EQ(m.set, S(3, {0, 1}));
  EXPECT_EQ(m.value, V(3));
}

TEST(Minimize, SinglePoint) {
  const Valuation omega = MatroidIndicator(MakeFromBases({4, {S(4, {1, 3})}}));
  const Minimizer m = MinimizeValuated(omega);
  EXPECT_EQ(m.set, S(4, {1, 3}));
  EXPECT_EQ(m.value, V(0));
}

TEST(Minimize, ZeroValuation) {
  const Valuation omega = MatroidIndicator(MakeGraphic(3, {{0, 1}, {1, 2}, {0, 2}}));
  const Minimizer m = MinimizeValuated(omega);
  EXPECT_EQ(m.value, V(0));
  EXPECT_EQ(m.set.count(), 2u);
}

TEST(Minimize, FromStart) {
  const Valuation omega = FromMatroidAndWeights(MakeUniform(4, 2), W({5, -1, 3, 0}));
  EXPECT_EQ(MinimizeValuatedFrom(omega, S(4, {0, 2})).set, S(4, {1, 3}));
  EXPECT_THROW(MinimizeValuatedFrom(omega, S(4, {0})), Error);
}

TEST(MinimizerFamily, Examples) {
  const auto unique =
      MinimizerFamily(FromMatroidAndWeights(MakeUniform(3, 2), W({1, 1, 2})));
  EXPECT_EQ(unique, std::vector<Subset>{S(3, {0, 1})});
  const auto both = MinimizerFamily(MatroidIndicator(MakeUniform(2, 1)));
  EXPECT_EQ(both, (std::vector<Subset>{S(2, {0}), S(2, {1})}));
  const auto single = MinimizerFamily(MatroidIndicator(MakeFromBases({3, {S(3, {2})}})));
  EXPECT_EQ(single, std::vector<Subset>{S(3, {2})});
}

TEST(LocalMinimum, Shift) {
  const Valuation omega = FromMatroidAndWeights(MakeUniform(3, 2), W({1, 2, 4}));
  EXPECT_TRUE(IsLocalMinimum(omega, S(3, {0, 1}), W({0, 0, 0})));
  EXPECT_FALSE(IsLocalMinimum(omega, S(3, {0, 2}), W({0, 0, 0})));
  // omega - p with p = (0, 0, 5) makes {a, c} best.
  EXPECT_TRUE(IsLocalMinimum(omega, S(3, {0, 2}), W({0, 0, 5})));
}

}  // namespace
}  // namespace valmat
