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
#include "valmat/core.hpp"

namespace valmat {
namespace {

using testing::S;

TEST(ComponentwiseMin, Basic) {
  EXPECT_EQ(ComponentwiseMin(IntVector{1, 3}, IntVector{2, 1}), (IntVector{1, 1}));
  const IntVector x{4, 0, 2};
  EXPECT_EQ(ComponentwiseMin(x, x), x);
  EXPECT_EQ(ComponentwiseMin(IntVector{0, 0, 5}, IntVector{0, 0, 0}),
            (IntVector{0, 0, 0}));
}

TEST(SubsetToVector, Indicators) {
  EXPECT_EQ(SubsetToVector(Subset(3)), (IntVector{0, 0, 0}));
  EXPECT_EQ(SubsetToVector(S(3, {0, 2})), (IntVector{1, 0, 1}));
  EXPECT_EQ(SubsetToVector(Subset::Full(3)), (IntVector{1, 1, 1}));
  EXPECT_EQ(VectorToSubset(IntVector{1, 0, 1}), S(3, {0, 2}));
}

TEST(IntersectionCardinality, Basic) {
  EXPECT_EQ(IntersectionCardinality(S(3, {0, 1}), S(3, {1, 2})), 1u);
  const Subset x = S(5, {0, 3, 4});
  EXPECT_EQ(IntersectionCardinality(x, x), 3u);
  EXPECT_EQ(IntersectionCardinality(x, Subset(5)), 0u);
}

TEST(Subset, Operations) {
  const Subset x = S(4, {0, 1});
  EXPECT_EQ(x.Complement(), S(4, {2, 3}));
  EXPECT_EQ(x.Exchanged(0, 3), S(4, {1, 3}));
  EXPECT_EQ((x | S(4, {2})).count(), 3u);
  EXPECT_EQ(x - S(4, {1}), S(4, {0}));
  EXPECT_TRUE(S(4, {1}).IsSubsetOf(x));
  EXPECT_TRUE(LexLess(S(4, {0, 1}), S(4, {0, 2})));
  const Subset big = S(200, {3, 150, 199});
  EXPECT_EQ(big.elements(), (std::vector<std::size_t>{3, 150, 199}));
}

TEST(Subset, EnumerateBySize) {
  int count = 0;
  ForEachSubsetOfSize(5, 2, [&](const Subset& s) {
    EXPECT_EQ(s.count(), 2u);
    ++count;
    return true;
  });
  EXPECT_EQ(count, 10);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(ParseRational("3/6"), Rational(1, 2));
  EXPECT_EQ(ParseRational("-7"), Rational(-7));
  EXPECT_EQ(FormatRational(Rational(-4, 6)), "-2/3");
  EXPECT_THROW(ParseRational("1/0"), Error);
  EXPECT_THROW(ParseRational("abc"), Error);
}

TEST(ExtValue, Arithmetic) {
  const ExtValue inf = ExtValue::Infinity();
  EXPECT_TRUE((inf + ExtValue(3)).is_infinite());
  EXPECT_EQ(ExtValue(2) + ExtValue(Rational(1, 2)), ExtValue(Rational(5, 2)));
  EXPECT_LT(ExtValue(1000000), inf);
  EXPECT_EQ(inf, ExtValue::Infinity());
  EXPECT_EQ(ExtValue::Parse("inf").ToString(), "inf");
  EXPECT_EQ(ExtValue::Parse("5/10").ToString(), "1/2");
  EXPECT_THROW(inf.value(), Error);
}

TEST(GroundSet, Labels) {
  const GroundSet g(3, {"a", "b", "c"});
  EXPECT_EQ(g.Find("c")->index, 2u);
  EXPECT_FALSE(g.Find("z").has_value());
  EXPECT_EQ(g.label(ElementId{1}), "b");
  EXPECT_THROW(GroundSet(2, {"a", "a"}), Error);
}

TEST(WeightOf, Sum) {
  EXPECT_EQ(WeightOf(testing::W({1, 2, 4}), S(3, {0, 2})), Rational(5));
}

}  // namespace
}  // namespace valmat
