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
#include "valmat/matroid.hpp"

namespace valmat {
namespace {

using testing::S;

Matroid Triangle() { return MakeGraphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(Uniform, Independence) {
  const Matroid m = MakeUniform(3, 2);
  EXPECT_TRUE(m.IsIndependent(S(3, {0, 1})));
  EXPECT_FALSE(m.IsIndependent(S(3, {0, 1, 2})));
  const Matroid zero = MakeUniform(4, 0);
  EXPECT_TRUE(zero.IsIndependent(Subset(4)));
  EXPECT_FALSE(zero.IsIndependent(S(4, {2})));
  EXPECT_THROW(MakeUniform(3, 4), Error);
}

TEST(Partition, Independence) {
  const Matroid m = MakePartition(3, {{S(3, {0, 1}), 1}, {S(3, {2}), 1}});
  EXPECT_TRUE(m.IsIndependent(S(3, {0, 2})));
  EXPECT_FALSE(m.IsIndependent(S(3, {0, 1})));
  const Matroid closed = MakePartition(3, {{S(3, {0, 1}), 0}, {S(3, {2}), 0}});
  EXPECT_EQ(closed.rank(), 0);
  EXPECT_FALSE(closed.IsIndependent(S(3, {2})));
}

TEST(Graphic, Cycles) {
  const Matroid tri = Triangle();
  EXPECT_TRUE(tri.IsIndependent(S(3, {0, 1})));
  EXPECT_TRUE(tri.IsIndependent(S(3, {1, 2})));
  EXPECT_FALSE(tri.IsIndependent(S(3, {0, 1, 2})));
  const Matroid path = MakeGraphic(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(path.IsIndependent(Subset::Full(3)));
  const Matroid parallel = MakeGraphic(2, {{0, 1}, {0, 1}});
  EXPECT_FALSE(parallel.IsIndependent(S(2, {0, 1})));
  const Matroid loop = MakeGraphic(1, {{0, 0}});
  EXPECT_EQ(loop.rank(), 0);
}

TEST(Linear, Rank) {
  const Matroid m = MakeLinear({{Rational(1), Rational(0), Rational(1)},
                                {Rational(0), Rational(1), Rational(1)}});
  EXPECT_EQ(m.rank(), 2);
  EXPECT_TRUE(m.IsIndependent(S(3, {0, 2})));
  const Matroid dependent = MakeLinear({{Rational(1), Rational(2)},
                                        {Rational(2), Rational(4)}});
  EXPECT_EQ(dependent.rank(), 1);
  EXPECT_FALSE(dependent.IsIndependent(S(2, {0, 1})));
}

TEST(Dual, Examples) {
  const Matroid d = DualMatroid(MakeUniform(3, 2));
  EXPECT_EQ(d.rank(), 1);
  EXPECT_EQ(EnumerateBases(d), EnumerateBases(MakeUniform(3, 1)));
  const Matroid tri = Triangle();
  EXPECT_EQ(EnumerateBases(DualMatroid(DualMatroid(tri))), EnumerateBases(tri));
  const Matroid free_dual = DualMatroid(MakeFree(3));
  EXPECT_EQ(free_dual.rank(), 0);
  EXPECT_EQ(EnumerateBases(free_dual), std::vector<Subset>{Subset(3)});
}

TEST(BaseExchange, Families) {
  EXPECT_TRUE(CheckBaseExchange({3, EnumerateBases(MakeUniform(3, 2))}));
  EXPECT_FALSE(CheckBaseExchange({4, {S(4, {0, 1}), S(4, {2, 3})}}));
  EXPECT_TRUE(CheckBaseExchange({4, {S(4, {1, 3})}}));
  EXPECT_THROW(MakeFromBases({4, {S(4, {0, 1}), S(4, {2, 3})}}), Error);
}

TEST(EnumerateBases, Counts) {
  EXPECT_EQ(EnumerateBases(MakeUniform(3, 2)).size(), 3u);
  EXPECT_EQ(EnumerateBases(MakeUniform(3, 0)), std::vector<Subset>{Subset(3)});
  EXPECT_EQ(EnumerateBases(Triangle()).size(), 3u);
}

TEST(Axioms, StockMatroids) {
  EXPECT_TRUE(CheckIndependenceAxioms(MakeUniform(5, 3)));
  EXPECT_TRUE(CheckIndependenceAxioms(Triangle()));
  EXPECT_TRUE(CheckIndependenceAxioms(DualMatroid(Triangle())));
  const Matroid bad(3, [](const Subset& x) { return x.count() != 1 || x.contains(0); },
                    "bad");
  EXPECT_FALSE(CheckIndependenceAxioms(bad));
}

TEST(Matroid, RankAndGreedy) {
  const Matroid m = MakePartition(4, {{S(4, {0, 1, 2}), 2}, {S(4, {3}), 1}});
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.RankOf(S(4, {0, 1, 2})), 2);
  EXPECT_TRUE(m.IsBase(m.GreedyBase()));
}

}  // namespace
}  // namespace valmat
