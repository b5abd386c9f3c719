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

// Independence-oracle matroids and the standard constructions.

#ifndef VALMAT_MATROID_HPP_
#define VALMAT_MATROID_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "valmat/core.hpp"

namespace valmat {

// Largest ground set the exhaustive routines will walk (2^n subsets).
inline constexpr std::size_t kDefaultBruteForceGround = 22;

class Matroid {
 public:
  using IndependenceFn = std::function<bool(const Subset&)>;

  // The rank is computed once, greedily from the empty set.
  Matroid(std::size_t ground_size, IndependenceFn independent,
          std::string kind);

  std::size_t ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  const std::string& kind() const { return kind_; }

  bool IsIndependent(const Subset& x) const;
  bool IsBase(const Subset& x) const;
  // Size of a maximal independent subset of `x`.
  int RankOf(const Subset& x) const;
  // Greedy base, scanning elements in index order.
  Subset GreedyBase() const;

 private:
  std::size_t ground_size_;
  std::shared_ptr<const IndependenceFn> independent_;
  std::string kind_;
  int rank_ = 0;
};

struct PartitionBlock {
  Subset elements;
  int capacity = 0;
};

struct ExplicitBaseFamily {
  std::size_t ground_size = 0;
  std::vector<Subset> bases;
};

Matroid MakeUniform(std::size_t ground_size, int rank);
Matroid MakeFree(std::size_t ground_size);
Matroid MakePartition(std::size_t ground_size,
                      std::vector<PartitionBlock> blocks);
// Ground set = edge list; loops are dependent.
Matroid MakeGraphic(int vertices, std::vector<std::pair<int, int>> edges);
// Columns of `rows` (each row has ground_size entries) are the elements.
Matroid MakeLinear(std::vector<std::vector<Rational>> rows);
// Independent sets are the subsets of listed bases. The family must satisfy
// the base exchange axiom.
Matroid MakeFromBases(const ExplicitBaseFamily& family);
Matroid DualMatroid(const Matroid& m);

// Exhaustive check of the base exchange axiom.
bool CheckBaseExchange(const ExplicitBaseFamily& family);
// Exhaustive check of the empty-set, downward-closure and augmentation axioms.
bool CheckIndependenceAxioms(const Matroid& m,
                             std::size_t limit = kDefaultBruteForceGround);

std::vector<Subset> EnumerateBases(const Matroid& m,
                                   std::size_t limit = kDefaultBruteForceGround);

}  // namespace valmat

#endif  // VALMAT_MATROID_HPP_
