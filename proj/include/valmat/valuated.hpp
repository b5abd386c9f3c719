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

// Value oracles for valuated matroids and M-natural-convex functions.

#ifndef VALMAT_VALUATED_HPP_
#define VALMAT_VALUATED_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valmat/core.hpp"
#include "valmat/matroid.hpp"

namespace valmat {

// A set function that is +inf off one cardinality level. Copies share the
// memo and the query counter.
class Valuation {
 public:
  using ValueFn = std::function<ExtValue(const Subset&)>;

  // `witness` must have a finite value when present; an absent witness means
  // the effective domain is empty.
  Valuation(std::size_t ground_size, int rank, ValueFn fn,
            std::optional<Subset> witness, std::string kind);

  std::size_t ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  const std::string& kind() const { return kind_; }
  bool has_domain() const { return witness_.has_value(); }
  // Throws kEmptyDomain when the domain is empty.
  const Subset& witness_base() const;

  // Memoized. Returns +inf without evaluating when |x| != rank.
  ExtValue value(const Subset& x) const;
  bool InDomain(const Subset& x) const { return value(x).is_finite(); }

  // Number of value() calls since construction or the last reset.
  std::uint64_t query_count() const;
  void ResetQueryCount() const;
  // True when both handles share one memo and counter.
  bool SameOracle(const Valuation& other) const {
    return state_ == other.state_;
  }

 private:
  struct State;
  std::size_t ground_size_;
  int rank_;
  std::optional<Subset> witness_;
  std::string kind_;
  std::shared_ptr<State> state_;
};

// f on integer vectors, +inf outside [lower, upper].
class MnatFunction {
 public:
  using ValueFn = std::function<ExtValue(const IntVector&)>;

  MnatFunction(IntVector lower, IntVector upper, ValueFn fn,
               std::optional<IntVector> witness, std::string kind);

  std::size_t dimension() const { return lower_.size(); }
  const IntVector& lower() const { return lower_; }
  const IntVector& upper() const { return upper_; }
  const std::string& kind() const { return kind_; }
  bool has_domain() const { return witness_.has_value(); }
  const IntVector& witness_point() const;
  bool InBox(const IntVector& x) const;
  ExtValue value(const IntVector& x) const;
  // Number of lattice points in the box (saturates at UINT64_MAX).
  std::uint64_t BoxVolume() const;

 private:
  IntVector lower_;
  IntVector upper_;
  std::shared_ptr<const ValueFn> fn_;
  std::optional<IntVector> witness_;
  std::string kind_;
};

// g on a finite integer interval [lo, lo + values.size() - 1], +inf outside.
class UnivariateTable {
 public:
  UnivariateTable() = default;
  UnivariateTable(std::int64_t lo, std::vector<ExtValue> values);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
  const std::vector<ExtValue>& values() const { return values_; }
  ExtValue operator()(std::int64_t x) const;
  // g(k+1) + g(k-1) >= 2 g(k) wherever g(k) is finite, and the finite part is
  // an interval.
  bool IsDiscreteConvex() const;

 private:
  std::int64_t lo_ = 0;
  std::vector<ExtValue> values_;
};

struct LaminarMember {
  Subset set;
  UnivariateTable g;
};

struct LaminarSpec {
  std::size_t ground_size = 0;
  std::vector<LaminarMember> members;
  // Box enclosing the domain. When empty, every coordinate must be covered by
  // a singleton member, whose table interval becomes the bound.
  IntVector lower;
  IntVector upper;
};

// Evaluates sum_X g_X(x(X)).
ExtValue EvaluateLaminar(const LaminarSpec& spec, const IntVector& x);
// Throws kInvalidInput on a non-laminar family or a non-convex table.
void ValidateLaminarSpec(const LaminarSpec& spec);

// Elements of the n-fold copy space: (copy i, element v) -> i * m + v.
std::size_t CopyIndex(std::size_t copy, std::size_t v, std::size_t m);
std::vector<Subset> SplitCopies(const Subset& x, std::size_t n, std::size_t m);
Subset JoinCopies(const std::vector<Subset>& parts);
// count(v) = |{i : v in X_i}|.
IntVector CopyCounts(const Subset& x, std::size_t n, std::size_t m);

Valuation FromMatroidAndWeights(const Matroid& m, std::vector<Rational> w);
Valuation SizeConstrainedModular(std::vector<Rational> w, int r);
// 0 on bases of m, +inf elsewhere.
Valuation MatroidIndicator(const Matroid& m);
Valuation DualValuation(const Valuation& omega);
Valuation DisjointSum(const std::vector<Valuation>& parts);
// 0 when the copies' intersection is independent in `ind` and the total
// size is r. The domain is empty when r exceeds the rank of that family.
Valuation IntersectionConstraintValuation(std::size_t n, const Matroid& ind,
                                          int r);
// w(intersection of the copies) on the level sum |X_i| = r.
Valuation LaminarPenalty(std::vector<Rational> w, std::size_t n, int r);
// The same formula with no sign check; for probing the sign hypothesis.
Valuation LaminarPenaltyUnchecked(std::vector<Rational> w, std::size_t n,
                                  int r);
// sum_X g_X(sum_{v in X} count(v)) on the level sum |X_i| = r, where `spec`
// lives on the original ground set.
Valuation LiftedLaminarValuation(const LaminarSpec& spec, std::size_t n, int r,
                                 std::uint64_t limit = 1000000);
// A generic set function; the witness is the first finite member of the rank
// level in lexicographic order.
Valuation ValuationFromSetFunction(std::size_t ground_size, int rank,
                                   Valuation::ValueFn fn, std::string kind);

MnatFunction LaminarConvexFunction(const LaminarSpec& spec,
                                   std::uint64_t limit = 1000000);
// f on the hyperplane sum x = r; +inf off it. Empty-domain results carry no
// witness.
MnatFunction RestrictToHyperplane(const MnatFunction& f, std::int64_t r,
                                  std::uint64_t limit = 1000000);
// Same, packaged as a Valuation; the box must lie in {0,1}^V.
Valuation RestrictToValuation(const MnatFunction& f, int r,
                              std::uint64_t limit = 1000000);
// A valuation seen as a function on {0,1}^V.
MnatFunction ValuationAsFunction(const Valuation& omega);
// f + <w, x>.
MnatFunction AddLinear(const MnatFunction& f, std::vector<Rational> w);
// 0/+inf indicator of the effective domain of f.
MnatFunction DomainIndicator(const MnatFunction& f);

// Calls `fn` on every lattice point of [lower, upper] in lexicographic order;
// stops early when `fn` returns false.
void ForEachBoxPoint(const IntVector& lower, const IntVector& upper,
                     const std::function<bool(const IntVector&)>& fn);

// Domain members in lexicographic order.
std::vector<Subset> EnumerateDomain(const Valuation& omega,
                                    std::size_t limit = kDefaultBruteForceGround);
// Box points with finite value, in lexicographic order.
std::vector<IntVector> EnumerateFunctionDomain(const MnatFunction& f,
                                               std::uint64_t limit = 1000000);

bool CheckValuatedExchange(const Valuation& omega,
                           std::size_t limit = kDefaultBruteForceGround);
bool CheckMnatExchange(const MnatFunction& f, std::uint64_t limit = 100000);

}  // namespace valmat

#endif  // VALMAT_VALUATED_HPP_
