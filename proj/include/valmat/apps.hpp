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

// Application drivers: recoverable robust optimization, intersection-size
// costs, diagonal interaction costs and congestion games.

#ifndef VALMAT_APPS_HPP_
#define VALMAT_APPS_HPP_

#include <string>
#include <vector>

#include "valmat/mflow.hpp"
#include "valmat/vmi.hpp"

namespace valmat {

// lower <= w <= upper componentwise.
struct IntervalUncertainty {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};
// Throws kInvalidInput on a size mismatch or lower > upper.
void ValidateInterval(const IntervalUncertainty& unc, std::size_t n);

// min omega1(X1) + max_w min { w(X2) : X2 base of m, |X1 & X2| >= k }.
IntersectionSolution SolveRecoverableRobustInterval(
    const Valuation& omega1, const Matroid& m, const IntervalUncertainty& unc,
    int k);
// The same with M-convex first and second stage costs f1, f2 + w.
MSolution SolveRecoverableRobustMConvex(const MnatFunction& f1,
                                        const MnatFunction& f2,
                                        const IntervalUncertainty& unc, int k);

// min over k of opt(|X1 & X2| = k) + c(k).
IntersectionSolution SolveVC(const Valuation& omega1, const Valuation& omega2,
                             const UnivariateTable& c);

// min w1(X1) + w2(X2) + q(X1 & X2) over bases; q must not mix signs.
IntersectionSolution SolveCopicDiagonal(const Matroid& m1, const Matroid& m2,
                                        const std::vector<Rational>& w1,
                                        const std::vector<Rational>& w2,
                                        const std::vector<Rational>& q);

struct CongestionInstance {
  std::vector<Valuation> players;
  // delays[v][x] = d_v(x) for x = 0..players.size().
  std::vector<std::vector<Rational>> delays;
};

// sum omega_i(X_i) + sum_v x(v) d_v(x(v)).
ExtValue CongestionCost(const CongestionInstance& inst,
                        const std::vector<Subset>& state);
// Throws kInvalidInput unless x d_v(x) is discrete convex for every v.
TupleSolution SolveCongestionSocialOptimum(const CongestionInstance& inst);

// (x+1) d(x+1) - x d(x) nondecreasing over the table.
bool CheckWeakConvexity(const std::vector<Rational>& d);
// x d(x) discrete convex over the table.
bool CheckProductConvexity(const std::vector<Rational>& d);

// Standard congestion model: player i picks a base of its matroid and pays
// c_v(x(v)) on each chosen resource.
struct StandardCongestionModel {
  std::vector<Matroid> strategies;
  // costs[v][x] = c_v(x) for x = 0..players.
  std::vector<std::vector<Rational>> costs;
};
// omega_i(X) = sum_{v in X} c_v(1), d_v(x) = c_v(x) - c_v(1), d_v(0) = 0.
CongestionInstance EmbedStandardModel(const StandardCongestionModel& model);
ExtValue StandardModelCost(const StandardCongestionModel& model,
                           const std::vector<Subset>& state);

}  // namespace valmat

#endif  // VALMAT_APPS_HPP_
