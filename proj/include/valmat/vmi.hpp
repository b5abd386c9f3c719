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

// Valuated matroid intersection and the tuple problems that reduce to it.

#ifndef VALMAT_VMI_HPP_
#define VALMAT_VMI_HPP_

#include <vector>

#include "valmat/viap.hpp"

namespace valmat {

struct TupleSolution {
  Status status = Status::kInfeasible;
  std::vector<Subset> sets;
  ExtValue value = ExtValue::Infinity();
  SolveStats stats;

  bool optimal() const { return status == Status::kOptimal; }
};

// min omega1(X) + omega2(X). Unequal ranks give an infeasible result.
IntersectionSolution SolveVmi(const Valuation& omega1, const Valuation& omega2,
                              const ViapOptions& options = {});

// min sum omega_i(X_i) s.t. the intersection of the X_i is independent in
// `independence`.
TupleSolution SolveVIn(const std::vector<Valuation>& omegas,
                       const Matroid& independence);

// min omega1(X1) + omega2(X2) s.t. |X1 & X2| <= k.
IntersectionSolution SolveVLeqK(const Valuation& omega1,
                                const Valuation& omega2, int k);

// min sum omega_i(X_i) + w(intersection of the X_i), for w >= 0.
TupleSolution SolveVnW(const std::vector<Valuation>& omegas,
                       const std::vector<Rational>& w);

// min sum omega_i(X_i) + phi(x), x(v) = |{i : v in X_i}|, for a laminar convex
// phi given on the original ground set.
TupleSolution SolveSumValuatedPlusLaminar(const std::vector<Valuation>& omegas,
                                          const LaminarSpec& phi);

// The >= k problem through the <= r1 - k problem against the dual of omega2.
// Carries no witness; for cross-checking.
IntersectionSolution SolveVGeqKViaDual(const Valuation& omega1,
                                       const Valuation& omega2, int k);

}  // namespace valmat

#endif  // VALMAT_VMI_HPP_
