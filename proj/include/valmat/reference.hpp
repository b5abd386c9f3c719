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

// Independent reference solvers for the exact-k problem, used for
// cross-validation: a primal-dual method with zero-length augmentations and
// a walk through minimizer families.

#ifndef VALMAT_REFERENCE_HPP_
#define VALMAT_REFERENCE_HPP_

#include <optional>
#include <vector>

#include "valmat/viap.hpp"

namespace valmat {

// q1 >= 0, q2 <= 0, lambda >= 0 with q1 = q2 + lambda.
struct LptWitness {
  std::vector<Rational> q1;
  std::vector<Rational> q2;
  Rational lambda;
};

struct LptResult {
  // `solution.witness` holds the equivalent (p1, p2, F) form.
  IntersectionSolution solution;
  std::optional<LptWitness> lpt;
  int raises = 0;
};

// min w1(X1) + w2(X2) over bases with |X1 & X2| = k. When the minimizers
// already meet in more than k elements, the witness is for (X1, V \ X2)
// against the dual of m2 with weights -w2.
LptResult LptSolveWEqK(const Matroid& m1, const Matroid& m2,
                       const std::vector<Rational>& w1,
                       const std::vector<Rational>& w2, int k);

// Sign conditions, q1 = q2 + lambda, X1 minimizes omega1 - q1, X2 minimizes
// omega2 + q2, q1 = 0 on X1 \ X2 and q2 = 0 on X2 \ X1.
bool LptWitnessCheck(const Subset& X1, const Subset& X2,
                     const LptWitness& witness, const Valuation& omega1,
                     const Valuation& omega2,
                     WitnessCheckMode mode = WitnessCheckMode::kLocalExchange);

// q1 = p1, lambda = max p2, q2 = p2 - lambda. Throws kInvalidInput unless
// p1 = p2, min p1 = 0, X1 \ X2 is inside argmin p1 and X2 \ X1 inside
// argmax p2.
LptWitness ConvertWitness(const Subset& X1, const Subset& X2,
                          const Witness& witness);
// p1 = p2 = q1 with F = X1 & X2.
Witness WitnessFromLpt(const Subset& X1, const Subset& X2,
                       const LptWitness& witness);

// Solves the <= k and >= k problems and, when neither meets exactly k elements,
// walks between their minimizers one exchange at a time.
IntersectionSolution AltSolveVEqK(const Valuation& omega1,
                                  const Valuation& omega2, int k);

}  // namespace valmat

#endif  // VALMAT_REFERENCE_HPP_
