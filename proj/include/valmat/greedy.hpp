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

// Global minimization of one valuated matroid.

#ifndef VALMAT_GREEDY_HPP_
#define VALMAT_GREEDY_HPP_

#include <utility>
#include <vector>

#include "valmat/valuated.hpp"

namespace valmat {

struct Minimizer {
  Subset set;
  ExtValue value;
};

// Steepest single-exchange descent from the witness base. Ties go to the
// smallest (out, in) index pair.
Minimizer MinimizeValuated(const Valuation& omega);
// Same, starting from `start`, which must be in the domain.
Minimizer MinimizeValuatedFrom(const Valuation& omega, const Subset& start);

// True when no single exchange X - u + v lowers omega(X) - <p, X>.
bool IsLocalMinimum(const Valuation& omega, const Subset& x,
                    const std::vector<Rational>& shift);

// Every minimizer, in lexicographic order.
std::vector<Subset> MinimizerFamily(const Valuation& omega,
                                    std::size_t limit = kDefaultBruteForceGround);

}  // namespace valmat

#endif  // VALMAT_GREEDY_HPP_
