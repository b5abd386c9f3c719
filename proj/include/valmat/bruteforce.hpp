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

// Exhaustive oracles. Ties go to the lexicographically smallest tuple.

#ifndef VALMAT_BRUTEFORCE_HPP_
#define VALMAT_BRUTEFORCE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "valmat/apps.hpp"

namespace valmat {

inline constexpr std::uint64_t kDefaultBruteLimit = 1000000;

IntersectionSolution BruteVGeqK(const Valuation& omega1,
                                const Valuation& omega2, int k,
                                std::uint64_t limit = kDefaultBruteLimit);
IntersectionSolution BruteVEqK(const Valuation& omega1,
                               const Valuation& omega2, int k,
                               std::uint64_t limit = kDefaultBruteLimit);
IntersectionSolution BruteVLeqK(const Valuation& omega1,
                                const Valuation& omega2, int k,
                                std::uint64_t limit = kDefaultBruteLimit);
IntersectionSolution BruteVC(const Valuation& omega1, const Valuation& omega2,
                             const UnivariateTable& c,
                             std::uint64_t limit = kDefaultBruteLimit);

TupleSolution BruteVIn(const std::vector<Valuation>& omegas,
                       const Matroid& independence,
                       std::uint64_t limit = kDefaultBruteLimit);
// Any sign of w.
TupleSolution BruteVnW(const std::vector<Valuation>& omegas,
                       const std::vector<Rational>& w,
                       std::uint64_t limit = kDefaultBruteLimit);
// Any sign of w.
MSolution BruteMGeqKW(const MnatFunction& f1, const MnatFunction& f2, int k,
                      const std::vector<Rational>& w,
                      std::uint64_t limit = kDefaultBruteLimit);

TupleSolution BruteCongestion(const CongestionInstance& inst,
                              std::uint64_t limit = kDefaultBruteLimit);
// Any sign of q.
IntersectionSolution BruteCopic(const Matroid& m1, const Matroid& m2,
                                const std::vector<Rational>& w1,
                                const std::vector<Rational>& w2,
                                const std::vector<Rational>& q,
                                std::uint64_t limit = kDefaultBruteLimit);
// The adversary ranges over every corner of the interval box.
IntersectionSolution BruteRecoverableRobust(
    const Valuation& omega1, const Matroid& m, const IntervalUncertainty& unc,
    int k, std::uint64_t limit = kDefaultBruteLimit);

// A maximum common independent set of three matroids.
Subset BruteThreeMatroidIntersection(const Matroid& m1, const Matroid& m2,
                                     const Matroid& m3,
                                     std::size_t limit = 20);

}  // namespace valmat

#endif  // VALMAT_BRUTEFORCE_HPP_
