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

// Seeded random instances for tests and the command-line generator.

#ifndef VALMAT_GENERATE_HPP_
#define VALMAT_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "valmat/valuated.hpp"

namespace valmat {

using Rng = std::mt19937_64;

// Uniform on [lo, hi] by modulo reduction; deterministic across platforms.
std::int64_t RandomInt(Rng& rng, std::int64_t lo, std::int64_t hi);
// p/q with q in [1, max_den], clamped to [lo, hi].
Rational RandomRational(Rng& rng, std::int64_t lo, std::int64_t hi,
                        std::int64_t max_den = 4);
std::vector<Rational> RandomWeights(Rng& rng, std::size_t n, std::int64_t lo,
                                    std::int64_t hi, std::int64_t max_den = 4);

enum class MatroidKind { kUniform, kPartition, kGraphic, kLinear };

Matroid RandomMatroid(Rng& rng, MatroidKind kind, std::size_t n, int max_rank);
// Kind drawn uniformly.
Matroid RandomMatroid(Rng& rng, std::size_t n, int max_rank);
Matroid RandomUniformOrPartition(Rng& rng, std::size_t n, int max_rank);

// Convex on [lo, hi] with rational values; +inf outside.
UnivariateTable RandomConvexTable(Rng& rng, std::int64_t lo, std::int64_t hi,
                                  std::int64_t slope_range = 5);
// Random laminar family over n elements with convex tables; the box is
// [0, box_hi]^n.
LaminarSpec RandomLaminarSpec(Rng& rng, std::size_t n, std::int64_t box_hi);

// A modular valuation on a random matroid, or the rank-r restriction of a
// random laminar convex function on {0,1}^n. Always has a nonempty domain.
Valuation RandomValuation(Rng& rng, std::size_t n, int max_rank);
// Restriction of a random laminar convex function on [0, box_hi]^n to a
// hyperplane level; nonempty domain.
MnatFunction RandomMConvex(Rng& rng, std::size_t n, std::int64_t box_hi);

}  // namespace valmat

#endif  // VALMAT_GENERATE_HPP_
