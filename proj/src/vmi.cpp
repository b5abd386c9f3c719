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

#include "valmat/vmi.hpp"

#include <algorithm>

namespace valmat {

namespace {

void RequireTuple(const std::vector<Valuation>& omegas) {
  if (omegas.empty()) ThrowInvalidInput("need at least one valuation");
  for (const auto& o : omegas) {
    RequireSameSize(o.ground_size(), omegas.front().ground_size(),
                    "valuation ground sets");
  }
}

int TotalRank(const std::vector<Valuation>& omegas) {
  int r = 0;
  for (const auto& o : omegas) r += o.rank();
  return r;
}

TupleSolution ToTuple(const IntersectionSolution& sol, std::size_t n,
                      std::size_t m) {
  TupleSolution out;
  out.status = sol.status;
  out.stats = sol.stats;
  if (sol.optimal()) {
    out.sets = SplitCopies(sol.X1, n, m);
    out.value = sol.value;
  }
  return out;
}

TupleSolution SolveLifted(const std::vector<Valuation>& omegas,
                          const Valuation& constraint) {
  const std::size_t n = omegas.size();
  const std::size_t m = omegas.front().ground_size();
  for (const auto& o : omegas) {
    if (!o.has_domain()) return TupleSolution{};
  }
  return ToTuple(SolveVmi(DisjointSum(omegas), constraint), n, m);
}

}  // namespace

IntersectionSolution SolveVmi(const Valuation& omega1, const Valuation& omega2,
                              const ViapOptions& options) {
  RequireSameSize(omega1.ground_size(), omega2.ground_size(),
                  "valuation ground sets");
  if (omega1.rank() != omega2.rank() || !omega1.has_domain() ||
      !omega2.has_domain()) {
    return IntersectionSolution{};
  }
  return SolveVGeqK(omega1, omega2, omega1.rank(), options);
}

TupleSolution SolveVIn(const std::vector<Valuation>& omegas,
                       const Matroid& independence) {
  RequireTuple(omegas);
  RequireSameSize(independence.ground_size(), omegas.front().ground_size(),
                  "independence ground set");
  const int r = TotalRank(omegas);
  return SolveLifted(omegas,
                     IntersectionConstraintValuation(omegas.size(), independence, r));
}

IntersectionSolution SolveVLeqK(const Valuation& omega1,
                                const Valuation& omega2, int k) {
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  const std::size_t m = omega1.ground_size();
  const int cap = std::min(k, static_cast<int>(m));
  const TupleSolution t = SolveVIn({omega1, omega2}, MakeUniform(m, cap));
  IntersectionSolution out;
  out.status = t.status;
  out.stats = t.stats;
  if (t.optimal()) {
    out.X1 = t.sets[0];
    out.X2 = t.sets[1];
    out.value = t.value;
  }
  return out;
}

TupleSolution SolveVnW(const std::vector<Valuation>& omegas,
                       const std::vector<Rational>& w) {
  RequireTuple(omegas);
  RequireSameSize(w.size(), omegas.front().ground_size(), "penalty weights");
  for (const auto& x : w) {
    if (x < 0) {
      ThrowInvalidInput(
          "negative penalty weight; use the flow solver for w <= 0 or brute "
          "force for mixed signs");
    }
  }
  return SolveLifted(omegas,
                     LaminarPenalty(w, omegas.size(), TotalRank(omegas)));
}

TupleSolution SolveSumValuatedPlusLaminar(const std::vector<Valuation>& omegas,
                                          const LaminarSpec& phi) {
  RequireTuple(omegas);
  const std::size_t m = omegas.front().ground_size();
  const auto n = static_cast<std::int64_t>(omegas.size());
  RequireSameSize(phi.ground_size, m, "laminar function ground set");
  LaminarSpec boxed = phi;
  boxed.lower = IntVector(m, 0);
  boxed.upper = IntVector(m, n);
  for (std::size_t v = 0; v < m && phi.lower.size() == m; ++v) {
    boxed.lower[v] = std::max<std::int64_t>(phi.lower[v], 0);
    boxed.upper[v] = std::min<std::int64_t>(phi.upper[v], n);
  }
  ValidateLaminarSpec(boxed);
  const MnatFunction f = LaminarConvexFunction(boxed);
  if (f.BoxVolume() <= 100000 && !CheckMnatExchange(f)) {
    ThrowInvalidInput("laminar function is not M-natural-convex");
  }
  return SolveLifted(omegas,
                     LiftedLaminarValuation(boxed, omegas.size(), TotalRank(omegas)));
}

IntersectionSolution SolveVGeqKViaDual(const Valuation& omega1,
                                       const Valuation& omega2, int k) {
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  const int kd = omega1.rank() - k;
  if (kd < 0) return IntersectionSolution{};
  IntersectionSolution sol = SolveVLeqK(omega1, DualValuation(omega2), kd);
  if (sol.optimal()) {
    sol.X2 = sol.X2.Complement();
    sol.value = omega1.value(sol.X1) + omega2.value(sol.X2);
  }
  return sol;
}

}  // namespace valmat
