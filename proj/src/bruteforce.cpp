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

#include "valmat/bruteforce.hpp"

#include <functional>

namespace valmat {

namespace {

using TupleCost = std::function<ExtValue(const std::vector<Subset>&)>;

// Scans the product of the lists in lexicographic order, first list most
// significant; keeps the first strict minimum.
TupleSolution ScanProduct(const std::vector<std::vector<Subset>>& lists,
                          std::uint64_t limit, const TupleCost& cost) {
  std::uint64_t total = 1;
  for (const auto& l : lists) {
    if (l.empty()) return TupleSolution{};
    if (total > limit / l.size()) ThrowResourceLimit("brute-force product too large");
    total *= l.size();
  }
  TupleSolution best;
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<Subset> cur(lists.size());
  while (true) {
    for (std::size_t i = 0; i < lists.size(); ++i) cur[i] = lists[i][idx[i]];
    const ExtValue c = cost(cur);
    if (c.is_finite() && (!best.optimal() || c < best.value)) {
      best.status = Status::kOptimal;
      best.sets = cur;
      best.value = c;
    }
    std::size_t i = lists.size();
    while (i > 0 && ++idx[i - 1] == lists[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return best;
}

std::vector<std::vector<Subset>> Domains(const std::vector<Valuation>& omegas) {
  std::vector<std::vector<Subset>> out;
  for (const auto& o : omegas) out.push_back(EnumerateDomain(o));
  return out;
}

IntersectionSolution ToPair(const TupleSolution& t) {
  IntersectionSolution out;
  out.status = t.status;
  if (t.optimal()) {
    out.X1 = t.sets[0];
    out.X2 = t.sets[1];
    out.value = t.value;
  }
  return out;
}

IntersectionSolution BrutePair(
    const Valuation& omega1, const Valuation& omega2, std::uint64_t limit,
    const std::function<bool(std::size_t)>& accept) {
  RequireSameSize(omega2.ground_size(), omega1.ground_size(),
                  "valuation ground sets");
  return ToPair(ScanProduct(
      Domains({omega1, omega2}), limit, [&](const std::vector<Subset>& x) {
        if (!accept(IntersectionCardinality(x[0], x[1]))) {
          return ExtValue::Infinity();
        }
        return omega1.value(x[0]) + omega2.value(x[1]);
      }));
}

Subset Intersection(const std::vector<Subset>& sets) {
  Subset out = sets.front();
  for (const auto& s : sets) out &= s;
  return out;
}

}  // namespace

IntersectionSolution BruteVGeqK(const Valuation& omega1,
                                const Valuation& omega2, int k,
                                std::uint64_t limit) {
  return BrutePair(omega1, omega2, limit,
                   [k](std::size_t c) { return static_cast<int>(c) >= k; });
}

IntersectionSolution BruteVEqK(const Valuation& omega1,
                               const Valuation& omega2, int k,
                               std::uint64_t limit) {
  return BrutePair(omega1, omega2, limit,
                   [k](std::size_t c) { return static_cast<int>(c) == k; });
}

IntersectionSolution BruteVLeqK(const Valuation& omega1,
                                const Valuation& omega2, int k,
                                std::uint64_t limit) {
  return BrutePair(omega1, omega2, limit,
                   [k](std::size_t c) { return static_cast<int>(c) <= k; });
}

IntersectionSolution BruteVC(const Valuation& omega1, const Valuation& omega2,
                             const UnivariateTable& c, std::uint64_t limit) {
  RequireSameSize(omega2.ground_size(), omega1.ground_size(),
                  "valuation ground sets");
  return ToPair(ScanProduct(
      Domains({omega1, omega2}), limit, [&](const std::vector<Subset>& x) {
        const auto j = static_cast<std::int64_t>(
            IntersectionCardinality(x[0], x[1]));
        return omega1.value(x[0]) + omega2.value(x[1]) + c(j);
      }));
}

TupleSolution BruteVIn(const std::vector<Valuation>& omegas,
                       const Matroid& independence, std::uint64_t limit) {
  if (omegas.empty()) ThrowInvalidInput("need at least one valuation");
  return ScanProduct(Domains(omegas), limit,
                     [&](const std::vector<Subset>& x) -> ExtValue {
                       if (!independence.IsIndependent(Intersection(x))) {
                         return ExtValue::Infinity();
                       }
                       ExtValue total;
                       for (std::size_t i = 0; i < x.size(); ++i) {
                         total += omegas[i].value(x[i]);
                       }
                       return total;
                     });
}

TupleSolution BruteVnW(const std::vector<Valuation>& omegas,
                       const std::vector<Rational>& w, std::uint64_t limit) {
  if (omegas.empty()) ThrowInvalidInput("need at least one valuation");
  RequireSameSize(w.size(), omegas.front().ground_size(), "penalty weights");
  return ScanProduct(Domains(omegas), limit,
                     [&](const std::vector<Subset>& x) {
                       ExtValue total(WeightOf(w, Intersection(x)));
                       for (std::size_t i = 0; i < x.size(); ++i) {
                         total += omegas[i].value(x[i]);
                       }
                       return total;
                     });
}

MSolution BruteMGeqKW(const MnatFunction& f1, const MnatFunction& f2, int k,
                      const std::vector<Rational>& w, std::uint64_t limit) {
  RequireSameSize(f2.dimension(), f1.dimension(), "second function");
  RequireSameSize(w.size(), f1.dimension(), "weights");
  const auto d1 = EnumerateFunctionDomain(f1, limit);
  const auto d2 = EnumerateFunctionDomain(f2, limit);
  if (!d1.empty() && d2.size() > limit / d1.size()) {
    ThrowResourceLimit("brute-force product too large");
  }
  MSolution best;
  for (const auto& x1 : d1) {
    for (const auto& x2 : d2) {
      std::int64_t common = 0;
      for (std::size_t v = 0; v < x1.size(); ++v) {
        common += std::min(x1[v], x2[v]);
      }
      if (common < k) continue;
      const ExtValue c = MgeqkObjective(f1, f2, w, x1, x2);
      if (c.is_finite() && (best.status != Status::kOptimal || c < best.value)) {
        best.status = Status::kOptimal;
        best.x1 = x1;
        best.x2 = x2;
        best.value = c;
      }
    }
  }
  return best;
}

TupleSolution BruteCongestion(const CongestionInstance& inst,
                              std::uint64_t limit) {
  if (inst.players.empty()) ThrowInvalidInput("need at least one player");
  return ScanProduct(Domains(inst.players), limit,
                     [&](const std::vector<Subset>& x) {
                       return CongestionCost(inst, x);
                     });
}

IntersectionSolution BruteCopic(const Matroid& m1, const Matroid& m2,
                                const std::vector<Rational>& w1,
                                const std::vector<Rational>& w2,
                                const std::vector<Rational>& q,
                                std::uint64_t limit) {
  RequireSameSize(m2.ground_size(), m1.ground_size(), "matroid ground sets");
  RequireSameSize(w1.size(), m1.ground_size(), "w1");
  RequireSameSize(w2.size(), m1.ground_size(), "w2");
  RequireSameSize(q.size(), m1.ground_size(), "q");
  return ToPair(ScanProduct(
      {EnumerateBases(m1), EnumerateBases(m2)}, limit,
      [&](const std::vector<Subset>& x) {
        return ExtValue(WeightOf(w1, x[0]) + WeightOf(w2, x[1]) +
                        WeightOf(q, x[0] & x[1]));
      }));
}

IntersectionSolution BruteRecoverableRobust(const Valuation& omega1,
                                            const Matroid& m,
                                            const IntervalUncertainty& unc,
                                            int k, std::uint64_t limit) {
  const std::size_t n = m.ground_size();
  RequireSameSize(omega1.ground_size(), n, "first stage ground set");
  ValidateInterval(unc, n);
  if (n > 20) ThrowResourceLimit("too many interval corners");
  const auto first = EnumerateDomain(omega1);
  const auto second = EnumerateBases(m);
  const std::uint64_t corners = std::uint64_t{1} << n;
  if (!first.empty() && !second.empty() &&
      corners > limit / first.size() / second.size()) {
    ThrowResourceLimit("brute-force product too large");
  }
  IntersectionSolution best;
  std::vector<Rational> w(n);
  for (const auto& x1 : first) {
    // The adversary's best corner, and the recovery it forces.
    std::optional<Rational> worst;
    Subset worst_x2;
    for (std::uint64_t mask = 0; mask < corners; ++mask) {
      for (std::size_t v = 0; v < n; ++v) {
        w[v] = ((mask >> v) & 1u) ? unc.upper[v] : unc.lower[v];
      }
      std::optional<Rational> inner;
      Subset inner_x2;
      for (const auto& x2 : second) {
        if (static_cast<int>(IntersectionCardinality(x1, x2)) < k) continue;
        Rational c = WeightOf(w, x2);
        if (!inner || c < *inner) {
          inner = std::move(c);
          inner_x2 = x2;
        }
      }
      if (!inner) break;
      if (!worst || *inner > *worst) {
        worst = inner;
        worst_x2 = inner_x2;
      }
    }
    if (!worst) continue;
    const ExtValue total = omega1.value(x1) + ExtValue(*worst);
    if (!best.optimal() || total < best.value) {
      best.status = Status::kOptimal;
      best.X1 = x1;
      best.X2 = worst_x2;
      best.value = total;
    }
  }
  return best;
}

Subset BruteThreeMatroidIntersection(const Matroid& m1, const Matroid& m2,
                                     const Matroid& m3, std::size_t limit) {
  const std::size_t n = m1.ground_size();
  RequireSameSize(m2.ground_size(), n, "second matroid");
  RequireSameSize(m3.ground_size(), n, "third matroid");
  if (n > limit) ThrowResourceLimit("ground set too large");
  std::optional<Subset> found;
  for (std::size_t r = n + 1; r-- > 0 && !found;) {
    ForEachSubsetOfSize(n, r, [&](const Subset& x) {
      if (m1.IsIndependent(x) && m2.IsIndependent(x) && m3.IsIndependent(x)) {
        found = x;
        return false;
      }
      return true;
    });
  }
  return *found;
}

}  // namespace valmat
