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

#include "valmat/reference.hpp"

#include <algorithm>
#include <deque>

#include "valmat/greedy.hpp"
#include "valmat/vmi.hpp"

namespace valmat {

namespace {

struct LptState {
  Subset X1;
  Subset X2;
  LptWitness w;
  int raises = 0;
  int augmentations = 0;
};

// Fewest-arc path over zero-length arcs, or the reachable node set.
struct ZeroSearch {
  std::vector<bool> reached;
  std::optional<std::vector<std::size_t>> path;
};

ZeroSearch SearchZeroPath(const AuxDigraph& g) {
  ZeroSearch r;
  r.reached.assign(g.node_count(), false);
  std::vector<long> parent(g.node_count(), -1);
  std::deque<std::size_t> queue{g.source()};
  r.reached[g.source()] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t ai : g.out(u)) {
      const AuxArc& a = g.arcs()[ai];
      if (a.length != 0 || r.reached[a.to]) continue;
      r.reached[a.to] = true;
      parent[a.to] = static_cast<long>(ai);
      queue.push_back(a.to);
    }
  }
  if (r.reached[g.sink()]) {
    std::vector<std::size_t> path;
    for (std::size_t v = g.sink(); v != g.source();) {
      const auto ai = static_cast<std::size_t>(parent[v]);
      path.push_back(ai);
      v = g.arcs()[ai].from;
    }
    std::reverse(path.begin(), path.end());
    r.path = std::move(path);
  }
  return r;
}

// Runs the primal-dual loop from minimizers (X1, X2) with zero potentials.
// Returns false when the target size is unreachable.
bool RunLpt(LptState& st, const Valuation& omega1, const Valuation& omega2,
            int k) {
  const std::size_t n = omega1.ground_size();
  const int max_rounds = 1000 * static_cast<int>(n + 1) * (k + 1);
  int rounds = 0;
  while (static_cast<int>((st.X1 & st.X2).count()) < k) {
    if (++rounds > max_rounds) ThrowResourceLimit("primal-dual round limit");
    const AuxDigraph g = BuildAuxDigraph(st.X1, st.X2, st.w.q1, st.w.q2,
                                         st.X1 & st.X2, omega1, omega2);
    const ZeroSearch z = SearchZeroPath(g);
    if (z.path) {
      for (std::size_t ai : *z.path) {
        const AuxArc& a = g.arcs()[ai];
        if (a.cls == ArcClass::kA1) {
          st.X1 = st.X1.Exchanged(a.from, a.to);
        } else if (a.cls == ArcClass::kA2) {
          st.X2 = st.X2.Exchanged(a.to - n, a.from - n);
        }
      }
      ++st.augmentations;
      continue;
    }
    std::optional<Rational> delta;
    for (const AuxArc& a : g.arcs()) {
      if (a.cls != ArcClass::kA1 && a.cls != ArcClass::kA2) continue;
      if (!z.reached[a.from] || z.reached[a.to]) continue;
      if (!delta || a.length < *delta) delta = a.length;
    }
    if (!delta) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!z.reached[g.V1(v)]) st.w.q1[v] += *delta;
      if (z.reached[g.V2(v)]) st.w.q2[v] -= *delta;
    }
    st.w.lambda += *delta;
    ++st.raises;
  }
  return true;
}

bool LocalOrGlobalMin(const Valuation& omega, const Subset& x,
                      const std::vector<Rational>& shift,
                      WitnessCheckMode mode) {
  if (mode == WitnessCheckMode::kLocalExchange) {
    return IsLocalMinimum(omega, x, shift);
  }
  const ExtValue fx = omega.value(x);
  if (fx.is_infinite()) return false;
  const Rational base = fx.value() - WeightOf(shift, x);
  for (const auto& y : EnumerateDomain(omega)) {
    if (omega.value(y).value() - WeightOf(shift, y) < base) return false;
  }
  return true;
}

}  // namespace

LptResult LptSolveWEqK(const Matroid& m1, const Matroid& m2,
                       const std::vector<Rational>& w1,
                       const std::vector<Rational>& w2, int k) {
  RequireSameSize(m2.ground_size(), m1.ground_size(), "matroid ground sets");
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  const std::size_t n = m1.ground_size();
  const Valuation omega1 = FromMatroidAndWeights(m1, w1);
  const Valuation omega2 = FromMatroidAndWeights(m2, w2);
  const Subset X1 = MinimizeValuated(omega1).set;
  const Subset X2 = MinimizeValuated(omega2).set;

  const bool dual = static_cast<int>((X1 & X2).count()) > k;
  std::optional<Valuation> dual2;
  int target = k;
  LptState st{X1, X2,
              {std::vector<Rational>(n, Rational(0)),
               std::vector<Rational>(n, Rational(0)), Rational(0)}};
  if (dual) {
    std::vector<Rational> neg(n);
    for (std::size_t v = 0; v < n; ++v) neg[v] = -w2[v];
    dual2 = FromMatroidAndWeights(DualMatroid(m2), neg);
    st.X2 = X2.Complement();
    target = m1.rank() - k;
  }
  const Valuation& second = dual ? *dual2 : omega2;

  LptResult out;
  if (target < 0 || !RunLpt(st, omega1, second, target)) {
    out.raises = st.raises;
    return out;
  }
  out.raises = st.raises;
  if (!LptWitnessCheck(st.X1, st.X2, st.w, omega1, second)) {
    ThrowInternal("primal-dual witness failed");
  }
  IntersectionSolution& sol = out.solution;
  sol.status = Status::kOptimal;
  sol.X1 = st.X1;
  sol.X2 = dual ? st.X2.Complement() : st.X2;
  sol.value = omega1.value(sol.X1) + omega2.value(sol.X2);
  sol.witness = WitnessFromLpt(st.X1, st.X2, st.w);
  sol.frame = dual ? WitnessFrame::kDualSecond : WitnessFrame::kDirect;
  sol.witness_k = target;
  sol.stats.augmentations = st.augmentations;
  out.lpt = st.w;
  return out;
}

bool LptWitnessCheck(const Subset& X1, const Subset& X2,
                     const LptWitness& witness, const Valuation& omega1,
                     const Valuation& omega2, WitnessCheckMode mode) {
  const std::size_t n = omega1.ground_size();
  if (witness.q1.size() != n || witness.q2.size() != n ||
      omega2.ground_size() != n) {
    return false;
  }
  if (witness.lambda < 0) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (witness.q1[v] < 0 || witness.q2[v] > 0) return false;
    if (witness.q1[v] != witness.q2[v] + witness.lambda) return false;
  }
  if (!omega1.InDomain(X1) || !omega2.InDomain(X2)) return false;
  std::vector<Rational> neg2(n);
  for (std::size_t v = 0; v < n; ++v) neg2[v] = -witness.q2[v];
  if (!LocalOrGlobalMin(omega1, X1, witness.q1, mode)) return false;
  if (!LocalOrGlobalMin(omega2, X2, neg2, mode)) return false;
  for (std::size_t v : (X1 - X2).elements()) {
    if (witness.q1[v] != 0) return false;
  }
  for (std::size_t v : (X2 - X1).elements()) {
    if (witness.q2[v] != 0) return false;
  }
  return true;
}

LptWitness ConvertWitness(const Subset& X1, const Subset& X2,
                          const Witness& witness) {
  const std::size_t n = witness.p1.size();
  RequireSameSize(witness.p2.size(), n, "p2");
  if (n == 0) return LptWitness{{}, {}, Rational(0)};
  for (std::size_t v = 0; v < n; ++v) {
    if (witness.p1[v] != witness.p2[v]) ThrowInvalidInput("p1 != p2");
  }
  const Rational min1 = *std::min_element(witness.p1.begin(), witness.p1.end());
  const Rational max2 = *std::max_element(witness.p2.begin(), witness.p2.end());
  if (min1 != 0) ThrowInvalidInput("min p1 is not zero");
  for (std::size_t v : (X1 - X2).elements()) {
    if (witness.p1[v] != min1) ThrowInvalidInput("X1 \\ X2 outside argmin p1");
  }
  for (std::size_t v : (X2 - X1).elements()) {
    if (witness.p2[v] != max2) ThrowInvalidInput("X2 \\ X1 outside argmax p2");
  }
  LptWitness out{witness.p1, witness.p2, max2};
  for (auto& x : out.q2) x -= max2;
  return out;
}

Witness WitnessFromLpt(const Subset& X1, const Subset& X2,
                       const LptWitness& witness) {
  return Witness{witness.q1, witness.q1, X1 & X2};
}

IntersectionSolution AltSolveVEqK(const Valuation& omega1,
                                  const Valuation& omega2, int k) {
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  RequireSameSize(omega2.ground_size(), omega1.ground_size(),
                  "valuation ground sets");
  if (!omega1.has_domain() || !omega2.has_domain()) return {};
  const IntersectionSolution low = SolveVLeqK(omega1, omega2, k);
  const IntersectionSolution high = SolveVGeqK(omega1, omega2, k);
  if (!low.optimal() || !high.optimal()) return {};
  auto meet = [](const Subset& a, const Subset& b) {
    return static_cast<int>((a & b).count());
  };
  if (meet(low.X1, low.X2) == k) return low;
  if (meet(high.X1, high.X2) == k) {
    IntersectionSolution out = high;
    out.witness.reset();
    out.frame = WitnessFrame::kNone;
    return out;
  }
  // Moves `from` toward `to` inside the minimizer family of omega until the
  // intersection with `fixed` reaches k.
  auto walk = [k, &meet](const Valuation& omega, Subset cur, const Subset& to,
                         const Subset& fixed) -> std::optional<Subset> {
    const ExtValue best = omega.value(cur);
    while (true) {
      if (meet(cur, fixed) == k) return cur;
      const Subset in = to - cur;
      if (in.empty()) return std::nullopt;
      const std::size_t v = in.elements().front();
      std::optional<Subset> next;
      for (std::size_t u : (cur - to).elements()) {
        const Subset y = cur.Exchanged(u, v);
        if (omega.value(y) == best) {
          next = y;
          break;
        }
      }
      if (!next) ThrowInternal("minimizer family lacks an exchange step");
      if (std::abs(meet(*next, fixed) - meet(cur, fixed)) > 1) {
        ThrowInternal("exchange step moved the intersection by more than one");
      }
      cur = *next;
    }
  };
  IntersectionSolution out;
  if (auto x1 = walk(omega1, low.X1, high.X1, low.X2)) {
    out.X1 = *x1;
    out.X2 = low.X2;
  } else if (auto x2 = walk(omega2, low.X2, high.X2, high.X1)) {
    out.X1 = high.X1;
    out.X2 = *x2;
  } else {
    ThrowInternal("no exact-k pair between the boundary solutions");
  }
  out.status = Status::kOptimal;
  out.value = omega1.value(out.X1) + omega2.value(out.X2);
  return out;
}

}  // namespace valmat
