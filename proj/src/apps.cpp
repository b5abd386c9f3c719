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

#include "valmat/apps.hpp"

namespace valmat {

void ValidateInterval(const IntervalUncertainty& unc, std::size_t n) {
  RequireSameSize(unc.lower.size(), n, "interval lower bound");
  RequireSameSize(unc.upper.size(), n, "interval upper bound");
  for (std::size_t v = 0; v < n; ++v) {
    if (unc.lower[v] > unc.upper[v]) ThrowInvalidInput("interval has lower > upper");
  }
}

IntersectionSolution SolveRecoverableRobustInterval(
    const Valuation& omega1, const Matroid& m, const IntervalUncertainty& unc,
    int k) {
  RequireSameSize(omega1.ground_size(), m.ground_size(),
                  "first stage ground set");
  ValidateInterval(unc, m.ground_size());
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  if (!omega1.has_domain()) return IntersectionSolution{};
  // The second stage cost is monotone in w, so the adversary plays the
  // upper bound.
  return SolveVGeqK(omega1, FromMatroidAndWeights(m, unc.upper), k);
}

MSolution SolveRecoverableRobustMConvex(const MnatFunction& f1,
                                        const MnatFunction& f2,
                                        const IntervalUncertainty& unc, int k) {
  ValidateInterval(unc, f2.dimension());
  return SolveMGeqKW(f1, AddLinear(f2, unc.upper), k,
                     std::vector<Rational>(f1.dimension(), Rational(0)));
}

IntersectionSolution SolveVC(const Valuation& omega1, const Valuation& omega2,
                             const UnivariateTable& c) {
  RequireSameSize(omega2.ground_size(), omega1.ground_size(),
                  "valuation ground sets");
  IntersectionSolution best;
  if (!omega1.has_domain() || !omega2.has_domain()) return best;
  const auto all = SolveAllK(omega1, omega2);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (!all[k].optimal()) continue;
    const ExtValue total = all[k].value + c(static_cast<std::int64_t>(k));
    if (total.is_infinite()) continue;
    if (!best.optimal() || total < best.value) {
      best = all[k];
      best.value = total;
    }
  }
  return best;
}

IntersectionSolution SolveCopicDiagonal(const Matroid& m1, const Matroid& m2,
                                        const std::vector<Rational>& w1,
                                        const std::vector<Rational>& w2,
                                        const std::vector<Rational>& q) {
  RequireSameSize(m2.ground_size(), m1.ground_size(), "matroid ground sets");
  RequireSameSize(q.size(), m1.ground_size(), "q");
  bool nonneg = true;
  bool nonpos = true;
  for (const auto& x : q) {
    nonneg = nonneg && x >= 0;
    nonpos = nonpos && x <= 0;
  }
  const Valuation omega1 = FromMatroidAndWeights(m1, w1);
  const Valuation omega2 = FromMatroidAndWeights(m2, w2);
  IntersectionSolution out;
  if (nonneg) {
    const TupleSolution t = SolveVnW({omega1, omega2}, q);
    out.status = t.status;
    out.stats = t.stats;
    if (t.optimal()) {
      out.X1 = t.sets[0];
      out.X2 = t.sets[1];
      out.value = t.value;
    }
    return out;
  }
  if (!nonpos) {
    ThrowInvalidInput("q mixes signs; only brute force covers that case");
  }
  const MSolution s = SolveMGeqKW(ValuationAsFunction(omega1),
                                  ValuationAsFunction(omega2), 0, q);
  out.status = s.status;
  if (s.status == Status::kOptimal) {
    out.X1 = VectorToSubset(s.x1);
    out.X2 = VectorToSubset(s.x2);
    out.value = s.value;
  }
  return out;
}

namespace {

void ValidateCongestion(const CongestionInstance& inst) {
  if (inst.players.empty()) ThrowInvalidInput("need at least one player");
  const std::size_t m = inst.players.front().ground_size();
  for (const auto& p : inst.players) {
    RequireSameSize(p.ground_size(), m, "player ground sets");
  }
  RequireSameSize(inst.delays.size(), m, "delay tables");
  for (const auto& d : inst.delays) {
    if (d.size() < inst.players.size() + 1) {
      ThrowInvalidInput("delay table shorter than the player count");
    }
    for (std::size_t x = 0; x < d.size(); ++x) {
      if (d[x] < 0) ThrowInvalidInput("negative delay");
      if (x > 0 && d[x] < d[x - 1]) ThrowInvalidInput("delay decreases");
    }
  }
}

}  // namespace

ExtValue CongestionCost(const CongestionInstance& inst,
                        const std::vector<Subset>& state) {
  RequireSameSize(state.size(), inst.players.size(), "state");
  ExtValue total;
  for (std::size_t i = 0; i < state.size(); ++i) {
    total += inst.players[i].value(state[i]);
  }
  if (total.is_infinite()) return total;
  const std::size_t m = inst.delays.size();
  Rational load_cost = 0;
  for (std::size_t v = 0; v < m; ++v) {
    long x = 0;
    for (const auto& s : state) x += s.contains(v) ? 1 : 0;
    load_cost += x * inst.delays[v][static_cast<std::size_t>(x)];
  }
  return total + ExtValue(load_cost);
}

TupleSolution SolveCongestionSocialOptimum(const CongestionInstance& inst) {
  ValidateCongestion(inst);
  const std::size_t m = inst.delays.size();
  const std::size_t n = inst.players.size();
  LaminarSpec phi;
  phi.ground_size = m;
  phi.lower = IntVector(m, 0);
  phi.upper = IntVector(m, static_cast<std::int64_t>(n));
  for (std::size_t v = 0; v < m; ++v) {
    if (!CheckProductConvexity(inst.delays[v])) {
      ThrowInvalidInput("x d(x) is not discrete convex");
    }
    std::vector<ExtValue> g;
    for (std::size_t x = 0; x <= n; ++x) {
      g.emplace_back(Rational(static_cast<long>(x)) * inst.delays[v][x]);
    }
    Subset single(m);
    single.insert(v);
    phi.members.push_back({single, UnivariateTable(0, std::move(g))});
  }
  return SolveSumValuatedPlusLaminar(inst.players, phi);
}

bool CheckWeakConvexity(const std::vector<Rational>& d) {
  for (std::size_t x = 0; x + 2 < d.size(); ++x) {
    const Rational lo = Rational(static_cast<long>(x + 1)) * d[x + 1] -
                        Rational(static_cast<long>(x)) * d[x];
    const Rational hi = Rational(static_cast<long>(x + 2)) * d[x + 2] -
                        Rational(static_cast<long>(x + 1)) * d[x + 1];
    if (hi < lo) return false;
  }
  return true;
}

bool CheckProductConvexity(const std::vector<Rational>& d) {
  std::vector<ExtValue> g;
  for (std::size_t x = 0; x < d.size(); ++x) {
    g.emplace_back(Rational(static_cast<long>(x)) * d[x]);
  }
  return UnivariateTable(0, std::move(g)).IsDiscreteConvex();
}

CongestionInstance EmbedStandardModel(const StandardCongestionModel& model) {
  if (model.strategies.empty()) ThrowInvalidInput("need at least one player");
  const std::size_t m = model.strategies.front().ground_size();
  const std::size_t n = model.strategies.size();
  RequireSameSize(model.costs.size(), m, "cost tables");
  std::vector<Rational> unit(m);
  CongestionInstance inst;
  for (std::size_t v = 0; v < m; ++v) {
    const auto& c = model.costs[v];
    if (c.size() < n + 1) ThrowInvalidInput("cost table shorter than the player count");
    unit[v] = c[1];
    std::vector<Rational> d(c.size(), Rational(0));
    for (std::size_t x = 1; x < c.size(); ++x) d[x] = c[x] - c[1];
    inst.delays.push_back(std::move(d));
  }
  for (const auto& s : model.strategies) {
    RequireSameSize(s.ground_size(), m, "strategy ground set");
    inst.players.push_back(FromMatroidAndWeights(s, unit));
  }
  return inst;
}

ExtValue StandardModelCost(const StandardCongestionModel& model,
                           const std::vector<Subset>& state) {
  RequireSameSize(state.size(), model.strategies.size(), "state");
  const std::size_t m = model.costs.size();
  std::vector<std::size_t> load(m, 0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!model.strategies[i].IsBase(state[i])) return ExtValue::Infinity();
    for (std::size_t v : state[i].elements()) ++load[v];
  }
  Rational total = 0;
  for (const auto& s : state) {
    for (std::size_t v : s.elements()) total += model.costs[v][load[v]];
  }
  return total;
}

}  // namespace valmat
