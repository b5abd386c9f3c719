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

#include "valmat/viap.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "valmat/greedy.hpp"

namespace valmat {

void AuxDigraph::AddArc(AuxArc arc) {
  out_[arc.from].push_back(arcs_.size());
  arcs_.push_back(std::move(arc));
}

std::size_t AuxDigraph::Count(ArcClass cls) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(),
                    [cls](const AuxArc& a) { return a.cls == cls; }));
}

AuxDigraph BuildAuxDigraph(const Subset& X1, const Subset& X2,
                           const std::vector<Rational>& p1,
                           const std::vector<Rational>& p2, const Subset& F,
                           const Valuation& omega1, const Valuation& omega2) {
  const std::size_t n = omega1.ground_size();
  RequireSameSize(omega2.ground_size(), n, "second valuation");
  RequireSameSize(p1.size(), n, "p1");
  RequireSameSize(p2.size(), n, "p2");
  AuxDigraph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.AddArc({g.V1(v), g.V2(v), ArcClass::kE, 0});
  }
  for (std::size_t v : F.elements()) {
    g.AddArc({g.V2(v), g.V1(v), ArcClass::kF, 0});
  }
  const ExtValue f1 = omega1.value(X1);
  const ExtValue f2 = omega2.value(X2);
  if (f1.is_infinite() || f2.is_infinite()) {
    ThrowInternal("auxiliary digraph built outside the domains");
  }
  for (std::size_t u : X1.elements()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (X1.contains(v)) continue;
      const ExtValue f = omega1.value(X1.Exchanged(u, v));
      if (f.is_infinite()) continue;
      Rational len = f.value() - f1.value() - p1[v] + p1[u];
      if (len < 0) ThrowInternal("negative A1 arc length");
      g.AddArc({g.V1(u), g.V1(v), ArcClass::kA1, std::move(len)});
    }
  }
  for (std::size_t u : X2.elements()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (X2.contains(v)) continue;
      const ExtValue f = omega2.value(X2.Exchanged(u, v));
      if (f.is_infinite()) continue;
      Rational len = f.value() - f2.value() + p2[v] - p2[u];
      if (len < 0) ThrowInternal("negative A2 arc length");
      g.AddArc({g.V2(v), g.V2(u), ArcClass::kA2, std::move(len)});
    }
  }
  for (std::size_t v : (X1 - X2).elements()) {
    g.AddArc({g.source(), g.V1(v), ArcClass::kS, 0});
  }
  for (std::size_t v : (X2 - X1).elements()) {
    g.AddArc({g.V2(v), g.sink(), ArcClass::kT, 0});
  }
  return g;
}

PathResult ShortestPathWithHopTiebreak(const AuxDigraph& g) {
  const std::size_t nodes = g.node_count();
  PathResult r;
  r.dist.assign(nodes, ExtValue::Infinity());
  r.hops.assign(nodes, -1);
  r.parent_arc.assign(nodes, -1);
  struct Label {
    Rational dist;
    int hops;
    std::size_t node;
  };
  auto worse = [](const Label& a, const Label& b) {
    if (a.dist != b.dist) return a.dist > b.dist;
    if (a.hops != b.hops) return a.hops > b.hops;
    return a.node > b.node;
  };
  std::priority_queue<Label, std::vector<Label>, decltype(worse)> heap(worse);
  std::vector<bool> done(nodes, false);
  r.dist[g.source()] = ExtValue(0);
  r.hops[g.source()] = 0;
  heap.push({0, 0, g.source()});
  while (!heap.empty()) {
    Label top = heap.top();
    heap.pop();
    if (done[top.node]) continue;
    done[top.node] = true;
    for (std::size_t ai : g.out(top.node)) {
      const AuxArc& a = g.arcs()[ai];
      if (done[a.to]) continue;
      Rational nd = top.dist + a.length;
      const int nh = top.hops + 1;
      const ExtValue& cur = r.dist[a.to];
      if (cur.is_infinite() || nd < cur.value() ||
          (nd == cur.value() && nh < r.hops[a.to])) {
        r.dist[a.to] = ExtValue(nd);
        r.hops[a.to] = nh;
        r.parent_arc[a.to] = static_cast<int>(ai);
        heap.push({std::move(nd), nh, a.to});
      }
    }
  }
  if (r.dist[g.sink()].is_finite()) {
    std::vector<std::size_t> path;
    for (std::size_t v = g.sink(); v != g.source();) {
      const auto ai = static_cast<std::size_t>(r.parent_arc[v]);
      path.push_back(ai);
      v = g.arcs()[ai].from;
    }
    std::reverse(path.begin(), path.end());
    r.path = std::move(path);
  }
  return r;
}

bool AugmentStep(ViapState& state, const Valuation& omega1,
                 const Valuation& omega2) {
  const std::size_t n = omega1.ground_size();
  const Subset F = state.X1 & state.X2;
  const AuxDigraph g = BuildAuxDigraph(state.X1, state.X2, state.p1, state.p2,
                                       F, omega1, omega2);
  const PathResult sp = ShortestPathWithHopTiebreak(g);
  if (!sp.path) return false;
  const Rational dt = sp.dist[g.sink()].value();
  auto capped = [&](std::size_t node) {
    const ExtValue& d = sp.dist[node];
    return d.is_finite() && d.value() < dt ? d.value() : dt;
  };
  for (std::size_t v = 0; v < n; ++v) {
    state.p1[v] += capped(g.V1(v));
    state.p2[v] += capped(g.V2(v));
  }
  for (std::size_t ai : *sp.path) {
    const AuxArc& a = g.arcs()[ai];
    if (a.cls == ArcClass::kA1) {
      state.X1 = state.X1.Exchanged(a.from, a.to);
    } else if (a.cls == ArcClass::kA2) {
      // Arc (v2, u2): v enters X2, u leaves.
      state.X2 = state.X2.Exchanged(a.to - n, a.from - n);
    }
  }
  if (!omega1.InDomain(state.X1) || !omega2.InDomain(state.X2)) {
    ThrowInternal("augmentation left the effective domain");
  }
  return true;
}

namespace {

std::vector<Rational> Negated(const std::vector<Rational>& p) {
  std::vector<Rational> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = -p[i];
  return out;
}

bool IsGlobalMinimum(const Valuation& omega, const Subset& x,
                     const std::vector<Rational>& shift) {
  const ExtValue fx = omega.value(x);
  if (fx.is_infinite()) return false;
  const Rational base = fx.value() - WeightOf(shift, x);
  for (const auto& y : EnumerateDomain(omega)) {
    if (omega.value(y).value() - WeightOf(shift, y) < base) return false;
  }
  return true;
}

// Sums the query counters of both oracles without double counting a shared
// one.
std::uint64_t Calls(const Valuation& a, const Valuation& b) {
  return a.SameOracle(b) ? a.query_count() : a.query_count() + b.query_count();
}

class CallMeter {
 public:
  CallMeter(const Valuation& a, const Valuation& b)
      : a_(a), b_(b), start_(Calls(a, b)) {}
  // Work done inside `fn` is not charged.
  template <typename Fn>
  auto Exclude(Fn&& fn) {
    const std::uint64_t before = Calls(a_, b_);
    struct Restore {
      CallMeter* self;
      std::uint64_t before;
      ~Restore() { self->excluded_ += Calls(self->a_, self->b_) - before; }
    } restore{this, before};
    return fn();
  }
  std::uint64_t charged() const { return Calls(a_, b_) - start_ - excluded_; }

 private:
  const Valuation& a_;
  const Valuation& b_;
  std::uint64_t start_;
  std::uint64_t excluded_ = 0;
};

void Record(SolveStats& stats, bool ok, const std::string& what) {
  ++stats.invariant_checks;
  if (!ok) {
    ++stats.invariant_violations;
    if (stats.violations.size() < 16) stats.violations.push_back(what);
  }
}

Subset FirstK(const Subset& s, int k) {
  Subset out(s.universe());
  int taken = 0;
  for (std::size_t e : s.elements()) {
    if (taken == k) break;
    out.insert(e);
    ++taken;
  }
  return out;
}

void CheckIterationInvariants(const ViapState& st, int expected,
                              const Valuation& omega1, const Valuation& omega2,
                              WitnessCheckMode mode, SolveStats& stats) {
  Record(stats, static_cast<int>((st.X1 & st.X2).count()) == expected,
         "intersection did not grow by exactly one");
  const Rational min1 = *std::min_element(st.p1.begin(), st.p1.end());
  const Rational max2 = *std::max_element(st.p2.begin(), st.p2.end());
  Record(stats, min1 == 0, "min p1 != 0");
  bool argmin_ok = true;
  for (std::size_t v : (st.X1 - st.X2).elements()) {
    argmin_ok = argmin_ok && st.p1[v] == min1;
  }
  Record(stats, argmin_ok, "X1 \\ X2 not inside argmin p1");
  bool argmax_ok = true;
  for (std::size_t v : (st.X2 - st.X1).elements()) {
    argmax_ok = argmax_ok && st.p2[v] == max2;
  }
  Record(stats, argmax_ok, "X2 \\ X1 not inside argmax p2");
  const Witness w{st.p1, st.p2, st.X1 & st.X2};
  const bool witness_ok =
      VerifyWitness(st.X1, st.X2, w, expected, omega1, omega2, mode);
  Record(stats, witness_ok, "witness failed after augmentation");
  if (!witness_ok) ThrowInternal("optimality witness failed after augmentation");
}

IntersectionSolution MakeSolution(const ViapState& st, int k,
                                  const Valuation& omega1,
                                  const Valuation& omega2, Subset F) {
  IntersectionSolution sol;
  sol.status = Status::kOptimal;
  sol.X1 = st.X1;
  sol.X2 = st.X2;
  sol.value = omega1.value(st.X1) + omega2.value(st.X2);
  sol.witness = Witness{st.p1, st.p2, std::move(F)};
  sol.frame = WitnessFrame::kDirect;
  sol.witness_k = k;
  return sol;
}

void RequireCompatible(const Valuation& omega1, const Valuation& omega2) {
  RequireSameSize(omega1.ground_size(), omega2.ground_size(),
                  "valuation ground sets");
  if (!omega1.has_domain()) ThrowEmptyDomain("first valuation has empty domain");
  if (!omega2.has_domain()) ThrowEmptyDomain("second valuation has empty domain");
}

// Runs augmentations from minimizers (start1, start2), calling `emit` on the
// initial state and after every augmentation, until |X1 & X2| reaches `target`
// or t becomes unreachable. Returns the last state.
ViapState RunAugmentations(const Valuation& omega1, const Valuation& omega2,
                           const Subset& start1, const Subset& start2,
                           int target, const ViapOptions& options,
                           CallMeter& meter, SolveStats& stats,
                           const std::function<void(const ViapState&)>& emit,
                           bool& reached) {
  const std::size_t n = omega1.ground_size();
  ViapState st{start1, start2, std::vector<Rational>(n, Rational(0)),
               std::vector<Rational>(n, Rational(0))};
  emit(st);
  int i = static_cast<int>((st.X1 & st.X2).count());
  while (i < target) {
    if (!AugmentStep(st, omega1, omega2)) {
      reached = false;
      return st;
    }
    ++stats.augmentations;
    ++i;
    if (options.check_invariants) {
      meter.Exclude([&] {
        CheckIterationInvariants(st, i, omega1, omega2, options.mode, stats);
        return 0;
      });
    }
    emit(st);
  }
  reached = true;
  return st;
}

}  // namespace

IntersectionSolution SolveVGeqK(const Valuation& omega1,
                                const Valuation& omega2, int k,
                                const ViapOptions& options) {
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  RequireCompatible(omega1, omega2);
  CallMeter meter(omega1, omega2);
  const Subset X1 =
      options.start1 ? *options.start1 : MinimizeValuated(omega1).set;
  const Subset X2 =
      options.start2 ? *options.start2 : MinimizeValuated(omega2).set;
  SolveStats stats;
  const int j = static_cast<int>((X1 & X2).count());
  IntersectionSolution sol;
  if (j >= k) {
    ViapState st{X1, X2,
                 std::vector<Rational>(X1.universe(), Rational(0)),
                 std::vector<Rational>(X1.universe(), Rational(0))};
    sol = MakeSolution(st, k, omega1, omega2, FirstK(X1 & X2, k));
  } else {
    bool reached = false;
    const ViapState last =
        RunAugmentations(omega1, omega2, X1, X2, k, options, meter, stats,
                         [](const ViapState&) {}, reached);
    if (reached) {
      sol = MakeSolution(last, k, omega1, omega2, last.X1 & last.X2);
    } else {
      sol.status = Status::kInfeasible;
      sol.X1 = last.X1;
      sol.X2 = last.X2;
      // X1, X2 keep the largest intersection reached.
      sol.value = ExtValue::Infinity();
    }
  }
  stats.oracle_calls = meter.charged();
  sol.stats = std::move(stats);
  return sol;
}

IntersectionSolution SolveVEqK(const Valuation& omega1,
                               const Valuation& omega2, int k,
                               const ViapOptions& options) {
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  RequireCompatible(omega1, omega2);
  CallMeter meter(omega1, omega2);
  const Subset X1 =
      options.start1 ? *options.start1 : MinimizeValuated(omega1).set;
  const Subset X2 =
      options.start2 ? *options.start2 : MinimizeValuated(omega2).set;
  const std::uint64_t descent_calls = meter.charged();
  ViapOptions inner = options;
  inner.start1 = X1;
  if (static_cast<int>((X1 & X2).count()) <= k) {
    inner.start2 = X2;
    IntersectionSolution sol = SolveVGeqK(omega1, omega2, k, inner);
    sol.stats.oracle_calls += descent_calls;
    return sol;
  }
  const Valuation dual2 = DualValuation(omega2);
  inner.start2 = X2.Complement();
  const int kd = omega1.rank() - k;
  IntersectionSolution sol = SolveVGeqK(omega1, dual2, kd, inner);
  sol.X2 = sol.X2.Complement();
  sol.stats.oracle_calls += descent_calls;
  if (sol.optimal()) {
    sol.frame = WitnessFrame::kDualSecond;
    sol.witness_k = kd;
  }
  return sol;
}

std::vector<IntersectionSolution> SolveAllK(const Valuation& omega1,
                                            const Valuation& omega2,
                                            const ViapOptions& options) {
  RequireCompatible(omega1, omega2);
  const std::size_t n = omega1.ground_size();
  std::vector<IntersectionSolution> out(n + 1);
  for (auto& s : out) s.status = Status::kInfeasible;
  const Subset X1 =
      options.start1 ? *options.start1 : MinimizeValuated(omega1).set;
  const Subset X2 =
      options.start2 ? *options.start2 : MinimizeValuated(omega2).set;
  const int j0 = static_cast<int>((X1 & X2).count());
  const int cap = static_cast<int>(n);

  {
    CallMeter meter(omega1, omega2);
    SolveStats stats;
    bool reached = false;
    RunAugmentations(
        omega1, omega2, X1, X2, cap, options, meter, stats,
        [&](const ViapState& st) {
          const int k = static_cast<int>((st.X1 & st.X2).count());
          out[k] = MakeSolution(st, k, omega1, omega2, st.X1 & st.X2);
          out[k].stats = stats;
          out[k].stats.oracle_calls = meter.charged();
        },
        reached);
  }
  {
    const Valuation dual2 = DualValuation(omega2);
    CallMeter meter(omega1, dual2);
    SolveStats stats;
    bool reached = false;
    const int r1 = omega1.rank();
    RunAugmentations(
        omega1, dual2, X1, X2.Complement(), cap, options, meter, stats,
        [&](const ViapState& st) {
          const int kd = static_cast<int>((st.X1 & st.X2).count());
          const int k = r1 - kd;
          if (k >= j0 || k < 0) return;
          IntersectionSolution sol =
              MakeSolution(st, kd, omega1, dual2, st.X1 & st.X2);
          sol.X2 = st.X2.Complement();
          sol.value = omega1.value(sol.X1) + omega2.value(sol.X2);
          sol.frame = WitnessFrame::kDualSecond;
          sol.stats = stats;
          sol.stats.oracle_calls = meter.charged();
          out[k] = std::move(sol);
        },
        reached);
  }
  return out;
}

bool VerifyWitness(const Subset& X1, const Subset& X2, const Witness& witness,
                   int k, const Valuation& omega1, const Valuation& omega2,
                   WitnessCheckMode mode) {
  const std::size_t n = omega1.ground_size();
  if (omega2.ground_size() != n || witness.p1.size() != n ||
      witness.p2.size() != n || X1.universe() != n || X2.universe() != n ||
      witness.F.universe() != n) {
    return false;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (witness.p1[v] != witness.p2[v]) return false;
  }
  if (!omega1.InDomain(X1) || !omega2.InDomain(X2)) return false;
  const std::vector<Rational> neg2 = Negated(witness.p2);
  if (mode == WitnessCheckMode::kLocalExchange) {
    if (!IsLocalMinimum(omega1, X1, witness.p1)) return false;
    if (!IsLocalMinimum(omega2, X2, neg2)) return false;
  } else {
    if (!IsGlobalMinimum(omega1, X1, witness.p1)) return false;
    if (!IsGlobalMinimum(omega2, X2, neg2)) return false;
  }
  const Subset& F = witness.F;
  if (k < 0 || static_cast<int>(F.count()) != k) return false;
  if (!F.IsSubsetOf(X1 & X2)) return false;
  if (n == 0) return true;
  const Rational min1 = *std::min_element(witness.p1.begin(), witness.p1.end());
  const Rational max2 = *std::max_element(witness.p2.begin(), witness.p2.end());
  for (std::size_t v : (X1 - F).elements()) {
    if (witness.p1[v] != min1) return false;
  }
  for (std::size_t v : (X2 - F).elements()) {
    if (witness.p2[v] != max2) return false;
  }
  return true;
}

bool VerifySolution(const IntersectionSolution& solution,
                    const Valuation& omega1, const Valuation& omega2,
                    WitnessCheckMode mode) {
  if (!solution.optimal() || !solution.witness) return false;
  switch (solution.frame) {
    case WitnessFrame::kDirect:
      return VerifyWitness(solution.X1, solution.X2, *solution.witness,
                           solution.witness_k, omega1, omega2, mode);
    case WitnessFrame::kDualSecond:
      return VerifyWitness(solution.X1, solution.X2.Complement(),
                           *solution.witness, solution.witness_k, omega1,
                           DualValuation(omega2), mode);
    case WitnessFrame::kNone:
      break;
  }
  return false;
}

}  // namespace valmat
