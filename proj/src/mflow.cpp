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

#include "valmat/mflow.hpp"

#include <algorithm>
#include <deque>

namespace valmat {

std::size_t FlowNetwork::AddArc(FlowArc arc) {
  if (arc.from >= nodes_ || arc.to >= nodes_) {
    ThrowInvalidInput("flow arc endpoint out of range");
  }
  if (arc.lower && arc.upper && *arc.lower > *arc.upper) {
    ThrowInvalidInput("flow arc has lower > upper");
  }
  arcs_.push_back(std::move(arc));
  return arcs_.size() - 1;
}

bool FlowNetwork::Respects(const std::vector<std::int64_t>& xi) const {
  if (xi.size() != arcs_.size()) return false;
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a].lower && xi[a] < *arcs_[a].lower) return false;
    if (arcs_[a].upper && xi[a] > *arcs_[a].upper) return false;
  }
  return true;
}

IntVector Boundary(const std::vector<std::int64_t>& xi,
                   const FlowNetwork& network) {
  RequireSameSize(xi.size(), network.arcs().size(), "flow vector");
  IntVector b(network.node_count(), 0);
  for (std::size_t a = 0; a < xi.size(); ++a) {
    b[network.arcs()[a].to] += xi[a];
    b[network.arcs()[a].from] -= xi[a];
  }
  return b;
}

ExtValue FlowObjective(const MnatFunction& h, const FlowNetwork& network,
                       const std::vector<std::int64_t>& xi) {
  RequireSameSize(h.dimension(), network.node_count(), "flow function");
  ExtValue total = h.value(Boundary(xi, network));
  if (total.is_infinite()) return total;
  Rational lin = 0;
  for (std::size_t a = 0; a < xi.size(); ++a) {
    lin += network.arcs()[a].weight * xi[a];
  }
  return total + ExtValue(lin);
}

FlowSolution MakeFlowSolution(const MnatFunction& h, const FlowNetwork& network,
                              std::vector<std::int64_t> xi) {
  FlowSolution s;
  s.boundary = Boundary(xi, network);
  s.objective = FlowObjective(h, network, xi);
  s.xi = std::move(xi);
  return s;
}

namespace {

struct CycleArc {
  std::size_t from;
  std::size_t to;
  Rational length;
  // Network arc index and push direction; exchange arcs have arc == -1.
  long arc;
  int dir;
};

// Minimum cycle mean by Karp's recurrence; nullopt when acyclic.
std::optional<Rational> MinMeanCycle(std::size_t nodes,
                                     const std::vector<CycleArc>& arcs) {
  std::vector<std::vector<std::optional<Rational>>> d(
      nodes + 1, std::vector<std::optional<Rational>>(nodes));
  for (auto& x : d[0]) x = Rational(0);
  for (std::size_t k = 1; k <= nodes; ++k) {
    for (const auto& a : arcs) {
      if (!d[k - 1][a.from]) continue;
      Rational cand = *d[k - 1][a.from] + a.length;
      auto& cur = d[k][a.to];
      if (!cur || cand < *cur) cur = std::move(cand);
    }
  }
  std::optional<Rational> best;
  for (std::size_t v = 0; v < nodes; ++v) {
    if (!d[nodes][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < nodes; ++k) {
      if (!d[k][v]) continue;
      Rational mean = (*d[nodes][v] - *d[k][v]) /
                      Rational(static_cast<long>(nodes - k));
      if (!worst || mean > *worst) worst = std::move(mean);
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  return best;
}

// Among cycles of mean `mu`, one with the fewest arcs (arc indices).
std::vector<std::size_t> TightCycle(std::size_t nodes,
                                    const std::vector<CycleArc>& arcs,
                                    const Rational& mu) {
  std::vector<Rational> pi(nodes, Rational(0));
  for (std::size_t it = 0; it < nodes; ++it) {
    bool changed = false;
    for (const auto& a : arcs) {
      Rational cand = pi[a.from] + a.length - mu;
      if (cand < pi[a.to]) {
        pi[a.to] = std::move(cand);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<std::size_t>> out(nodes);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (pi[a.from] + a.length - mu == pi[a.to]) out[a.from].push_back(i);
  }
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < nodes; ++s) {
    std::vector<long> parent(nodes, -2);
    std::vector<std::size_t> depth(nodes, 0);
    std::deque<std::size_t> queue{s};
    parent[s] = -1;
    std::optional<std::size_t> closing;
    while (!queue.empty() && !closing) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (!best.empty() && depth[u] + 1 >= best.size()) break;
      for (std::size_t ai : out[u]) {
        const std::size_t v = arcs[ai].to;
        if (v == s) {
          closing = ai;
          break;
        }
        if (parent[v] != -2) continue;
        parent[v] = static_cast<long>(ai);
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
    if (!closing) continue;
    std::vector<std::size_t> cycle{*closing};
    for (std::size_t v = arcs[*closing].from; v != s;) {
      const auto ai = static_cast<std::size_t>(parent[v]);
      cycle.push_back(ai);
      v = arcs[ai].from;
    }
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  if (best.empty()) ThrowInternal("no tight cycle at the minimum mean");
  return best;
}

}  // namespace

FlowResult SolveMnatFlow(const MnatFunction& h, const FlowNetwork& network,
                         const FlowOptions& options) {
  const std::size_t nodes = network.node_count();
  RequireSameSize(h.dimension(), nodes, "flow function");
  std::vector<std::int64_t> xi =
      options.start ? *options.start
                    : std::vector<std::int64_t>(network.arcs().size(), 0);
  if (!network.Respects(xi)) ThrowInvalidInput("start flow violates capacities");
  ExtValue obj = FlowObjective(h, network, xi);
  if (obj.is_infinite()) ThrowInvalidInput("start flow has infinite objective");

  FlowResult result;
  for (int iter = 0;; ++iter) {
    if (iter >= options.max_iterations) {
      ThrowResourceLimit("flow solver iteration limit");
    }
    const IntVector x = Boundary(xi, network);
    const Rational hx = h.value(x).value();
    std::vector<CycleArc> arcs;
    for (std::size_t a = 0; a < network.arcs().size(); ++a) {
      const FlowArc& fa = network.arcs()[a];
      if (!fa.upper || xi[a] < *fa.upper) {
        arcs.push_back({fa.from, fa.to, fa.weight, static_cast<long>(a), 1});
      }
      if (!fa.lower || xi[a] > *fa.lower) {
        arcs.push_back({fa.to, fa.from, -fa.weight, static_cast<long>(a), -1});
      }
    }
    // Arc b -> a stands for the boundary move x + e_b - e_a.
    for (std::size_t b = 0; b < nodes; ++b) {
      for (std::size_t a = 0; a < nodes; ++a) {
        if (a == b) continue;
        IntVector y = x;
        ++y[b];
        --y[a];
        const ExtValue hy = h.value(y);
        if (hy.is_infinite()) continue;
        arcs.push_back({b, a, hy.value() - hx, -1, 0});
      }
    }
    const auto mu = MinMeanCycle(nodes, arcs);
    if (!mu || *mu >= 0) break;
    const auto cycle = TightCycle(nodes, arcs, *mu);
    bool pure_flow = true;
    bool unlimited = true;
    for (std::size_t ci : cycle) {
      const CycleArc& c = arcs[ci];
      if (c.arc < 0) {
        pure_flow = false;
        continue;
      }
      const FlowArc& fa = network.arcs()[static_cast<std::size_t>(c.arc)];
      unlimited = unlimited && (c.dir > 0 ? !fa.upper : !fa.lower);
    }
    if (pure_flow && unlimited) {
      result.status = FlowStatus::kUnbounded;
      result.iterations = iter;
      result.flow = MakeFlowSolution(h, network, std::move(xi));
      return result;
    }
    std::vector<std::int64_t> next = xi;
    for (std::size_t ci : cycle) {
      const CycleArc& c = arcs[ci];
      if (c.arc >= 0) next[static_cast<std::size_t>(c.arc)] += c.dir;
    }
    const ExtValue next_obj = FlowObjective(h, network, next);
    if (!(next_obj < obj)) ThrowInternal("cycle cancellation did not decrease");
    xi = std::move(next);
    obj = next_obj;
    result.iterations = iter + 1;
  }
  result.status = FlowStatus::kOptimal;
  result.flow = MakeFlowSolution(h, network, std::move(xi));
  return result;
}

std::size_t NodeV1(std::size_t v) { return v; }
std::size_t NodeS(std::size_t n) { return n; }
std::size_t NodeV2(std::size_t v, std::size_t n) { return n + 1 + v; }
std::size_t NodeT(std::size_t n) { return 2 * n + 1; }

namespace {

// The common coordinate sum of dom f; checks nonnegativity and a fixed sum
// when the box is small enough to scan.
std::int64_t DomainLevel(const MnatFunction& f) {
  const std::int64_t r = f.witness_point().Sum();
  if (f.BoxVolume() <= 1000000) {
    for (const auto& x : EnumerateFunctionDomain(f)) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0) ThrowInvalidInput("domain is not nonnegative");
      }
      if (x.Sum() != r) ThrowInvalidInput("domain does not lie on a hyperplane");
    }
  } else {
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      if (f.lower()[i] < 0) ThrowInvalidInput("box is not nonnegative");
    }
  }
  return r;
}

std::int64_t SumMin(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::min(a[i], b[i]);
  return s;
}

void RequireMgeqkInputs(const MnatFunction& f1, const MnatFunction& f2, int k,
                        const std::vector<Rational>& w) {
  RequireSameSize(f2.dimension(), f1.dimension(), "second function");
  RequireSameSize(w.size(), f1.dimension(), "weights");
  if (k < 0) ThrowInvalidInput("k must be nonnegative");
  for (const auto& x : w) {
    if (x > 0) ThrowInvalidInput("weights must be nonpositive");
  }
}

}  // namespace

MgeqkInstance BuildMgeqkInstance(const MnatFunction& f1, const MnatFunction& f2,
                                 int k, const std::vector<Rational>& w) {
  RequireMgeqkInputs(f1, f2, k, w);
  if (!f1.has_domain()) ThrowEmptyDomain("first function has empty domain");
  if (!f2.has_domain()) ThrowEmptyDomain("second function has empty domain");
  const std::size_t n = f1.dimension();
  const std::int64_t r1 = DomainLevel(f1);
  const std::int64_t r2 = DomainLevel(f2);
  if (k > std::min(r1, r2)) ThrowInvalidInput("k exceeds min(r1, r2)");
  const std::int64_t cap1 = r2 - k;
  const std::int64_t cap2 = r1 - k;

  IntVector lower(2 * n + 2, 0);
  IntVector upper(2 * n + 2, 0);
  for (std::size_t v = 0; v < n; ++v) {
    lower[NodeV1(v)] = -f1.upper()[v];
    upper[NodeV1(v)] = -f1.lower()[v];
    lower[NodeV2(v, n)] = f2.lower()[v];
    upper[NodeV2(v, n)] = f2.upper()[v];
  }
  lower[NodeS(n)] = -cap1;
  upper[NodeT(n)] = cap2;

  IntVector witness(2 * n + 2, 0);
  for (std::size_t v = 0; v < n; ++v) {
    witness[NodeV1(v)] = -f1.witness_point()[v];
    witness[NodeV2(v, n)] = f2.witness_point()[v];
  }
  auto fn = [f1, f2, n, cap1, cap2](const IntVector& z) -> ExtValue {
    IntVector x1(n, 0);
    IntVector x2(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      x1[v] = -z[NodeV1(v)];
      x2[v] = z[NodeV2(v, n)];
    }
    const std::int64_t a = -z[NodeS(n)];
    const std::int64_t b = z[NodeT(n)];
    if (a < 0 || a > cap1 || b < 0 || b > cap2) return ExtValue::Infinity();
    ExtValue total = f1.value(x1);
    if (total.is_infinite()) return total;
    return total + f2.value(x2);
  };
  MgeqkInstance inst{MnatFunction(lower, upper, fn, witness, "mgeqk"),
                     FlowNetwork(2 * n + 2), n, r1, r2, k};
  for (std::size_t v = 0; v < n; ++v) {
    inst.network.AddArc({NodeV1(v), NodeV2(v, n), 0, std::nullopt, w[v]});
  }
  for (std::size_t v = 0; v < n; ++v) {
    inst.network.AddArc({NodeV1(v), NodeT(n), 0, std::nullopt, 0});
  }
  for (std::size_t v = 0; v < n; ++v) {
    inst.network.AddArc({NodeS(n), NodeV2(v, n), 0, std::nullopt, 0});
  }
  return inst;
}

std::vector<std::int64_t> SolutionToFlowArcs(const IntVector& x1,
                                             const IntVector& x2) {
  RequireSameSize(x2.size(), x1.size(), "second point");
  const std::size_t n = x1.size();
  std::vector<std::int64_t> xi(3 * n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    xi[v] = std::min(x1[v], x2[v]);
    xi[n + v] = std::max<std::int64_t>(0, x1[v] - x2[v]);
    xi[2 * n + v] = std::max<std::int64_t>(0, x2[v] - x1[v]);
  }
  return xi;
}

FlowSolution SolutionToFlow(const MgeqkInstance& inst, const IntVector& x1,
                            const IntVector& x2) {
  RequireSameSize(x1.size(), inst.n, "first point");
  return MakeFlowSolution(inst.h, inst.network, SolutionToFlowArcs(x1, x2));
}

std::vector<std::int64_t> RerouteFlow(std::vector<std::int64_t> xi,
                                      std::size_t n) {
  RequireSameSize(xi.size(), 3 * n, "flow vector");
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t m = std::min(xi[n + v], xi[2 * n + v]);
    xi[v] += m;
    xi[n + v] -= m;
    xi[2 * n + v] -= m;
  }
  return xi;
}

std::pair<IntVector, IntVector> FlowToSolution(const std::vector<std::int64_t>& xi,
                                               std::size_t n) {
  const auto r = RerouteFlow(xi, n);
  IntVector x1(n, 0);
  IntVector x2(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    x1[v] = r[v] + r[n + v];
    x2[v] = r[v] + r[2 * n + v];
  }
  return {x1, x2};
}

ExtValue MgeqkObjective(const MnatFunction& f1, const MnatFunction& f2,
                        const std::vector<Rational>& w, const IntVector& x1,
                        const IntVector& x2) {
  ExtValue total = f1.value(x1);
  if (total.is_infinite()) return total;
  total += f2.value(x2);
  if (total.is_infinite()) return total;
  Rational lin = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    lin += w[v] * std::min(x1[v], x2[v]);
  }
  return total + ExtValue(lin);
}

MSolution SolveMGeqKW(const MnatFunction& f1, const MnatFunction& f2, int k,
                      const std::vector<Rational>& w,
                      const FlowOptions& options) {
  RequireMgeqkInputs(f1, f2, k, w);
  MSolution out;
  if (!f1.has_domain() || !f2.has_domain()) return out;
  const std::size_t n = f1.dimension();
  const std::int64_t r1 = DomainLevel(f1);
  const std::int64_t r2 = DomainLevel(f2);
  if (k > std::min(r1, r2)) return out;

  IntVector y1 = f1.witness_point();
  IntVector y2 = f2.witness_point();
  if (SumMin(y1, y2) < k) {
    // Maximize sum min(x1, x2) over the domains first.
    const MgeqkInstance probe =
        BuildMgeqkInstance(DomainIndicator(f1), DomainIndicator(f2), 0,
                           std::vector<Rational>(n, Rational(-1)));
    FlowOptions o = options;
    o.start = SolutionToFlowArcs(y1, y2);
    const FlowResult r = SolveMnatFlow(probe.h, probe.network, o);
    out.iterations += r.iterations;
    std::tie(y1, y2) = FlowToSolution(r.flow.xi, n);
    if (SumMin(y1, y2) < k) return out;
  }
  const MgeqkInstance inst = BuildMgeqkInstance(f1, f2, k, w);
  FlowOptions o = options;
  o.start = SolutionToFlowArcs(y1, y2);
  const FlowResult r = SolveMnatFlow(inst.h, inst.network, o);
  out.iterations += r.iterations;
  if (r.status != FlowStatus::kOptimal) ThrowInternal("reduced flow not optimal");
  std::tie(out.x1, out.x2) = FlowToSolution(r.flow.xi, n);
  out.value = MgeqkObjective(f1, f2, w, out.x1, out.x2);
  out.status = Status::kOptimal;
  return out;
}

}  // namespace valmat
