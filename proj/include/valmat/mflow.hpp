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

// Integer M-natural-convex submodular flow by cycle canceling, and the
// reduction of the >= k problem for two M-convex functions with w <= 0.

#ifndef VALMAT_MFLOW_HPP_
#define VALMAT_MFLOW_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "valmat/valuated.hpp"
#include "valmat/viap.hpp"

namespace valmat {

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  // Absent bounds are infinite.
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  Rational weight;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : nodes_(nodes) {}

  std::size_t node_count() const { return nodes_; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }
  // Throws kInvalidInput on a bad endpoint or lower > upper.
  std::size_t AddArc(FlowArc arc);
  bool Respects(const std::vector<std::int64_t>& xi) const;

 private:
  std::size_t nodes_;
  std::vector<FlowArc> arcs_;
};

struct FlowSolution {
  std::vector<std::int64_t> xi;
  IntVector boundary;
  ExtValue objective = ExtValue::Infinity();
};

enum class FlowStatus { kOptimal, kInfeasible, kUnbounded };

struct FlowResult {
  FlowStatus status = FlowStatus::kInfeasible;
  FlowSolution flow;
  int iterations = 0;
};

// Inflow minus outflow at every node.
IntVector Boundary(const std::vector<std::int64_t>& xi,
                   const FlowNetwork& network);
// h(boundary) + sum of weight * xi.
ExtValue FlowObjective(const MnatFunction& h, const FlowNetwork& network,
                       const std::vector<std::int64_t>& xi);
FlowSolution MakeFlowSolution(const MnatFunction& h, const FlowNetwork& network,
                              std::vector<std::int64_t> xi);

struct FlowOptions {
  // Feasible start with finite objective; zero flow when absent.
  std::optional<std::vector<std::int64_t>> start;
  int max_iterations = 100000;
};

// Minimizes h(boundary) + <weight, xi> over integer flows within capacities.
// Throws kInvalidInput when the start is infeasible.
FlowResult SolveMnatFlow(const MnatFunction& h, const FlowNetwork& network,
                         const FlowOptions& options = {});

// Node layout: v1 = v, s = n, v2 = n + 1 + v, t = 2n + 1. Arc layout:
// (v1, v2) = v, (v1, t) = n + v, (s, v2) = 2n + v.
struct MgeqkInstance {
  MnatFunction h;
  FlowNetwork network;
  std::size_t n = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  int k = 0;
};

std::size_t NodeV1(std::size_t v);
std::size_t NodeS(std::size_t n);
std::size_t NodeV2(std::size_t v, std::size_t n);
std::size_t NodeT(std::size_t n);

// Requires nonnegative domains on fixed-sum hyperplanes, w <= 0 and
// 0 <= k <= min(r1, r2).
MgeqkInstance BuildMgeqkInstance(const MnatFunction& f1, const MnatFunction& f2,
                                 int k, const std::vector<Rational>& w);

// Identity arcs carry min(x1, x2); side arcs carry the surpluses.
std::vector<std::int64_t> SolutionToFlowArcs(const IntVector& x1,
                                             const IntVector& x2);
FlowSolution SolutionToFlow(const MgeqkInstance& inst, const IntVector& x1,
                            const IntVector& x2);
// Moves min(xi(v1,t), xi(s,v2)) onto the identity arc at every v.
std::vector<std::int64_t> RerouteFlow(std::vector<std::int64_t> xi,
                                      std::size_t n);
// Reroutes, then reads x1 from V1 outflows and x2 from V2 inflows.
std::pair<IntVector, IntVector> FlowToSolution(const std::vector<std::int64_t>& xi,
                                               std::size_t n);

// f1(x1) + f2(x2) + w(min(x1, x2)); the constraint is not checked.
ExtValue MgeqkObjective(const MnatFunction& f1, const MnatFunction& f2,
                        const std::vector<Rational>& w, const IntVector& x1,
                        const IntVector& x2);

struct MSolution {
  Status status = Status::kInfeasible;
  IntVector x1;
  IntVector x2;
  ExtValue value = ExtValue::Infinity();
  int iterations = 0;
};

// min f1(x1) + f2(x2) + w(min(x1, x2)) s.t. sum min(x1, x2) >= k, w <= 0.
MSolution SolveMGeqKW(const MnatFunction& f1, const MnatFunction& f2, int k,
                      const std::vector<Rational>& w,
                      const FlowOptions& options = {});

}  // namespace valmat

#endif  // VALMAT_MFLOW_HPP_
