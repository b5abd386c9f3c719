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

// Augmenting-path solver for
//   min omega1(X1) + omega2(X2)  s.t.  |X1 & X2| >= k  (or == k)
// with potential-based optimality witnesses.

#ifndef VALMAT_VIAP_HPP_
#define VALMAT_VIAP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valmat/valuated.hpp"

namespace valmat {

enum class Status { kOptimal, kInfeasible };

// Which pair a witness certifies: (X1, X2) directly, or (X1, V \ X2) against
// the dual of omega2.
enum class WitnessFrame { kNone, kDirect, kDualSecond };

enum class WitnessCheckMode {
  // Single-exchange local optimality; exact for valuated matroids.
  kLocalExchange,
  // Full scan of both domains.
  kExhaustive,
};

struct Witness {
  std::vector<Rational> p1;
  std::vector<Rational> p2;
  Subset F;
};

struct SolveStats {
  std::uint64_t oracle_calls = 0;
  int augmentations = 0;
  int invariant_checks = 0;
  int invariant_violations = 0;
  std::vector<std::string> violations;
};

struct IntersectionSolution {
  Status status = Status::kInfeasible;
  Subset X1;
  Subset X2;
  ExtValue value = ExtValue::Infinity();
  std::optional<Witness> witness;
  WitnessFrame frame = WitnessFrame::kNone;
  int witness_k = 0;
  SolveStats stats;

  bool optimal() const { return status == Status::kOptimal; }
};

enum class ArcClass { kE, kF, kA1, kA2, kS, kT };

struct AuxArc {
  std::size_t from = 0;
  std::size_t to = 0;
  ArcClass cls = ArcClass::kE;
  Rational length;
};

// Nodes: v1 = v, v2 = n + v, s = 2n, t = 2n + 1.
class AuxDigraph {
 public:
  explicit AuxDigraph(std::size_t n) : n_(n), out_(2 * n + 2) {}

  std::size_t n() const { return n_; }
  std::size_t node_count() const { return 2 * n_ + 2; }
  std::size_t V1(std::size_t v) const { return v; }
  std::size_t V2(std::size_t v) const { return n_ + v; }
  std::size_t source() const { return 2 * n_; }
  std::size_t sink() const { return 2 * n_ + 1; }

  void AddArc(AuxArc arc);
  const std::vector<AuxArc>& arcs() const { return arcs_; }
  const std::vector<std::size_t>& out(std::size_t node) const {
    return out_[node];
  }
  std::size_t Count(ArcClass cls) const;

 private:
  std::size_t n_;
  std::vector<AuxArc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

// Throws kInternal on a negative length, which means X1 or X2 is not a
// minimizer of its shifted valuation.
AuxDigraph BuildAuxDigraph(const Subset& X1, const Subset& X2,
                           const std::vector<Rational>& p1,
                           const std::vector<Rational>& p2, const Subset& F,
                           const Valuation& omega1, const Valuation& omega2);

struct PathResult {
  std::vector<ExtValue> dist;
  std::vector<int> hops;
  std::vector<int> parent_arc;
  // Arc indices from s to t; absent when t is unreachable.
  std::optional<std::vector<std::size_t>> path;
};

// Label-setting search on the key (length, hops).
PathResult ShortestPathWithHopTiebreak(const AuxDigraph& g);

struct ViapState {
  Subset X1;
  Subset X2;
  std::vector<Rational> p1;
  std::vector<Rational> p2;
};

// One augmentation with F = X1 & X2. Returns false, leaving the state alone,
// when t is unreachable.
bool AugmentStep(ViapState& state, const Valuation& omega1,
                 const Valuation& omega2);

struct ViapOptions {
  bool check_invariants = true;
  WitnessCheckMode mode = WitnessCheckMode::kLocalExchange;
  // Minimizers to start from; computed by descent when absent.
  std::optional<Subset> start1;
  std::optional<Subset> start2;
};

IntersectionSolution SolveVGeqK(const Valuation& omega1,
                                const Valuation& omega2, int k,
                                const ViapOptions& options = {});
IntersectionSolution SolveVEqK(const Valuation& omega1,
                               const Valuation& omega2, int k,
                               const ViapOptions& options = {});

// Optimal equality-constrained solutions for k = 0..|V|; entries for
// unreachable k are infeasible. Reuses one augmenting sequence per direction.
std::vector<IntersectionSolution> SolveAllK(const Valuation& omega1,
                                            const Valuation& omega2,
                                            const ViapOptions& options = {});

bool VerifyWitness(const Subset& X1, const Subset& X2, const Witness& witness,
                   int k, const Valuation& omega1, const Valuation& omega2,
                   WitnessCheckMode mode = WitnessCheckMode::kLocalExchange);

// Checks `solution.witness` in the solution's own frame.
bool VerifySolution(const IntersectionSolution& solution,
                    const Valuation& omega1, const Valuation& omega2,
                    WitnessCheckMode mode = WitnessCheckMode::kLocalExchange);

}  // namespace valmat

#endif  // VALMAT_VIAP_HPP_
