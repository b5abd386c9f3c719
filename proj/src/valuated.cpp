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

#include "valmat/valuated.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <unordered_map>

namespace valmat {

struct Valuation::State {
  explicit State(ValueFn f) : fn(std::move(f)) {}
  ValueFn fn;
  std::mutex mu;
  std::unordered_map<Subset, ExtValue, SubsetHash> memo;
  std::atomic<std::uint64_t> queries{0};
};

Valuation::Valuation(std::size_t ground_size, int rank, ValueFn fn,
                     std::optional<Subset> witness, std::string kind)
    : ground_size_(ground_size),
      rank_(rank),
      witness_(std::move(witness)),
      kind_(std::move(kind)),
      state_(std::make_shared<State>(std::move(fn))) {
  if (ground_size > Subset::kMaxSize) ThrowInvalidInput("ground set too large");
  if (rank < 0 || static_cast<std::size_t>(rank) > ground_size) {
    ThrowInvalidInput("valuation rank out of range");
  }
  if (witness_) {
    RequireSameSize(witness_->universe(), ground_size, "witness base");
    if (!value(*witness_).is_finite()) {
      ThrowInvalidInput("witness base of '" + kind_ + "' has infinite value");
    }
    ResetQueryCount();
  }
}

const Subset& Valuation::witness_base() const {
  if (!witness_) ThrowEmptyDomain("valuation '" + kind_ + "' has empty domain");
  return *witness_;
}

ExtValue Valuation::value(const Subset& x) const {
  state_->queries.fetch_add(1, std::memory_order_relaxed);
  RequireSameSize(x.universe(), ground_size_, "valuation argument");
  if (static_cast<int>(x.count()) != rank_) return ExtValue::Infinity();
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(x);
    if (it != state_->memo.end()) return it->second;
  }
  ExtValue v = state_->fn(x);
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->memo.emplace(x, v);
  return v;
}

std::uint64_t Valuation::query_count() const {
  return state_->queries.load(std::memory_order_relaxed);
}

void Valuation::ResetQueryCount() const { state_->queries.store(0); }

MnatFunction::MnatFunction(IntVector lower, IntVector upper, ValueFn fn,
                           std::optional<IntVector> witness, std::string kind)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      fn_(std::make_shared<const ValueFn>(std::move(fn))),
      witness_(std::move(witness)),
      kind_(std::move(kind)) {
  RequireSameSize(lower_.size(), upper_.size(), "box bounds");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i] > upper_[i]) ThrowInvalidInput("box lower bound above upper");
  }
  if (witness_ && !value(*witness_).is_finite()) {
    ThrowInvalidInput("witness point of '" + kind_ + "' has infinite value");
  }
}

const IntVector& MnatFunction::witness_point() const {
  if (!witness_) ThrowEmptyDomain("function '" + kind_ + "' has empty domain");
  return *witness_;
}

bool MnatFunction::InBox(const IntVector& x) const {
  RequireSameSize(x.size(), lower_.size(), "function argument");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  }
  return true;
}

ExtValue MnatFunction::value(const IntVector& x) const {
  if (!InBox(x)) return ExtValue::Infinity();
  return (*fn_)(x);
}

std::uint64_t MnatFunction::BoxVolume() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t vol = 1;
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    const auto side = static_cast<std::uint64_t>(upper_[i] - lower_[i] + 1);
    if (vol > kMax / side) return kMax;
    vol *= side;
  }
  return vol;
}

UnivariateTable::UnivariateTable(std::int64_t lo, std::vector<ExtValue> values)
    : lo_(lo), values_(std::move(values)) {}

ExtValue UnivariateTable::operator()(std::int64_t x) const {
  if (values_.empty() || x < lo_ || x > hi()) return ExtValue::Infinity();
  return values_[static_cast<std::size_t>(x - lo_)];
}

bool UnivariateTable::IsDiscreteConvex() const {
  // Finite entries must be contiguous.
  std::size_t first = values_.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_finite()) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first == values_.size()) return true;
  for (std::size_t i = first; i <= last; ++i) {
    if (!values_[i].is_finite()) return false;
  }
  for (std::size_t i = first + 1; i < last; ++i) {
    if (values_[i + 1].value() + values_[i - 1].value() <
        2 * values_[i].value()) {
      return false;
    }
  }
  return true;
}

ExtValue EvaluateLaminar(const LaminarSpec& spec, const IntVector& x) {
  RequireSameSize(x.size(), spec.ground_size, "laminar argument");
  ExtValue total;
  for (const auto& m : spec.members) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (m.set.contains(v)) s += x[v];
    }
    total += m.g(s);
    if (total.is_infinite()) return total;
  }
  return total;
}

void ValidateLaminarSpec(const LaminarSpec& spec) {
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    const Subset& a = spec.members[i].set;
    RequireSameSize(a.universe(), spec.ground_size, "laminar member");
    if (!spec.members[i].g.IsDiscreteConvex()) {
      ThrowInvalidInput("laminar member " + std::to_string(i) +
                        " has a non-convex table");
    }
    for (std::size_t j = i + 1; j < spec.members.size(); ++j) {
      const Subset& b = spec.members[j].set;
      if (!a.IsSubsetOf(b) && !b.IsSubsetOf(a) && !(a & b).empty()) {
        ThrowInvalidInput("laminar family has crossing members " +
                          std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  if (!spec.lower.entries().empty() || !spec.upper.entries().empty()) {
    RequireSameSize(spec.lower.size(), spec.ground_size, "laminar lower box");
    RequireSameSize(spec.upper.size(), spec.ground_size, "laminar upper box");
  }
}

std::size_t CopyIndex(std::size_t copy, std::size_t v, std::size_t m) {
  return copy * m + v;
}

std::vector<Subset> SplitCopies(const Subset& x, std::size_t n, std::size_t m) {
  RequireSameSize(x.universe(), n * m, "copy-space subset");
  std::vector<Subset> out(n, Subset(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t v = 0; v < m; ++v) {
      if (x.contains(CopyIndex(i, v, m))) out[i].insert(v);
    }
  }
  return out;
}

Subset JoinCopies(const std::vector<Subset>& parts) {
  if (parts.empty()) return Subset(0);
  const std::size_t m = parts.front().universe();
  Subset out(parts.size() * m);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    RequireSameSize(parts[i].universe(), m, "copy part");
    for (std::size_t v : parts[i].elements()) out.insert(CopyIndex(i, v, m));
  }
  return out;
}

IntVector CopyCounts(const Subset& x, std::size_t n, std::size_t m) {
  IntVector c(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t v = 0; v < m; ++v) {
      if (x.contains(CopyIndex(i, v, m))) ++c[v];
    }
  }
  return c;
}

Valuation FromMatroidAndWeights(const Matroid& m, std::vector<Rational> w) {
  RequireSameSize(w.size(), m.ground_size(), "weights");
  const Subset base = m.GreedyBase();
  return Valuation(
      m.ground_size(), m.rank(),
      [m, w = std::move(w)](const Subset& x) -> ExtValue {
        if (!m.IsIndependent(x)) return ExtValue::Infinity();
        return WeightOf(w, x);
      },
      base, "modular");
}

Valuation SizeConstrainedModular(std::vector<Rational> w, int r) {
  if (r < 0 || static_cast<std::size_t>(r) > w.size()) {
    ThrowInvalidInput("size-constrained rank out of range");
  }
  const Matroid m = MakeUniform(w.size(), r);
  return FromMatroidAndWeights(m, std::move(w));
}

Valuation MatroidIndicator(const Matroid& m) {
  return FromMatroidAndWeights(
      m, std::vector<Rational>(m.ground_size(), Rational(0)));
}

Valuation DualValuation(const Valuation& omega) {
  std::optional<Subset> witness;
  if (omega.has_domain()) witness = omega.witness_base().Complement();
  const std::size_t n = omega.ground_size();
  return Valuation(
      n, static_cast<int>(n) - omega.rank(),
      [omega](const Subset& x) { return omega.value(x.Complement()); },
      witness, "dual(" + omega.kind() + ")");
}

Valuation DisjointSum(const std::vector<Valuation>& parts) {
  if (parts.empty()) ThrowInvalidInput("disjoint sum of nothing");
  const std::size_t m = parts.front().ground_size();
  int rank = 0;
  bool all_domains = true;
  for (const auto& p : parts) {
    RequireSameSize(p.ground_size(), m, "disjoint sum part");
    rank += p.rank();
    all_domains = all_domains && p.has_domain();
  }
  std::optional<Subset> witness;
  if (all_domains) {
    std::vector<Subset> ws;
    for (const auto& p : parts) ws.push_back(p.witness_base());
    witness = JoinCopies(ws);
  }
  const std::size_t n = parts.size();
  return Valuation(
      n * m, rank,
      [parts, n, m](const Subset& x) {
        const auto split = SplitCopies(x, n, m);
        ExtValue total;
        for (std::size_t i = 0; i < n; ++i) {
          total += parts[i].value(split[i]);
          if (total.is_infinite()) break;
        }
        return total;
      },
      witness, "disjoint_sum");
}

namespace {

Subset CopyIntersection(const Subset& x, std::size_t n, std::size_t m) {
  Subset out = Subset::Full(m);
  for (const auto& part : SplitCopies(x, n, m)) out &= part;
  return out;
}

}  // namespace

Valuation IntersectionConstraintValuation(std::size_t n, const Matroid& ind,
                                          int r) {
  const std::size_t m = ind.ground_size();
  if (n < 1) ThrowInvalidInput("need at least one copy");
  if (r < 0 || static_cast<std::size_t>(r) > n * m) {
    ThrowInvalidInput("intersection constraint rank out of range");
  }
  auto member = [ind, n, m](const Subset& x) {
    return ind.IsIndependent(CopyIntersection(x, n, m));
  };
  // The relaxed family is a matroid, so a greedy scan reaches every
  // achievable size.
  Subset acc(n * m);
  for (std::size_t e = 0; e < n * m && static_cast<int>(acc.count()) < r; ++e) {
    acc.insert(e);
    if (!member(acc)) acc.erase(e);
  }
  std::optional<Subset> witness;
  if (static_cast<int>(acc.count()) == r) witness = acc;
  return Valuation(
      n * m, r,
      [member](const Subset& x) -> ExtValue {
        return member(x) ? ExtValue(0) : ExtValue::Infinity();
      },
      witness, "intersection_constraint");
}

namespace {

Valuation LaminarPenaltyImpl(std::vector<Rational> w, std::size_t n, int r) {
  const std::size_t m = w.size();
  if (n < 1) ThrowInvalidInput("need at least one copy");
  if (r < 0 || static_cast<std::size_t>(r) > n * m) {
    ThrowInvalidInput("penalty rank out of range");
  }
  Subset witness(n * m);
  for (int e = 0; e < r; ++e) witness.insert(static_cast<std::size_t>(e));
  return Valuation(
      n * m, r,
      [w = std::move(w), n, m](const Subset& x) -> ExtValue {
        const IntVector c = CopyCounts(x, n, m);
        Rational total = 0;
        for (std::size_t v = 0; v < m; ++v) {
          if (c[v] == static_cast<std::int64_t>(n)) total += w[v];
        }
        return total;
      },
      witness, "laminar_penalty");
}

}  // namespace

Valuation LaminarPenalty(std::vector<Rational> w, std::size_t n, int r) {
  for (const auto& x : w) {
    if (x < 0) ThrowInvalidInput("penalty weights must be nonnegative");
  }
  return LaminarPenaltyImpl(std::move(w), n, r);
}

Valuation LaminarPenaltyUnchecked(std::vector<Rational> w, std::size_t n,
                                  int r) {
  return LaminarPenaltyImpl(std::move(w), n, r);
}

Valuation LiftedLaminarValuation(const LaminarSpec& spec, std::size_t n, int r,
                                 std::uint64_t limit) {
  ValidateLaminarSpec(spec);
  const std::size_t m = spec.ground_size;
  if (n < 1) ThrowInvalidInput("need at least one copy");
  if (r < 0 || static_cast<std::size_t>(r) > n * m) {
    ThrowInvalidInput("lifted rank out of range");
  }
  // Search count vectors in [0, n]^m for a finite point on the level.
  std::optional<Subset> witness;
  std::uint64_t visited = 0;
  ForEachBoxPoint(IntVector(m, 0), IntVector(m, static_cast<std::int64_t>(n)),
                  [&](const IntVector& c) {
                    if (++visited > limit) {
                      ThrowResourceLimit("lifted laminar witness search");
                    }
                    if (c.Sum() != r) return true;
                    if (!EvaluateLaminar(spec, c).is_finite()) return true;
                    Subset x(n * m);
                    for (std::size_t v = 0; v < m; ++v) {
                      for (std::int64_t i = 0; i < c[v]; ++i) {
                        x.insert(CopyIndex(static_cast<std::size_t>(i), v, m));
                      }
                    }
                    witness = x;
                    return false;
                  });
  return Valuation(
      n * m, r,
      [spec, n, m](const Subset& x) {
        return EvaluateLaminar(spec, CopyCounts(x, n, m));
      },
      witness, "lifted_laminar");
}

Valuation ValuationFromSetFunction(std::size_t ground_size, int rank,
                                   Valuation::ValueFn fn, std::string kind) {
  if (ground_size > kDefaultBruteForceGround) {
    ThrowResourceLimit("witness search over a large ground set");
  }
  if (rank < 0 || static_cast<std::size_t>(rank) > ground_size) {
    ThrowInvalidInput("valuation rank out of range");
  }
  std::optional<Subset> witness;
  ForEachSubsetOfSize(ground_size, static_cast<std::size_t>(rank),
                      [&](const Subset& x) {
                        if (fn(x).is_finite()) {
                          witness = x;
                          return false;
                        }
                        return true;
                      });
  return Valuation(ground_size, rank, std::move(fn), witness, std::move(kind));
}

void ForEachBoxPoint(const IntVector& lower, const IntVector& upper,
                     const std::function<bool(const IntVector&)>& fn) {
  RequireSameSize(lower.size(), upper.size(), "box bounds");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) return;
  }
  IntVector x = lower;
  while (true) {
    if (!fn(x)) return;
    bool advanced = false;
    for (std::size_t i = x.size(); i > 0 && !advanced; --i) {
      if (x[i - 1] < upper[i - 1]) {
        ++x[i - 1];
        for (std::size_t j = i; j < x.size(); ++j) x[j] = lower[j];
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

namespace {

// Box of a laminar spec: explicit, or from singleton members.
std::pair<IntVector, IntVector> LaminarBox(const LaminarSpec& spec) {
  if (!spec.lower.entries().empty()) return {spec.lower, spec.upper};
  const std::size_t m = spec.ground_size;
  IntVector lo(m), hi(m);
  std::vector<bool> covered(m, false);
  for (const auto& mem : spec.members) {
    if (mem.set.count() != 1) continue;
    const std::size_t v = mem.set.elements().front();
    std::int64_t a = mem.g.hi() + 1;
    std::int64_t b = mem.g.lo() - 1;
    for (std::int64_t t = mem.g.lo(); t <= mem.g.hi(); ++t) {
      if (mem.g(t).is_finite()) {
        a = std::min(a, t);
        b = std::max(b, t);
      }
    }
    if (a > b) ThrowInvalidInput("singleton member with empty support");
    if (covered[v]) {
      lo[v] = std::max(lo[v], a);
      hi[v] = std::min(hi[v], b);
    } else {
      lo[v] = a;
      hi[v] = b;
      covered[v] = true;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (!covered[v]) {
      ThrowInvalidInput("laminar spec needs a box or a singleton on element " +
                        std::to_string(v));
    }
    if (lo[v] > hi[v]) ThrowInvalidInput("laminar box is empty");
  }
  return {lo, hi};
}

std::optional<IntVector> FirstFinitePoint(
    const IntVector& lo, const IntVector& hi,
    const std::function<ExtValue(const IntVector&)>& fn, std::uint64_t limit,
    std::optional<std::int64_t> level) {
  std::optional<IntVector> found;
  std::uint64_t visited = 0;
  ForEachBoxPoint(lo, hi, [&](const IntVector& x) {
    if (++visited > limit) ThrowResourceLimit("witness point search");
    if (level && x.Sum() != *level) return true;
    if (fn(x).is_finite()) {
      found = x;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

MnatFunction LaminarConvexFunction(const LaminarSpec& spec,
                                   std::uint64_t limit) {
  ValidateLaminarSpec(spec);
  auto [lo, hi] = LaminarBox(spec);
  auto fn = [spec](const IntVector& x) { return EvaluateLaminar(spec, x); };
  auto witness = FirstFinitePoint(lo, hi, fn, limit, std::nullopt);
  return MnatFunction(lo, hi, fn, witness, "laminar");
}

MnatFunction RestrictToHyperplane(const MnatFunction& f, std::int64_t r,
                                  std::uint64_t limit) {
  auto fn = [f, r](const IntVector& x) -> ExtValue {
    if (x.Sum() != r) return ExtValue::Infinity();
    return f.value(x);
  };
  auto witness = FirstFinitePoint(f.lower(), f.upper(), fn, limit, r);
  return MnatFunction(f.lower(), f.upper(), fn, witness,
                      "restrict(" + f.kind() + ")");
}

Valuation RestrictToValuation(const MnatFunction& f, int r,
                              std::uint64_t limit) {
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    if (f.lower()[i] < 0 || f.upper()[i] > 1) {
      ThrowInvalidInput("box is not inside {0,1}^V");
    }
  }
  if (r < 0 || static_cast<std::size_t>(r) > f.dimension()) {
    ThrowEmptyDomain("hyperplane level outside the box");
  }
  const MnatFunction g = RestrictToHyperplane(f, r, limit);
  std::optional<Subset> witness;
  if (g.has_domain()) witness = VectorToSubset(g.witness_point());
  return Valuation(
      f.dimension(), r,
      [g](const Subset& x) { return g.value(SubsetToVector(x)); }, witness,
      g.kind());
}

MnatFunction ValuationAsFunction(const Valuation& omega) {
  const std::size_t n = omega.ground_size();
  std::optional<IntVector> witness;
  if (omega.has_domain()) witness = SubsetToVector(omega.witness_base());
  return MnatFunction(
      IntVector(n, 0), IntVector(n, 1),
      [omega](const IntVector& x) { return omega.value(VectorToSubset(x)); },
      witness, omega.kind());
}

MnatFunction AddLinear(const MnatFunction& f, std::vector<Rational> w) {
  RequireSameSize(w.size(), f.dimension(), "linear term");
  std::optional<IntVector> witness;
  if (f.has_domain()) witness = f.witness_point();
  return MnatFunction(
      f.lower(), f.upper(),
      [f, w = std::move(w)](const IntVector& x) -> ExtValue {
        ExtValue v = f.value(x);
        if (v.is_infinite()) return v;
        Rational s = v.value();
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
        return s;
      },
      witness, f.kind() + "+linear");
}

MnatFunction DomainIndicator(const MnatFunction& f) {
  std::optional<IntVector> witness;
  if (f.has_domain()) witness = f.witness_point();
  return MnatFunction(
      f.lower(), f.upper(),
      [f](const IntVector& x) -> ExtValue {
        return f.value(x).is_finite() ? ExtValue(0) : ExtValue::Infinity();
      },
      witness, "indicator(" + f.kind() + ")");
}

std::vector<Subset> EnumerateDomain(const Valuation& omega, std::size_t limit) {
  if (omega.ground_size() > limit) {
    ThrowResourceLimit("ground set too large to enumerate the domain");
  }
  std::vector<Subset> out;
  ForEachSubsetOfSize(omega.ground_size(),
                      static_cast<std::size_t>(omega.rank()),
                      [&](const Subset& x) {
                        if (omega.InDomain(x)) out.push_back(x);
                        return true;
                      });
  return out;
}

std::vector<IntVector> EnumerateFunctionDomain(const MnatFunction& f,
                                               std::uint64_t limit) {
  if (f.BoxVolume() > limit) {
    ThrowResourceLimit("box too large to enumerate the domain");
  }
  std::vector<IntVector> out;
  ForEachBoxPoint(f.lower(), f.upper(), [&](const IntVector& x) {
    if (f.value(x).is_finite()) out.push_back(x);
    return true;
  });
  return out;
}

namespace {

// Scales finite rationals to integers over a common denominator when the
// results leave headroom for one addition in int64.
std::optional<std::vector<std::int64_t>> ScaleToIntegers(
    const std::vector<Rational>& values) {
  mpz_class lcm = 1;
  for (const auto& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                       v.get_den_mpz_t());
  const mpz_class bound = mpz_class(1) << 61;
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    mpz_class s = v.get_num() * (lcm / v.get_den());
    if (abs(s) >= bound) return std::nullopt;
    out.push_back(s.get_si());
  }
  return out;
}

uint64_t ToMask(const Subset& x) {
  uint64_t mask = 0;
  for (std::size_t i : x.elements()) mask |= uint64_t{1} << i;
  return mask;
}

template <typename T>
bool ExchangeHolds(const std::vector<uint64_t>& masks,
                   const std::vector<T>& vals) {
  std::unordered_map<uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], i);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i == j) continue;
      const uint64_t x = masks[i];
      const uint64_t y = masks[j];
      const T lhs = vals[i] + vals[j];
      for (uint64_t dx = x & ~y; dx != 0; dx &= dx - 1) {
        const uint64_t v = dx & (~dx + 1);
        bool ok = false;
        for (uint64_t dy = y & ~x; dy != 0 && !ok; dy &= dy - 1) {
          const uint64_t u = dy & (~dy + 1);
          auto a = index.find((x ^ v) | u);
          if (a == index.end()) continue;
          auto b = index.find((y ^ u) | v);
          if (b == index.end()) continue;
          if (vals[a->second] + vals[b->second] <= lhs) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool CheckValuatedExchange(const Valuation& omega, std::size_t limit) {
  if (omega.ground_size() > limit || omega.ground_size() > 63) {
    ThrowResourceLimit("ground set too large for the exchange check");
  }
  const auto dom = EnumerateDomain(omega, limit);
  std::vector<uint64_t> masks;
  std::vector<Rational> vals;
  for (const auto& x : dom) {
    masks.push_back(ToMask(x));
    vals.push_back(omega.value(x).value());
  }
  if (auto scaled = ScaleToIntegers(vals)) return ExchangeHolds(masks, *scaled);
  return ExchangeHolds(masks, vals);
}

bool CheckMnatExchange(const MnatFunction& f, std::uint64_t limit) {
  const auto dom = EnumerateFunctionDomain(f, limit);
  std::unordered_map<IntVector, Rational, IntVectorHash> val;
  for (const auto& x : dom) val.emplace(x, f.value(x).value());
  auto lookup = [&](const IntVector& x) -> const Rational* {
    auto it = val.find(x);
    return it == val.end() ? nullptr : &it->second;
  };
  const std::size_t n = f.dimension();
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      const Rational lhs = val.at(x) + val.at(y);
      for (std::size_t v = 0; v < n; ++v) {
        if (x[v] <= y[v]) continue;
        IntVector xs = x;
        IntVector ys = y;
        --xs[v];
        ++ys[v];
        bool ok = false;
        const Rational* a = lookup(xs);
        const Rational* b = lookup(ys);
        if (a && b && *a + *b <= lhs) ok = true;
        for (std::size_t u = 0; u < n && !ok; ++u) {
          if (x[u] >= y[u]) continue;
          ++xs[u];
          --ys[u];
          a = lookup(xs);
          b = lookup(ys);
          if (a && b && *a + *b <= lhs) ok = true;
          --xs[u];
          ++ys[u];
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

}  // namespace valmat
