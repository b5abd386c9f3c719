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

#include "valmat/generate.hpp"

#include <algorithm>
#include <functional>

namespace valmat {

std::int64_t RandomInt(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) ThrowInvalidInput("empty random range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational RandomRational(Rng& rng, std::int64_t lo, std::int64_t hi,
                        std::int64_t max_den) {
  const std::int64_t q = RandomInt(rng, 1, std::max<std::int64_t>(1, max_den));
  const std::int64_t p = RandomInt(rng, lo * q, hi * q);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

std::vector<Rational> RandomWeights(Rng& rng, std::size_t n, std::int64_t lo,
                                    std::int64_t hi, std::int64_t max_den) {
  std::vector<Rational> w(n);
  for (auto& x : w) x = RandomRational(rng, lo, hi, max_den);
  return w;
}

Matroid RandomMatroid(Rng& rng, MatroidKind kind, std::size_t n, int max_rank) {
  const int cap = std::min(max_rank, static_cast<int>(n));
  switch (kind) {
    case MatroidKind::kUniform:
      return MakeUniform(n, static_cast<int>(RandomInt(rng, 0, cap)));
    case MatroidKind::kPartition: {
      const auto blocks = static_cast<std::size_t>(
          RandomInt(rng, 1, std::max<std::int64_t>(1, static_cast<std::int64_t>(n))));
      std::vector<Subset> parts(blocks, Subset(n));
      for (std::size_t v = 0; v < n; ++v) {
        parts[static_cast<std::size_t>(RandomInt(rng, 0, blocks - 1))].insert(v);
      }
      std::vector<PartitionBlock> out;
      int budget = cap;
      for (auto& p : parts) {
        if (p.empty()) continue;
        const int c = static_cast<int>(
            RandomInt(rng, 0, std::min<std::int64_t>(p.count(), budget)));
        budget -= c;
        out.push_back({p, c});
      }
      if (out.empty()) out.push_back({Subset(n), 0});
      return MakePartition(n, std::move(out));
    }
    case MatroidKind::kGraphic: {
      const int vertices = static_cast<int>(RandomInt(rng, 1, cap + 1));
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < n; ++e) {
        edges.emplace_back(static_cast<int>(RandomInt(rng, 0, vertices - 1)),
                           static_cast<int>(RandomInt(rng, 0, vertices - 1)));
      }
      return MakeGraphic(vertices, std::move(edges));
    }
    case MatroidKind::kLinear: {
      const auto rows = static_cast<std::size_t>(RandomInt(rng, 1, std::max(cap, 1)));
      std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n));
      for (auto& row : m) {
        for (auto& x : row) x = Rational(static_cast<long>(RandomInt(rng, -2, 2)));
      }
      if (n == 0) return MakeUniform(0, 0);
      return MakeLinear(std::move(m));
    }
  }
  ThrowInternal("unknown matroid kind");
}

Matroid RandomMatroid(Rng& rng, std::size_t n, int max_rank) {
  return RandomMatroid(rng, static_cast<MatroidKind>(RandomInt(rng, 0, 3)), n,
                       max_rank);
}

Matroid RandomUniformOrPartition(Rng& rng, std::size_t n, int max_rank) {
  return RandomMatroid(
      rng, RandomInt(rng, 0, 1) == 0 ? MatroidKind::kUniform : MatroidKind::kPartition,
      n, max_rank);
}

UnivariateTable RandomConvexTable(Rng& rng, std::int64_t lo, std::int64_t hi,
                                  std::int64_t slope_range) {
  std::vector<Rational> slopes;
  for (std::int64_t x = lo; x < hi; ++x) {
    slopes.push_back(RandomRational(rng, -slope_range, slope_range, 2));
  }
  std::sort(slopes.begin(), slopes.end());
  std::vector<ExtValue> values;
  Rational cur = RandomRational(rng, -5, 5, 2);
  values.emplace_back(cur);
  for (const auto& s : slopes) {
    cur += s;
    values.emplace_back(cur);
  }
  return UnivariateTable(lo, std::move(values));
}

LaminarSpec RandomLaminarSpec(Rng& rng, std::size_t n, std::int64_t box_hi) {
  LaminarSpec spec;
  spec.ground_size = n;
  spec.lower = IntVector(n, 0);
  spec.upper = IntVector(n, box_hi);
  std::function<void(const std::vector<std::size_t>&)> visit =
      [&](const std::vector<std::size_t>& elems) {
        if (elems.empty()) return;
        if (RandomInt(rng, 0, 2) > 0) {
          Subset s(n);
          for (std::size_t v : elems) s.insert(v);
          const auto full = static_cast<std::int64_t>(elems.size()) * box_hi;
          std::int64_t lo = 0;
          std::int64_t hi = full;
          // Occasionally narrow the finite interval.
          if (RandomInt(rng, 0, 3) == 0) {
            lo = RandomInt(rng, 0, full);
            hi = RandomInt(rng, lo, full);
          }
          spec.members.push_back({s, RandomConvexTable(rng, lo, hi)});
        }
        if (elems.size() == 1) return;
        const auto parts = static_cast<std::size_t>(RandomInt(rng, 2, 3));
        std::vector<std::vector<std::size_t>> split(parts);
        for (std::size_t v : elems) {
          split[static_cast<std::size_t>(RandomInt(rng, 0, parts - 1))].push_back(v);
        }
        for (const auto& p : split) {
          if (p.size() < elems.size()) visit(p);
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  visit(all);
  return spec;
}

Valuation RandomValuation(Rng& rng, std::size_t n, int max_rank) {
  if (RandomInt(rng, 0, 4) < 3) {
    const Matroid m = RandomMatroid(rng, n, max_rank);
    return FromMatroidAndWeights(m, RandomWeights(rng, n, -10, 10));
  }
  const int cap = std::min(max_rank, static_cast<int>(n));
  while (true) {
    const LaminarSpec spec = RandomLaminarSpec(rng, n, 1);
    const int r = static_cast<int>(RandomInt(rng, 0, cap));
    Valuation v = RestrictToValuation(LaminarConvexFunction(spec), r);
    if (v.has_domain()) return v;
  }
}

MnatFunction RandomMConvex(Rng& rng, std::size_t n, std::int64_t box_hi) {
  while (true) {
    const MnatFunction f = LaminarConvexFunction(RandomLaminarSpec(rng, n, box_hi));
    const std::int64_t r =
        RandomInt(rng, 0, static_cast<std::int64_t>(n) * box_hi);
    MnatFunction g = RestrictToHyperplane(f, r);
    if (g.has_domain()) return g;
  }
}

}  // namespace valmat
