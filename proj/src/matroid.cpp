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

#include "valmat/matroid.hpp"

#include <numeric>
#include <unordered_set>

namespace valmat {

Matroid::Matroid(std::size_t ground_size, IndependenceFn independent,
                 std::string kind)
    : ground_size_(ground_size),
      independent_(std::make_shared<const IndependenceFn>(std::move(independent))),
      kind_(std::move(kind)) {
  if (ground_size > Subset::kMaxSize) ThrowInvalidInput("ground set too large");
  if (!(*independent_)(Subset(ground_size))) {
    ThrowInvalidInput("empty set must be independent");
  }
  rank_ = static_cast<int>(GreedyBase().count());
}

bool Matroid::IsIndependent(const Subset& x) const {
  RequireSameSize(x.universe(), ground_size_, "matroid independence");
  return (*independent_)(x);
}

bool Matroid::IsBase(const Subset& x) const {
  return static_cast<int>(x.count()) == rank_ && IsIndependent(x);
}

int Matroid::RankOf(const Subset& x) const {
  Subset acc(ground_size_);
  int r = 0;
  for (std::size_t i = 0; i < ground_size_; ++i) {
    if (!x.contains(i)) continue;
    acc.insert(i);
    if ((*independent_)(acc)) {
      ++r;
    } else {
      acc.erase(i);
    }
  }
  return r;
}

Subset Matroid::GreedyBase() const {
  Subset acc(ground_size_);
  for (std::size_t i = 0; i < ground_size_; ++i) {
    acc.insert(i);
    if (!(*independent_)(acc)) acc.erase(i);
  }
  return acc;
}

Matroid MakeUniform(std::size_t ground_size, int rank) {
  if (rank < 0 || static_cast<std::size_t>(rank) > ground_size) {
    ThrowInvalidInput("uniform matroid rank out of range");
  }
  return Matroid(
      ground_size,
      [rank](const Subset& x) { return static_cast<int>(x.count()) <= rank; },
      "uniform");
}

Matroid MakeFree(std::size_t ground_size) {
  return Matroid(ground_size, [](const Subset&) { return true; }, "free");
}

Matroid MakePartition(std::size_t ground_size,
                      std::vector<PartitionBlock> blocks) {
  Subset covered(ground_size);
  for (const auto& b : blocks) {
    RequireSameSize(b.elements.universe(), ground_size, "partition block");
    if (b.capacity < 0) ThrowInvalidInput("negative partition capacity");
    if (!(covered & b.elements).empty()) {
      ThrowInvalidInput("partition blocks overlap");
    }
    covered |= b.elements;
  }
  if (covered.count() != ground_size) {
    ThrowInvalidInput("partition blocks do not cover the ground set");
  }
  return Matroid(
      ground_size,
      [blocks = std::move(blocks)](const Subset& x) {
        for (const auto& b : blocks) {
          if (static_cast<int>((x & b.elements).count()) > b.capacity) {
            return false;
          }
        }
        return true;
      },
      "partition");
}

namespace {

int FindRoot(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Rank of the columns of `cols` (each a vector of row entries).
int ColumnRank(std::vector<std::vector<Rational>> cols) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols.front().size();
  int rank = 0;
  std::size_t pivot_row = 0;
  // Eliminate on the transposed matrix: columns are the vectors.
  for (std::size_t r = 0; r < rows && pivot_row < cols.size(); ++r) {
    std::size_t pick = pivot_row;
    while (pick < cols.size() && cols[pick][r] == 0) ++pick;
    if (pick == cols.size()) continue;
    std::swap(cols[pick], cols[pivot_row]);
    for (std::size_t c = pivot_row + 1; c < cols.size(); ++c) {
      if (cols[c][r] == 0) continue;
      const Rational factor = cols[c][r] / cols[pivot_row][r];
      for (std::size_t k = r; k < rows; ++k) {
        cols[c][k] -= factor * cols[pivot_row][k];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid MakeGraphic(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 1) ThrowInvalidInput("graphic matroid needs a vertex");
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) {
      ThrowInvalidInput("edge endpoint out of range");
    }
  }
  const std::size_t n = edges.size();
  return Matroid(
      n,
      [vertices, edges = std::move(edges)](const Subset& x) {
        std::vector<int> parent(vertices);
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if (!x.contains(i)) continue;
          const int a = FindRoot(parent, edges[i].first);
          const int b = FindRoot(parent, edges[i].second);
          if (a == b) return false;
          parent[a] = b;
        }
        return true;
      },
      "graphic");
}

Matroid MakeLinear(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) ThrowInvalidInput("linear matroid needs at least one row");
  const std::size_t n = rows.front().size();
  for (const auto& row : rows) RequireSameSize(row.size(), n, "matrix row");
  return Matroid(
      n,
      [rows = std::move(rows)](const Subset& x) {
        std::vector<std::vector<Rational>> cols;
        for (std::size_t j : x.elements()) {
          std::vector<Rational> col(rows.size());
          for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
          cols.push_back(std::move(col));
        }
        return ColumnRank(cols) == static_cast<int>(cols.size());
      },
      "linear");
}

Matroid MakeFromBases(const ExplicitBaseFamily& family) {
  if (family.bases.empty()) ThrowInvalidInput("empty base family");
  for (const auto& b : family.bases) {
    RequireSameSize(b.universe(), family.ground_size, "base");
  }
  if (!CheckBaseExchange(family)) {
    ThrowInvalidInput("base family violates the exchange axiom");
  }
  return Matroid(
      family.ground_size,
      [bases = family.bases](const Subset& x) {
        for (const auto& b : bases) {
          if (x.IsSubsetOf(b)) return true;
        }
        return false;
      },
      "explicit");
}

Matroid DualMatroid(const Matroid& m) {
  return Matroid(
      m.ground_size(),
      [m](const Subset& x) { return m.RankOf(x.Complement()) == m.rank(); },
      "dual(" + m.kind() + ")");
}

bool CheckBaseExchange(const ExplicitBaseFamily& family) {
  if (family.bases.empty()) ThrowInvalidInput("empty base family");
  const std::size_t r = family.bases.front().count();
  std::unordered_set<Subset, SubsetHash> members;
  for (const auto& b : family.bases) {
    if (b.count() != r) return false;
    members.insert(b);
  }
  for (const auto& x : family.bases) {
    for (const auto& y : family.bases) {
      for (std::size_t v : (x - y).elements()) {
        bool found = false;
        for (std::size_t u : (y - x).elements()) {
          if (members.contains(x.Exchanged(v, u))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool CheckIndependenceAxioms(const Matroid& m, std::size_t limit) {
  const std::size_t n = m.ground_size();
  if (n > limit || n > 20) {
    ThrowResourceLimit("ground set too large for exhaustive axiom check");
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> indep(total);
  auto to_subset = [n](std::size_t mask) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) s.insert(i);
    }
    return s;
  };
  for (std::size_t mask = 0; mask < total; ++mask) {
    indep[mask] = m.IsIndependent(to_subset(mask)) ? 1 : 0;
  }
  if (!indep[0]) return false;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!indep[mask]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (((mask >> i) & 1u) && !indep[mask & ~(std::size_t{1} << i)]) {
        return false;
      }
    }
  }
  for (std::size_t x = 0; x < total; ++x) {
    if (!indep[x]) continue;
    const int cx = std::popcount(x);
    for (std::size_t y = 0; y < total; ++y) {
      if (!indep[y] || std::popcount(y) <= cx) continue;
      bool augmentable = false;
      for (std::size_t i = 0; i < n && !augmentable; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        if ((y & bit) && !(x & bit) && indep[x | bit]) augmentable = true;
      }
      if (!augmentable) return false;
    }
  }
  return true;
}

std::vector<Subset> EnumerateBases(const Matroid& m, std::size_t limit) {
  if (m.ground_size() > limit) {
    ThrowResourceLimit("ground set too large to enumerate bases");
  }
  std::vector<Subset> out;
  ForEachSubsetOfSize(m.ground_size(), static_cast<std::size_t>(m.rank()),
                      [&](const Subset& x) {
                        if (m.IsIndependent(x)) out.push_back(x);
                        return true;
                      });
  return out;
}

}  // namespace valmat
