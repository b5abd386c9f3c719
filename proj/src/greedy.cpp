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

#include "valmat/greedy.hpp"

namespace valmat {

Minimizer MinimizeValuatedFrom(const Valuation& omega, const Subset& start) {
  Subset x = start;
  ExtValue fx = omega.value(x);
  if (fx.is_infinite()) ThrowInvalidInput("descent start outside the domain");
  const std::size_t n = omega.ground_size();
  while (true) {
    ExtValue best = fx;
    Subset best_set = x;
    for (std::size_t u = 0; u < n; ++u) {
      if (!x.contains(u)) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (x.contains(v)) continue;
        const Subset y = x.Exchanged(u, v);
        const ExtValue fy = omega.value(y);
        if (fy < best) {
          best = fy;
          best_set = y;
        }
      }
    }
    if (!(best < fx)) return {x, fx};
    x = best_set;
    fx = best;
  }
}

Minimizer MinimizeValuated(const Valuation& omega) {
  return MinimizeValuatedFrom(omega, omega.witness_base());
}

bool IsLocalMinimum(const Valuation& omega, const Subset& x,
                    const std::vector<Rational>& shift) {
  const ExtValue fx = omega.value(x);
  if (fx.is_infinite()) return false;
  const std::size_t n = omega.ground_size();
  RequireSameSize(shift.size(), n, "shift");
  for (std::size_t u = 0; u < n; ++u) {
    if (!x.contains(u)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (x.contains(v)) continue;
      const ExtValue fy = omega.value(x.Exchanged(u, v));
      if (fy.is_infinite()) continue;
      // omega(y) - p(y) < omega(x) - p(x)  <=>  omega(y) - omega(x) < p(v) - p(u)
      if (fy.value() - fx.value() < shift[v] - shift[u]) return false;
    }
  }
  return true;
}

std::vector<Subset> MinimizerFamily(const Valuation& omega, std::size_t limit) {
  const auto dom = EnumerateDomain(omega, limit);
  if (dom.empty()) ThrowEmptyDomain("minimizer family of an empty domain");
  ExtValue best = ExtValue::Infinity();
  for (const auto& x : dom) best = std::min(best, omega.value(x));
  std::vector<Subset> out;
  for (const auto& x : dom) {
    if (omega.value(x) == best) out.push_back(x);
  }
  return out;
}

}  // namespace valmat
