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

// JSON instance files, solver dispatch and reports.

#ifndef VALMAT_INSTANCE_HPP_
#define VALMAT_INSTANCE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "valmat/bruteforce.hpp"

namespace valmat {

using Json = nlohmann::json;

struct Instance {
  GroundSet ground;
  std::map<std::string, Matroid> matroids;
  std::map<std::string, Valuation> valuations;
  std::map<std::string, MnatFunction> functions;
  Json problem;
};

// Throws kInvalidInput naming the offending field.
Instance ParseInstance(const Json& doc);
// Throws kInvalidInput with the line and column of a syntax error.
Json ReadJsonFile(const std::string& path);
Instance LoadInstance(const std::string& path);

struct RunOptions {
  // Overrides problem.type and problem.k.
  std::optional<std::string> problem;
  std::optional<int> k;
  bool verify = false;
  bool brute = false;
  std::uint64_t limit = kDefaultBruteLimit;
};

struct RunOutcome {
  Json report;
  int exit_code = 0;
};

// Exit codes: 0 optimal, 2 infeasible, 3 invalid input, 4 resource limit,
// 1 otherwise (including failed checks).
int ExitCodeFor(ErrorCode code);

RunOutcome SolveInstance(const Instance& inst, const RunOptions& options);
// Re-checks a report against its instance without re-running the solver.
RunOutcome VerifyReport(const Instance& inst, const Json& report,
                        const RunOptions& options);
// Exchange-axiom check of one named valuation or function, or of all of them.
RunOutcome CheckExchange(const Instance& inst,
                         const std::optional<std::string>& name);

// A random instance document for `type` on `n` elements.
Json GenerateInstance(const std::string& type, std::uint64_t seed,
                      std::size_t n);

}  // namespace valmat

#endif  // VALMAT_INSTANCE_HPP_
