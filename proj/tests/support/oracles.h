// Copyright 2026 The kindc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent oracles: exhaustive evaluation and enumeration.

#ifndef KINDC_TESTS_SUPPORT_ORACLES_H_
#define KINDC_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "generators.h"
#include "kindc/codegen.h"
#include "kindc/contract.h"

namespace kindc::testing {

// Evaluates a => b for every integer value of its single variable in
// [lo, hi]. Comparisons are evaluated here, not by the library.
bool ExhaustiveImplies(const ContractExpr& a, const ContractExpr& b,
                       std::int64_t lo = -1000, std::int64_t hi = 1000);

// Length of the shortest path by enumerating every simple path.
std::optional<std::size_t> ShortestPathByEnumeration(
    int num_nodes, const std::vector<std::pair<int, int>>& edges, int from,
    int to);

// Decides compatibility of an ontology case by exhaustive feature matching,
// parameter assignment and path search.
bool ExhaustiveCompatible(const OntologyCase& c);

// Accepts the emitted Java-like adapter subset; returns the first error.
std::optional<std::string> CheckJavaLike(const std::string& source);

struct SimulatedCall {
  std::string method;
  std::vector<std::int64_t> args;
  // Set when a guard failed before the call.
  std::optional<std::string> violation;
};

// Runs one plan method on integer argument values.
SimulatedCall SimulatePlan(const PlanMethod& method,
                           const std::map<std::string, std::int64_t>& args);

}  // namespace kindc::testing

#endif  // KINDC_TESTS_SUPPORT_ORACLES_H_
