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

#ifndef KINDC_CONTRACT_H_
#define KINDC_CONTRACT_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kindc {

struct NullLiteral {
  auto operator<=>(const NullLiteral&) const = default;
  bool operator==(const NullLiteral&) const = default;
};

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

using Operand = std::variant<std::int64_t, Variable, NullLiteral>;

enum class CmpOp { kLt, kLe, kEq, kNe, kGe, kGt };

std::string_view ToString(CmpOp op);

struct Comparison {
  Operand lhs;
  CmpOp op;
  Operand rhs;

  std::string ToString() const;
  auto operator<=>(const Comparison&) const = default;
  bool operator==(const Comparison&) const = default;
};

// A conjunction of comparisons. The empty conjunction is `true`.
// Duplicate conjuncts are dropped on construction, first occurrence wins.
class ContractExpr {
 public:
  ContractExpr() = default;
  explicit ContractExpr(std::vector<Comparison> conjuncts);

  const std::vector<Comparison>& conjuncts() const { return conjuncts_; }
  bool is_true() const { return conjuncts_.empty(); }

  std::set<std::string> Variables() const;
  ContractExpr Renamed(const std::map<std::string, std::string>& names) const;
  ContractExpr And(const ContractExpr& other) const;

  // Compact form: `year>1970 && thread!=null`.
  std::string ToString() const;

  // Evaluates under an integer assignment; null tests treat every variable
  // in `assignment` as non-null. Missing variables throw std::out_of_range.
  bool Evaluate(const std::map<std::string, std::int64_t>& assignment) const;

  auto operator<=>(const ContractExpr&) const = default;
  bool operator==(const ContractExpr&) const = default;

 private:
  std::vector<Comparison> conjuncts_;
};

// Whitespace-insensitive; conjunction by `and` or `&&`; `=`/`==`, `!=`,
// `<`, `<=`, `>`, `>=` and their Unicode forms. Throws SyntaxError whose
// position is line 1, column = 1-based offset into `text`.
ContractExpr ParseContract(std::string_view text);

enum class Implication { kTrue, kFalse, kUndecidable };

std::string_view ToString(Implication i);

// Decides a => b over the integers. Each variable is constrained to an
// interval minus finitely many points, or to null / non-null. Comparisons
// between two variables, or integer and null tests on the same variable,
// fall outside the fragment and yield kUndecidable. An unsatisfiable `a`
// implies everything.
Implication Implies(const ContractExpr& a, const ContractExpr& b);

}  // namespace kindc

#endif  // KINDC_CONTRACT_H_
