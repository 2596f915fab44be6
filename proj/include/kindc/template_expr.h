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

// Integer arithmetic templates attached to interpretation edges, e.g.
// "(Year - 1970) * 12 + (Month - 1)".

#ifndef KINDC_TEMPLATE_EXPR_H_
#define KINDC_TEMPLATE_EXPR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace kindc {

class TemplateExpr {
 public:
  enum class Kind { kNumber, kName, kNegate, kBinary };

  static TemplateExpr Number(std::int64_t value);
  static TemplateExpr Name(std::string name);
  static TemplateExpr Negate(TemplateExpr operand);
  // `op` is one of + - * / %.
  static TemplateExpr Binary(char op, TemplateExpr lhs, TemplateExpr rhs);

  Kind kind() const { return kind_; }
  std::int64_t number() const { return number_; }
  const std::string& name() const { return name_; }
  char op() const { return op_; }
  const TemplateExpr& lhs() const { return *lhs_; }
  const TemplateExpr& rhs() const { return *rhs_; }

  std::set<std::string> Names() const;
  // Replaces names by other expressions.
  TemplateExpr Substitute(
      const std::map<std::string, TemplateExpr>& bindings) const;
  // Minimal parentheses: "(Year - 1970) * 12 + (Month - 1)".
  std::string ToString() const;
  // Truncating division; throws Error on division by zero or unbound names.
  std::int64_t Evaluate(const std::map<std::string, std::int64_t>& env) const;

  bool operator==(const TemplateExpr& o) const;

 private:
  TemplateExpr() = default;
  Kind kind_ = Kind::kNumber;
  std::int64_t number_ = 0;
  std::string name_;
  char op_ = 0;
  std::shared_ptr<const TemplateExpr> lhs_;
  std::shared_ptr<const TemplateExpr> rhs_;
};

// Throws SyntaxError positioned at line 1, column = offset + 1.
TemplateExpr ParseTemplate(std::string_view text);

}  // namespace kindc

#endif  // KINDC_TEMPLATE_EXPR_H_
