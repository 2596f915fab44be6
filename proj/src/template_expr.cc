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

#include "kindc/template_expr.h"

#include <cctype>
#include <charconv>

#include "kindc/errors.h"

namespace kindc {

TemplateExpr TemplateExpr::Number(std::int64_t value) {
  TemplateExpr e;
  e.kind_ = Kind::kNumber;
  e.number_ = value;
  return e;
}

TemplateExpr TemplateExpr::Name(std::string name) {
  TemplateExpr e;
  e.kind_ = Kind::kName;
  e.name_ = std::move(name);
  return e;
}

TemplateExpr TemplateExpr::Negate(TemplateExpr operand) {
  TemplateExpr e;
  e.kind_ = Kind::kNegate;
  e.lhs_ = std::make_shared<const TemplateExpr>(std::move(operand));
  return e;
}

TemplateExpr TemplateExpr::Binary(char op, TemplateExpr lhs, TemplateExpr rhs) {
  TemplateExpr e;
  e.kind_ = Kind::kBinary;
  e.op_ = op;
  e.lhs_ = std::make_shared<const TemplateExpr>(std::move(lhs));
  e.rhs_ = std::make_shared<const TemplateExpr>(std::move(rhs));
  return e;
}

std::set<std::string> TemplateExpr::Names() const {
  switch (kind_) {
    case Kind::kNumber:
      return {};
    case Kind::kName:
      return {name_};
    case Kind::kNegate:
      return lhs_->Names();
    case Kind::kBinary: {
      auto out = lhs_->Names();
      auto r = rhs_->Names();
      out.insert(r.begin(), r.end());
      return out;
    }
  }
  return {};
}

TemplateExpr TemplateExpr::Substitute(
    const std::map<std::string, TemplateExpr>& bindings) const {
  switch (kind_) {
    case Kind::kNumber:
      return *this;
    case Kind::kName: {
      auto it = bindings.find(name_);
      return it == bindings.end() ? *this : it->second;
    }
    case Kind::kNegate:
      return Negate(lhs_->Substitute(bindings));
    case Kind::kBinary:
      return Binary(op_, lhs_->Substitute(bindings),
                    rhs_->Substitute(bindings));
  }
  return *this;
}

namespace {

int Precedence(const TemplateExpr& e) {
  switch (e.kind()) {
    case TemplateExpr::Kind::kBinary:
      return (e.op() == '+' || e.op() == '-') ? 1 : 2;
    case TemplateExpr::Kind::kNegate:
      return 3;
    default:
      return 4;
  }
}

std::string Wrap(const TemplateExpr& e, bool parens) {
  return parens ? "(" + e.ToString() + ")" : e.ToString();
}

}  // namespace

std::string TemplateExpr::ToString() const {
  switch (kind_) {
    case Kind::kNumber:
      return std::to_string(number_);
    case Kind::kName:
      return name_;
    case Kind::kNegate:
      return "-" + Wrap(*lhs_, Precedence(*lhs_) < 3);
    case Kind::kBinary: {
      int p = Precedence(*this);
      // Left-associative: the right operand needs parentheses at equal
      // precedence.
      return Wrap(*lhs_, Precedence(*lhs_) < p) + " " + op_ + " " +
             Wrap(*rhs_, Precedence(*rhs_) <= p);
    }
  }
  return {};
}

std::int64_t TemplateExpr::Evaluate(
    const std::map<std::string, std::int64_t>& env) const {
  switch (kind_) {
    case Kind::kNumber:
      return number_;
    case Kind::kName: {
      auto it = env.find(name_);
      if (it == env.end()) throw Error("unbound template name '" + name_ + "'");
      return it->second;
    }
    case Kind::kNegate:
      return -lhs_->Evaluate(env);
    case Kind::kBinary: {
      std::int64_t l = lhs_->Evaluate(env);
      std::int64_t r = rhs_->Evaluate(env);
      switch (op_) {
        case '+':
          return l + r;
        case '-':
          return l - r;
        case '*':
          return l * r;
        case '/':
        case '%':
          if (r == 0) throw Error("division by zero in template");
          return op_ == '/' ? l / r : l % r;
      }
    }
  }
  throw Error("malformed template");
}

bool TemplateExpr::operator==(const TemplateExpr& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::kNumber:
      return number_ == o.number_;
    case Kind::kName:
      return name_ == o.name_;
    case Kind::kNegate:
      return *lhs_ == *o.lhs_;
    case Kind::kBinary:
      return op_ == o.op_ && *lhs_ == *o.lhs_ && *rhs_ == *o.rhs_;
  }
  return false;
}

namespace {

class TemplateParser {
 public:
  explicit TemplateParser(std::string_view text) : text_(text) {}

  TemplateExpr Parse() {
    TemplateExpr e = Sum();
    Skip();
    if (at_ != text_.size()) {
      Fail("unexpected '" + std::string(1, text_[at_]) + "'");
    }
    return e;
  }

 private:
  void Skip() {
    while (at_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[at_]))) {
      ++at_;
    }
  }

  bool Eat(char c) {
    Skip();
    if (at_ < text_.size() && text_[at_] == c) {
      ++at_;
      return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& message) {
    throw SyntaxError(SourcePos{1, at_ + 1}, "in template: " + message);
  }

  TemplateExpr Sum() {
    TemplateExpr e = Product();
    for (;;) {
      if (Eat('+')) {
        e = TemplateExpr::Binary('+', e, Product());
      } else if (Eat('-')) {
        e = TemplateExpr::Binary('-', e, Product());
      } else {
        return e;
      }
    }
  }

  TemplateExpr Product() {
    TemplateExpr e = Unary();
    for (;;) {
      char op = 0;
      for (char c : {'*', '/', '%'}) {
        if (Eat(c)) {
          op = c;
          break;
        }
      }
      if (!op) return e;
      e = TemplateExpr::Binary(op, e, Unary());
    }
  }

  TemplateExpr Unary() {
    if (Eat('-')) return TemplateExpr::Negate(Unary());
    return Atom();
  }

  TemplateExpr Atom() {
    Skip();
    if (at_ >= text_.size()) Fail("unexpected end of template");
    if (Eat('(')) {
      TemplateExpr e = Sum();
      if (!Eat(')')) Fail("expected ')'");
      return e;
    }
    char c = text_[at_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = at_;
      while (at_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[at_]))) {
        ++at_;
      }
      std::int64_t v = 0;
      auto [ptr, ec] =
          std::from_chars(text_.data() + start, text_.data() + at_, v);
      if (ec != std::errc()) {
        at_ = start;
        Fail("integer out of range");
      }
      return TemplateExpr::Number(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = at_;
      while (at_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[at_])) ||
              text_[at_] == '_' || text_[at_] == '.')) {
        ++at_;
      }
      return TemplateExpr::Name(std::string(text_.substr(start, at_ - start)));
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

}  // namespace

TemplateExpr ParseTemplate(std::string_view text) {
  return TemplateParser(text).Parse();
}

}  // namespace kindc
