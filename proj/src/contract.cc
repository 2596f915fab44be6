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

#include "kindc/contract.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "kindc/errors.h"

namespace kindc {

std::string_view ToString(CmpOp op) {
  switch (op) {
    case CmpOp::kLt:
      return "<";
    case CmpOp::kLe:
      return "<=";
    case CmpOp::kEq:
      return "==";
    case CmpOp::kNe:
      return "!=";
    case CmpOp::kGe:
      return ">=";
    case CmpOp::kGt:
      return ">";
  }
  return "?";
}

namespace {

std::string OperandText(const Operand& o) {
  if (auto* v = std::get_if<std::int64_t>(&o)) return std::to_string(*v);
  if (auto* v = std::get_if<Variable>(&o)) return v->name;
  return "null";
}

}  // namespace

std::string Comparison::ToString() const {
  return OperandText(lhs) + std::string(kindc::ToString(op)) + OperandText(rhs);
}

ContractExpr::ContractExpr(std::vector<Comparison> conjuncts) {
  for (auto& c : conjuncts) {
    if (std::find(conjuncts_.begin(), conjuncts_.end(), c) ==
        conjuncts_.end()) {
      conjuncts_.push_back(std::move(c));
    }
  }
}

std::set<std::string> ContractExpr::Variables() const {
  std::set<std::string> out;
  for (const auto& c : conjuncts_) {
    if (auto* v = std::get_if<Variable>(&c.lhs)) out.insert(v->name);
    if (auto* v = std::get_if<Variable>(&c.rhs)) out.insert(v->name);
  }
  return out;
}

ContractExpr ContractExpr::Renamed(
    const std::map<std::string, std::string>& names) const {
  auto rename = [&](Operand o) {
    if (auto* v = std::get_if<Variable>(&o)) {
      if (auto it = names.find(v->name); it != names.end()) {
        v->name = it->second;
      }
    }
    return o;
  };
  std::vector<Comparison> out;
  for (const auto& c : conjuncts_) {
    out.push_back({rename(c.lhs), c.op, rename(c.rhs)});
  }
  return ContractExpr(std::move(out));
}

ContractExpr ContractExpr::And(const ContractExpr& other) const {
  std::vector<Comparison> all = conjuncts_;
  all.insert(all.end(), other.conjuncts_.begin(), other.conjuncts_.end());
  return ContractExpr(std::move(all));
}

std::string ContractExpr::ToString() const {
  if (conjuncts_.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < conjuncts_.size(); ++i) {
    if (i > 0) out += " && ";
    out += conjuncts_[i].ToString();
  }
  return out;
}

bool ContractExpr::Evaluate(
    const std::map<std::string, std::int64_t>& assignment) const {
  for (const auto& c : conjuncts_) {
    bool lhs_null = std::holds_alternative<NullLiteral>(c.lhs);
    bool rhs_null = std::holds_alternative<NullLiteral>(c.rhs);
    if (lhs_null || rhs_null) {
      bool equal = lhs_null && rhs_null;
      if ((c.op == CmpOp::kEq) != equal) return false;
      continue;
    }
    auto value = [&](const Operand& o) -> std::int64_t {
      if (auto* v = std::get_if<std::int64_t>(&o)) return *v;
      return assignment.at(std::get<Variable>(o).name);
    };
    std::int64_t a = value(c.lhs);
    std::int64_t b = value(c.rhs);
    bool ok = false;
    switch (c.op) {
      case CmpOp::kLt:
        ok = a < b;
        break;
      case CmpOp::kLe:
        ok = a <= b;
        break;
      case CmpOp::kEq:
        ok = a == b;
        break;
      case CmpOp::kNe:
        ok = a != b;
        break;
      case CmpOp::kGe:
        ok = a >= b;
        break;
      case CmpOp::kGt:
        ok = a > b;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

// ------------------------------------------------------------------ parser

namespace {

class ContractParser {
 public:
  explicit ContractParser(std::string_view text) : text_(text) {}

  ContractExpr Parse() {
    std::vector<Comparison> out;
    ParseConjunction(out);
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + Rest() + "'");
    if (out.empty()) Fail("empty contract");
    return ContractExpr(std::move(out));
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw SyntaxError(SourcePos{1, pos_ + 1}, what);
  }

  std::string Rest() const {
    return std::string(
        text_.substr(pos_, std::min<std::size_t>(12, text_.size() - pos_)));
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Consume(std::string_view tok) {
    SkipSpace();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    // Word tokens must not run into an identifier.
    if (std::isalpha(static_cast<unsigned char>(tok.front()))) {
      std::size_t end = pos_ + tok.size();
      if (end < text_.size() &&
          (std::isalnum(static_cast<unsigned char>(text_[end])) ||
           text_[end] == '_')) {
        return false;
      }
    }
    pos_ += tok.size();
    return true;
  }

  void ParseConjunction(std::vector<Comparison>& out) {
    ParseFactor(out);
    while (Consume("&&") || Consume("and") || Consume("∧")) {
      ParseFactor(out);
    }
  }

  void ParseFactor(std::vector<Comparison>& out) {
    SkipSpace();
    if (Consume("(")) {
      ParseConjunction(out);
      if (!Consume(")")) Fail("expected ')'");
      return;
    }
    out.push_back(ParseComparison());
  }

  Comparison ParseComparison() {
    Operand lhs = ParseOperand();
    CmpOp op = ParseOp();
    Operand rhs = ParseOperand();
    bool has_null = std::holds_alternative<NullLiteral>(lhs) ||
                    std::holds_alternative<NullLiteral>(rhs);
    if (has_null && op != CmpOp::kEq && op != CmpOp::kNe) {
      Fail("null is only comparable with = and !=");
    }
    return {std::move(lhs), op, std::move(rhs)};
  }

  CmpOp ParseOp() {
    // Longest match first.
    static const std::pair<std::string_view, CmpOp> kOps[] = {
        {"<=", CmpOp::kLe}, {">=", CmpOp::kGe}, {"!=", CmpOp::kNe},
        {"==", CmpOp::kEq}, {"≤", CmpOp::kLe},  {"≥", CmpOp::kGe},
        {"≠", CmpOp::kNe},  {"<", CmpOp::kLt},  {">", CmpOp::kGt},
        {"=", CmpOp::kEq},
    };
    SkipSpace();
    for (const auto& [tok, op] : kOps) {
      if (text_.substr(pos_, tok.size()) == tok) {
        pos_ += tok.size();
        return op;
      }
    }
    Fail("expected a comparison operator");
  }

  Operand ParseOperand() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("expected an operand");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      std::int64_t v = 0;
      auto [ptr, ec] =
          std::from_chars(text_.data() + start, text_.data() + pos_, v);
      if (ec != std::errc() || ptr != text_.data() + pos_) {
        pos_ = start;
        Fail("malformed integer");
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      if (word == "null") return NullLiteral{};
      if (word == "and") {
        pos_ = start;
        Fail("expected an operand");
      }
      return Variable{std::move(word)};
    }
    Fail("expected an operand");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ContractExpr ParseContract(std::string_view text) {
  return ContractParser(text).Parse();
}

}  // namespace kindc
