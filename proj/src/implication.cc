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

#include <limits>
#include <map>
#include <optional>
#include <set>

#include "kindc/contract.h"

namespace kindc {

std::string_view ToString(Implication i) {
  switch (i) {
    case Implication::kTrue:
      return "true";
    case Implication::kFalse:
      return "false";
    case Implication::kUndecidable:
      return "undecidable";
  }
  return "?";
}

namespace {

using Wide = __int128;

constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();
constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();

enum class NullState { kAny, kNull, kNonNull, kEmpty };

struct Domain {
  Wide lo = kMin;
  Wide hi = kMax;
  std::set<Wide> excluded;
  NullState null = NullState::kAny;
  bool has_int = false;
  bool has_null = false;

  // Moves the ends inward past excluded points.
  void Normalize() {
    while (lo <= hi && excluded.count(lo)) ++lo;
    while (lo <= hi && excluded.count(hi)) --hi;
  }
  bool IntEmpty() const { return lo > hi; }
};

CmpOp Flip(CmpOp op) {
  switch (op) {
    case CmpOp::kLt:
      return CmpOp::kGt;
    case CmpOp::kLe:
      return CmpOp::kGe;
    case CmpOp::kGt:
      return CmpOp::kLt;
    case CmpOp::kGe:
      return CmpOp::kLe;
    default:
      return op;
  }
}

bool Compare(Wide l, CmpOp op, Wide r) {
  switch (op) {
    case CmpOp::kLt:
      return l < r;
    case CmpOp::kLe:
      return l <= r;
    case CmpOp::kEq:
      return l == r;
    case CmpOp::kNe:
      return l != r;
    case CmpOp::kGe:
      return l >= r;
    case CmpOp::kGt:
      return l > r;
  }
  return false;
}

struct Analysis {
  bool undecidable = false;
  bool unsatisfiable = false;
  std::map<std::string, Domain> vars;
};

Analysis Analyze(const ContractExpr& e) {
  Analysis out;
  for (const auto& c : e.conjuncts()) {
    Operand lhs = c.lhs;
    Operand rhs = c.rhs;
    CmpOp op = c.op;
    bool lvar = std::holds_alternative<Variable>(lhs);
    bool rvar = std::holds_alternative<Variable>(rhs);
    if (lvar && rvar) {
      out.undecidable = true;
      return out;
    }
    if (!lvar && !rvar) {
      bool lnull = std::holds_alternative<NullLiteral>(lhs);
      bool rnull = std::holds_alternative<NullLiteral>(rhs);
      bool holds;
      if (lnull || rnull) {
        holds = (op == CmpOp::kEq) == (lnull && rnull);
      } else {
        holds = Compare(std::get<std::int64_t>(lhs), op,
                        std::get<std::int64_t>(rhs));
      }
      if (!holds) out.unsatisfiable = true;
      continue;
    }
    if (rvar) {
      std::swap(lhs, rhs);
      op = Flip(op);
    }
    Domain& d = out.vars[std::get<Variable>(lhs).name];
    if (std::holds_alternative<NullLiteral>(rhs)) {
      d.has_null = true;
      NullState want =
          op == CmpOp::kEq ? NullState::kNull : NullState::kNonNull;
      if (d.null == NullState::kAny) {
        d.null = want;
      } else if (d.null != want) {
        d.null = NullState::kEmpty;
      }
      continue;
    }
    d.has_int = true;
    Wide k = std::get<std::int64_t>(rhs);
    switch (op) {
      case CmpOp::kLt:
        d.hi = std::min(d.hi, k - 1);
        break;
      case CmpOp::kLe:
        d.hi = std::min(d.hi, k);
        break;
      case CmpOp::kGt:
        d.lo = std::max(d.lo, k + 1);
        break;
      case CmpOp::kGe:
        d.lo = std::max(d.lo, k);
        break;
      case CmpOp::kEq:
        d.lo = std::max(d.lo, k);
        d.hi = std::min(d.hi, k);
        break;
      case CmpOp::kNe:
        d.excluded.insert(k);
        break;
    }
  }
  for (auto& [_, d] : out.vars) {
    d.Normalize();
    if (d.IntEmpty() || d.null == NullState::kEmpty) out.unsatisfiable = true;
  }
  return out;
}

}  // namespace

Implication Implies(const ContractExpr& a, const ContractExpr& b) {
  Analysis da = Analyze(a);
  Analysis db = Analyze(b);
  if (da.undecidable || db.undecidable) return Implication::kUndecidable;
  std::set<std::string> names;
  for (const auto& [v, _] : da.vars) names.insert(v);
  for (const auto& [v, _] : db.vars) names.insert(v);
  for (const auto& v : names) {
    bool has_int = false;
    bool has_null = false;
    for (const auto* an : {&da, &db}) {
      if (auto it = an->vars.find(v); it != an->vars.end()) {
        has_int |= it->second.has_int;
        has_null |= it->second.has_null;
      }
    }
    if (has_int && has_null) return Implication::kUndecidable;
  }

  if (da.unsatisfiable) return Implication::kTrue;
  if (db.unsatisfiable) return Implication::kFalse;

  for (const auto& [v, want] : db.vars) {
    Domain have;
    if (auto it = da.vars.find(v); it != da.vars.end()) have = it->second;
    if (want.null != NullState::kAny && have.null != want.null) {
      return Implication::kFalse;
    }
    if (have.lo < want.lo || have.hi > want.hi) return Implication::kFalse;
    for (Wide e : want.excluded) {
      if (e >= have.lo && e <= have.hi && !have.excluded.count(e)) {
        return Implication::kFalse;
      }
    }
  }
  return Implication::kTrue;
}

}  // namespace kindc
