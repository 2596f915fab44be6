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

#include "oracles.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace kindc::testing {

namespace {

std::int64_t Value(const Operand& o, std::int64_t x) {
  if (const auto* n = std::get_if<std::int64_t>(&o)) return *n;
  return x;
}

bool Holds(const ContractExpr& e, std::int64_t x) {
  for (const auto& c : e.conjuncts()) {
    std::int64_t l = Value(c.lhs, x);
    std::int64_t r = Value(c.rhs, x);
    bool ok = false;
    switch (c.op) {
      case CmpOp::kLt:
        ok = l < r;
        break;
      case CmpOp::kLe:
        ok = l <= r;
        break;
      case CmpOp::kEq:
        ok = l == r;
        break;
      case CmpOp::kNe:
        ok = l != r;
        break;
      case CmpOp::kGe:
        ok = l >= r;
        break;
      case CmpOp::kGt:
        ok = l > r;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool ExhaustiveImplies(const ContractExpr& a, const ContractExpr& b,
                       std::int64_t lo, std::int64_t hi) {
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (Holds(a, x) && !Holds(b, x)) return false;
  }
  return true;
}

std::optional<std::size_t> ShortestPathByEnumeration(
    int num_nodes, const std::vector<std::pair<int, int>>& edges, int from,
    int to) {
  if (from == to) return 0;
  std::optional<std::size_t> best;
  std::vector<bool> on_path(num_nodes, false);
  std::function<void(int, std::size_t)> walk = [&](int at, std::size_t len) {
    if (at == to) {
      if (!best || len < *best) best = len;
      return;
    }
    on_path[at] = true;
    for (const auto& [f, t] : edges) {
      if (f == at && !on_path[t]) walk(t, len + 1);
    }
    on_path[at] = false;
  };
  walk(from, 0);
  return best;
}

namespace {

class CompatOracle {
 public:
  explicit CompatOracle(const OntologyCase& c) : c_(c) {
    std::vector<std::pair<int, int>> full;
    for (const auto& e : c.edges) {
      if (e.full) full.emplace_back(e.from, e.to);
    }
    dist_.assign(c.num_kinds,
                 std::vector<std::optional<std::size_t>>(c.num_kinds));
    for (int a = 0; a < c.num_kinds; ++a) {
      for (int b = 0; b < c.num_kinds; ++b) {
        dist_[a][b] = ShortestPathByEnumeration(c.num_kinds, full, a, b);
      }
    }
  }

  bool Compatible() const {
    const auto& req = c_.required;
    const auto& prov = c_.provided;
    // Injective assignment of required methods to provided ones.
    std::vector<int> pick(req.size(), -1);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
      if (i == req.size()) return true;
      for (std::size_t j = 0; j < prov.size(); ++j) {
        if (std::find(pick.begin(), pick.end(), int(j)) != pick.end()) {
          continue;
        }
        if (!MethodMatches(req[i], prov[j])) continue;
        pick[i] = int(j);
        if (assign(i + 1)) return true;
        pick[i] = -1;
      }
      return false;
    };
    return assign(0);
  }

 private:
  bool Reach(int a, int b) const {
    return a != b && dist_[a][b] && *dist_[a][b] <= c_.max_chain_len;
  }

  bool MethodMatches(const OntologyMethod& r, const OntologyMethod& p) const {
    if (r.name != p.name || r.return_type != p.return_type) return false;
    if (r.params.size() < p.params.size()) return false;
    if (r.params.size() > p.params.size() && !c_.ground) return false;
    if (p.params.empty()) return r.params.empty();
    // Every function from consumer parameters to provider parameters.
    std::vector<std::size_t> target(r.params.size(), 0);
    for (;;) {
      if (Covers(r, p, target)) return true;
      std::size_t k = 0;
      while (k < target.size() && ++target[k] == p.params.size()) {
        target[k++] = 0;
      }
      if (k == target.size()) return false;
    }
  }

  bool Covers(const OntologyMethod& r, const OntologyMethod& p,
              const std::vector<std::size_t>& target) const {
    for (std::size_t j = 0; j < p.params.size(); ++j) {
      std::vector<const OntologyParam*> group;
      for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i] == j) group.push_back(&r.params[i]);
      }
      if (group.empty()) return false;
      const OntologyParam& out = p.params[j];
      bool same = group.size() == 1 && group[0]->name == out.name &&
                  group[0]->type_name == out.type_name &&
                  group[0]->kind == out.kind;
      if (!same && !Converts(group, out)) return false;
    }
    return true;
  }

  // Some ordering of distinct kinds a_1..a_n with a_i reaching a_{i+1} and
  // a_n reaching the target kind.
  bool Converts(std::vector<const OntologyParam*> group,
                const OntologyParam& out) const {
    if (!c_.ground || !out.kind) return false;
    std::vector<int> kinds;
    for (const auto* p : group) {
      if (!p->kind || *p->kind == *out.kind) return false;
      kinds.push_back(*p->kind);
    }
    std::sort(kinds.begin(), kinds.end());
    if (std::adjacent_find(kinds.begin(), kinds.end()) != kinds.end()) {
      return false;
    }
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < kinds.size(); ++i) {
        ok = Reach(kinds[i], kinds[i + 1]);
      }
      if (ok && Reach(kinds.back(), *out.kind)) return true;
    } while (std::next_permutation(kinds.begin(), kinds.end()));
    return false;
  }

  const OntologyCase& c_;
  std::vector<std::vector<std::optional<std::size_t>>> dist_;
};

}  // namespace

bool ExhaustiveCompatible(const OntologyCase& c) {
  return CompatOracle(c).Compatible();
}

// ------------------------------------------------------- Java-like checker

namespace {

enum class Tk { kIdent, kInt, kString, kPunct, kEnd };

struct Token {
  Tk kind;
  std::string text;
  std::size_t line;
};

const std::set<std::string> kKeywords = {"public", "private", "final", "class",
                                         "if",     "throw",   "new",   "return",
                                         "this",   "null",    "true",  "false"};

class JavaLikeChecker {
 public:
  explicit JavaLikeChecker(const std::string& src) { Lex(src); }

  std::optional<std::string> Run() {
    try {
      ClassDecl();
      if (Peek().kind != Tk::kEnd) Fail("trailing input");
    } catch (const std::string& e) {
      return e;
    }
    return std::nullopt;
  }

 private:
  void Lex(const std::string& s) {
    std::size_t i = 0;
    std::size_t line = 1;
    while (i < s.size()) {
      char c = s[i];
      if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (s.compare(i, 2, "//") == 0) {
        while (i < s.size() && s[i] != '\n') ++i;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = i;
        while (
            i < s.size() &&
            (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
          ++i;
        }
        toks_.push_back({Tk::kIdent, s.substr(b, i - b), line});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        toks_.push_back({Tk::kInt, s.substr(b, i - b), line});
      } else if (c == '"') {
        std::size_t b = ++i;
        while (i < s.size() && s[i] != '"') {
          if (s[i] == '\\') ++i;
          if (s[i] == '\n') {
            lex_error_ = "newline in string";
          }
          ++i;
        }
        if (i >= s.size()) {
          lex_error_ = "unterminated string";
          return;
        }
        toks_.push_back({Tk::kString, s.substr(b, i - b), line});
        ++i;
      } else {
        static const char* kTwo[] = {"&&", "||", "<=", ">=", "==", "!="};
        bool two = false;
        for (const char* t : kTwo) {
          if (s.compare(i, 2, t) == 0) {
            toks_.push_back({Tk::kPunct, t, line});
            i += 2;
            two = true;
            break;
          }
        }
        if (two) continue;
        if (std::string("(){};,.=+-*/%!<>").find(c) == std::string::npos) {
          lex_error_ = std::string("bad character '") + c + "'";
          return;
        }
        toks_.push_back({Tk::kPunct, std::string(1, c), line});
        ++i;
      }
    }
  }

  const Token& Peek(std::size_t ahead = 0) const {
    static const Token kEnd{Tk::kEnd, "", 0};
    return at_ + ahead < toks_.size() ? toks_[at_ + ahead] : kEnd;
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw "line " + std::to_string(Peek().line) + ": " + msg + " at '" +
        Peek().text + "'";
  }

  bool Is(const std::string& text) const {
    return Peek().kind != Tk::kString && Peek().text == text;
  }

  void Expect(const std::string& text) {
    if (!Is(text)) Fail("expected '" + text + "'");
    ++at_;
  }

  std::string Ident() {
    if (Peek().kind != Tk::kIdent || kKeywords.count(Peek().text)) {
      Fail("expected identifier");
    }
    return toks_[at_++].text;
  }

  void ClassDecl() {
    if (!lex_error_.empty()) throw lex_error_;
    Expect("public");
    Expect("final");
    Expect("class");
    class_name_ = Ident();
    Expect("{");
    while (!Is("}")) Member();
    Expect("}");
  }

  void Member() {
    if (Is("private")) {
      ++at_;
      Expect("final");
      Ident();
      fields_.insert(Ident());
      Expect(";");
      return;
    }
    Expect("public");
    std::string first = Ident();
    std::set<std::string> scope = fields_;
    scope.insert("this");
    if (Is("(")) {
      if (first != class_name_) Fail("constructor name mismatch");
    } else {
      std::string name = Ident();
      if (!methods_.insert(name).second) Fail("duplicate method " + name);
    }
    Expect("(");
    std::set<std::string> params;
    if (!Is(")")) {
      for (;;) {
        Ident();
        std::string param = Ident();
        if (!params.insert(param).second) Fail("duplicate parameter");
        scope.insert(param);
        if (!Is(",")) break;
        ++at_;
      }
    }
    Expect(")");
    Block(scope);
  }

  void Block(std::set<std::string> scope) {
    Expect("{");
    while (!Is("}")) Statement(scope);
    Expect("}");
  }

  void Statement(std::set<std::string>& scope) {
    if (Is("if")) {
      ++at_;
      Expect("(");
      Expr(scope);
      Expect(")");
      Expect("throw");
      Expect("new");
      Ident();
      Expect("(");
      if (Peek().kind != Tk::kString) Fail("expected string");
      ++at_;
      Expect(")");
      Expect(";");
      return;
    }
    if (Is("return")) {
      ++at_;
      Expr(scope);
      Expect(";");
      return;
    }
    if (Is("this")) {
      ++at_;
      Expect(".");
      std::string field = Ident();
      if (!fields_.count(field)) Fail("unknown field " + field);
      Expect("=");
      Expr(scope);
      Expect(";");
      return;
    }
    if (Peek().kind == Tk::kIdent && Peek(1).kind == Tk::kIdent) {
      Ident();
      std::string var = Ident();
      Expect("=");
      Expr(scope);
      if (!scope.insert(var).second) Fail("redeclared " + var);
      Expect(";");
      return;
    }
    Expr(scope);
    Expect(";");
  }

  void Expr(const std::set<std::string>& s) { Binary(s, 0); }

  void Binary(const std::set<std::string>& s, int level) {
    static const std::vector<std::vector<std::string>> kLevels = {
        {"||"},
        {"&&"},
        {"==", "!=", "<", "<=", ">", ">="},
        {"+", "-"},
        {"*", "/", "%"}};
    if (level == int(kLevels.size())) {
      Unary(s);
      return;
    }
    Binary(s, level + 1);
    for (;;) {
      const auto& ops = kLevels[level];
      if (Peek().kind != Tk::kPunct ||
          std::find(ops.begin(), ops.end(), Peek().text) == ops.end()) {
        return;
      }
      ++at_;
      Binary(s, level + 1);
    }
  }

  void Unary(const std::set<std::string>& s) {
    if (Is("!") || Is("-")) {
      ++at_;
      Unary(s);
      return;
    }
    if (Is("(")) {
      ++at_;
      Expr(s);
      Expect(")");
      return;
    }
    if (Peek().kind == Tk::kInt) {
      ++at_;
      return;
    }
    if (Is("null") || Is("true") || Is("false")) {
      ++at_;
      return;
    }
    std::string name = Ident();
    if (!s.count(name)) Fail("undeclared " + name);
    while (Is(".")) {
      ++at_;
      Ident();
    }
    if (Is("(")) {
      ++at_;
      if (!Is(")")) {
        for (;;) {
          Expr(s);
          if (!Is(",")) break;
          ++at_;
        }
      }
      Expect(")");
    }
  }

  std::vector<Token> toks_;
  std::string lex_error_;
  std::size_t at_ = 0;
  std::string class_name_;
  std::set<std::string> fields_;
  std::set<std::string> methods_;
};

}  // namespace

std::optional<std::string> CheckJavaLike(const std::string& source) {
  return JavaLikeChecker(source).Run();
}

SimulatedCall SimulatePlan(const PlanMethod& method,
                           const std::map<std::string, std::int64_t>& args) {
  std::map<std::string, std::int64_t> env = args;
  for (const auto& step : method.steps) {
    env[step.var] = step.expr.Evaluate(env);
  }
  SimulatedCall call;
  call.method = method.delegate_method;
  for (const auto& g : method.guards) {
    if (!g.Evaluate(env)) {
      call.violation = GuardText(g);
      return call;
    }
  }
  for (const auto& a : method.arguments) call.args.push_back(env.at(a));
  return call;
}

}  // namespace kindc::testing
