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

#include "kindc/kind_store.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "kindc/errors.h"

namespace kindc {

std::string SourcePos::ToString() const {
  return std::to_string(line) + ":" + std::to_string(column);
}

PositionedError::PositionedError(SourcePos pos, const std::string& message)
    : Error(pos.ToString() + ": " + message), pos_(pos), message_(message) {}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool IsDottedName(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = s.find('.', start);
    std::string_view seg =
        s.substr(start, dot == std::string_view::npos ? std::string_view::npos
                                                      : dot - start);
    if (!IsIdentifier(seg)) return false;
    if (dot == std::string_view::npos) return true;
    start = dot + 1;
  }
}

// ---------------------------------------------------------------- AssetId

AssetId::AssetId(std::string name, Sort sort)
    : name_(std::move(name)), sort_(sort) {
  if (!IsDottedName(name_)) {
    throw InvalidAssetError("malformed asset name '" + name_ + "'");
  }
}

std::string_view AssetId::leaf() const {
  std::string_view v = name_;
  auto dot = v.rfind('.');
  return dot == std::string_view::npos ? v : v.substr(dot + 1);
}

std::string AssetId::ToString() const {
  return (is_kind() ? "kind:" : "instance:") + name_;
}

// --------------------------------------------------------------- KindExpr

KindExpr KindExpr::Atom(std::string kind_name) {
  // Validates the name.
  AssetId id = AssetId::Kind(std::move(kind_name));
  KindExpr e;
  e.atom_ = id.name();
  return e;
}

KindExpr KindExpr::Compose(ComposeOp op, std::vector<KindExpr> operands) {
  if (operands.size() < 2) {
    throw InvalidAssetError("composition needs at least two operands");
  }
  KindExpr e;
  e.op_ = op;
  e.operands_ = std::move(operands);
  return e;
}

std::vector<std::string> KindExpr::Atoms() const {
  std::vector<std::string> out;
  if (is_atom()) {
    out.push_back(atom_);
    return out;
  }
  for (const auto& o : operands_) {
    auto sub = o.Atoms();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

char OpChar(ComposeOp op) {
  switch (op) {
    case ComposeOp::kPlus:
      return '+';
    case ComposeOp::kTensor:
      return '*';
    case ComposeOp::kCirc:
      return '@';
  }
  return '+';
}

}  // namespace

std::string KindExpr::ToString() const {
  if (is_atom()) return atom_;
  std::string out;
  for (std::size_t i = 0; i < operands_.size(); ++i) {
    if (i > 0) {
      out += ' ';
      out += OpChar(op_);
      out += ' ';
    }
    const auto& o = operands_[i];
    out += o.is_atom() ? o.ToString() : "(" + o.ToString() + ")";
  }
  return out;
}

namespace {

class KindExprParser {
 public:
  explicit KindExprParser(std::string_view text) : text_(text) {}

  KindExpr Parse() {
    KindExpr e = ParseSeq();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw InvalidAssetError("kind expression '" + std::string(text_) +
                            "': " + what);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::optional<ComposeOp> PeekOp() {
    SkipSpace();
    if (pos_ >= text_.size()) return std::nullopt;
    switch (text_[pos_]) {
      case '+':
        return ComposeOp::kPlus;
      case '*':
        return ComposeOp::kTensor;
      case '@':
        return ComposeOp::kCirc;
      default:
        return std::nullopt;
    }
  }

  KindExpr ParseSeq() {
    std::vector<KindExpr> operands;
    operands.push_back(ParseTerm());
    std::optional<ComposeOp> op;
    while (auto next = PeekOp()) {
      if (op && *op != *next) Fail("mixed operators need parentheses");
      op = next;
      ++pos_;
      operands.push_back(ParseTerm());
    }
    if (!op) return std::move(operands.front());
    return KindExpr::Compose(*op, std::move(operands));
  }

  KindExpr ParseTerm() {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      KindExpr e = ParseSeq();
      SkipSpace();
      if (pos_ >= text_.size() || text_[pos_] != ')') Fail("expected ')'");
      ++pos_;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) Fail("expected a kind name");
    return KindExpr::Atom(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KindExpr ParseKindExpr(std::string_view text) {
  return KindExprParser(text).Parse();
}

// --------------------------------------------------------------- Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ConflictError("belief degree with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) {
    throw ConflictError("belief degree outside [0, 1]");
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ConflictError("belief degree must be written p/q");
  }
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConflictError("malformed belief degree '" + std::string(text) +
                          "'");
    }
    return v;
  };
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::string Rational::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // Both are within [0, 1], so the products cannot overflow for sane input.
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TruthStructure TruthStructure::Claim(std::string author) {
  return {TruthLevel::kClaim, std::nullopt, std::move(author)};
}

TruthStructure TruthStructure::Belief(Rational degree, std::string author) {
  return {TruthLevel::kBelief, degree, std::move(author)};
}

InterpEdge InterpEdge::Identity(const AssetId& asset) {
  return InterpEdge{asset,        asset, InterpKind::kFull, "id", "",
                    std::nullopt, true};
}

std::string InterpEdge::Key() const {
  return from.name() + "->" + to.name() + "#" + agent;
}

std::string ToString(const Fact& fact) {
  struct Printer {
    std::string operator()(const Realization& r) const {
      return r.instance.name() + " : " + r.kind.ToString();
    }
    std::string operator()(const Inheritance& r) const {
      return r.child.name() + " < " + r.parent.name();
    }
    std::string operator()(const Inclusion& r) const {
      return r.part.name() + " <p " + r.whole.name();
    }
    std::string operator()(const FullEquiv& r) const {
      return r.a.name() + " == " + r.b.name();
    }
    std::string operator()(const PartialEquiv& r) const {
      return r.lesser.name() + " <. " + r.greater.name();
    }
    std::string operator()(const TextualEquiv& r) const {
      return r.asset.name() + " = \"" + r.literal + "\"";
    }
    std::string operator()(const Interpretation& r) const {
      return r.edge.from.name() +
             (r.edge.kind == InterpKind::kFull ? " ~> " : " -> ") +
             r.edge.to.name() + " by " + r.edge.agent;
    }
  };
  return std::visit(Printer{}, fact);
}

// ---------------------------------------------------------------- Context

namespace {

void RequireSort(const AssetId& id, Sort sort, const char* role) {
  if (id.sort() != sort) {
    throw InvalidAssetError(std::string(role) + " must be a " +
                            (sort == Sort::kKind ? "kind" : "instance") +
                            ", got " + id.ToString());
  }
}

using Graph = std::map<AssetId, std::set<AssetId>>;

bool Reaches(const Graph& g, const AssetId& from, const AssetId& to) {
  std::set<AssetId> seen;
  std::vector<AssetId> stack{from};
  while (!stack.empty()) {
    AssetId cur = stack.back();
    stack.pop_back();
    if (cur == to) return true;
    if (!seen.insert(cur).second) continue;
    auto it = g.find(cur);
    if (it == g.end()) continue;
    for (const auto& n : it->second) stack.push_back(n);
  }
  return false;
}

// All pairs (a, b), a != b, with b reachable from a.
std::set<std::pair<AssetId, AssetId>> TransitivePairs(const Graph& g) {
  std::set<std::pair<AssetId, AssetId>> out;
  for (const auto& [start, _] : g) {
    std::set<AssetId> seen;
    std::vector<AssetId> stack(g.at(start).begin(), g.at(start).end());
    while (!stack.empty()) {
      AssetId cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      if (cur != start) out.emplace(start, cur);
      auto it = g.find(cur);
      if (it == g.end()) continue;
      for (const auto& n : it->second) stack.push_back(n);
    }
  }
  return out;
}

void CheckRenames(const CanonicalizationRule& rule) {
  std::set<std::string> values;
  for (const auto& [from, to] : rule.feature_renames) {
    if (!IsIdentifier(from) || !IsIdentifier(to)) {
      throw ConflictError("rename '" + from + "=" + to +
                          "' is not between identifiers");
    }
    if (!values.insert(to).second) {
      throw ConflictError("renames of " + rule.source.name() +
                          " are not injective (" + to + ")");
    }
  }
  // A rename target that is itself renamed elsewhere would make the
  // canonical form depend on how often the rule is applied.
  for (const auto& [from, to] : rule.feature_renames) {
    auto it = rule.feature_renames.find(to);
    if (it != rule.feature_renames.end() && it->second != to) {
      throw ConflictError("rename chain " + from + "=" + to + "=" + it->second +
                          " in rule for " + rule.source.name());
    }
  }
}

}  // namespace

Context::Context(std::string label) : label_(std::move(label)) {}

Context Context::Add(Assertion a) const {
  Context next = *this;
  next.derived_.clear();
  next.closed_ = false;
  next.Insert(std::move(a));
  return next;
}

void Context::Insert(Assertion a) {
  if (a.provenance && a.provenance->level == TruthLevel::kBelief &&
      !a.provenance->degree) {
    throw ConflictError("belief without a degree");
  }
  if (a.provenance && a.provenance->level == TruthLevel::kClaim &&
      a.provenance->degree) {
    throw ConflictError("claims carry no degree");
  }

  Graph inheritance;
  Graph inclusion;
  auto build_graphs = [&] {
    for (const auto& existing : asserted_) {
      if (auto* inh = std::get_if<Inheritance>(&existing.fact)) {
        inheritance[inh->child].insert(inh->parent);
      } else if (auto* inc = std::get_if<Inclusion>(&existing.fact)) {
        inclusion[inc->part].insert(inc->whole);
      }
    }
  };

  if (auto* r = std::get_if<Realization>(&a.fact)) {
    RequireSort(r->instance, Sort::kInstance, "realizing asset");
  } else if (auto* inh = std::get_if<Inheritance>(&a.fact)) {
    RequireSort(inh->child, Sort::kKind, "inheritance child");
    RequireSort(inh->parent, Sort::kKind, "inheritance parent");
    if (inh->child == inh->parent) return;
    build_graphs();
    if (Reaches(inheritance, inh->parent, inh->child)) {
      throw CycleError("inheritance " + inh->child.name() + " < " +
                       inh->parent.name() + " closes a cycle");
    }
  } else if (auto* inc = std::get_if<Inclusion>(&a.fact)) {
    RequireSort(inc->part, Sort::kInstance, "inclusion part");
    RequireSort(inc->whole, Sort::kInstance, "inclusion whole");
    if (inc->part == inc->whole) return;
    build_graphs();
    if (Reaches(inclusion, inc->whole, inc->part)) {
      throw CycleError("inclusion " + inc->part.name() + " <p " +
                       inc->whole.name() + " closes a cycle");
    }
  } else if (auto* fe = std::get_if<FullEquiv>(&a.fact)) {
    if (fe->a.sort() != fe->b.sort()) {
      throw InvalidAssetError("equivalence across sorts");
    }
    if (fe->a == fe->b) return;
  } else if (auto* pe = std::get_if<PartialEquiv>(&a.fact)) {
    if (pe->lesser.sort() != pe->greater.sort()) {
      throw InvalidAssetError("equivalence across sorts");
    }
    if (pe->lesser == pe->greater) return;
  } else if (auto* te = std::get_if<TextualEquiv>(&a.fact)) {
    if (auto bound = LiteralOf(te->asset); bound && *bound != te->literal) {
      throw ConflictError(te->asset.name() + " is already bound to \"" +
                          *bound + "\", cannot rebind to \"" + te->literal +
                          "\"");
    }
  } else if (auto* in = std::get_if<Interpretation>(&a.fact)) {
    const InterpEdge& e = in->edge;
    if (e.is_identity || e.from == e.to) {
      throw InvalidAssetError("identity interpretations are implicit");
    }
    RequireSort(e.from, Sort::kKind, "interpretation source");
    RequireSort(e.to, Sort::kKind, "interpretation target");
    if (!IsIdentifier(e.agent)) {
      throw InvalidAssetError("interpretation agent '" + e.agent +
                              "' is not an identifier");
    }
  }
  asserted_.insert(std::move(a));
}

Context Context::AddRule(CanonicalizationRule rule) const {
  RequireSort(rule.source, Sort::kKind, "canonicalization source");
  RequireSort(rule.target, Sort::kKind, "canonicalization target");
  CheckRenames(rule);
  if (auto it = rules_.find(rule.source); it != rules_.end()) {
    if (it->second.target == rule.target &&
        it->second.feature_renames == rule.feature_renames) {
      return *this;
    }
    throw ConflictError("ambiguous canonicalization: " + rule.source.name() +
                        " already maps to " + it->second.target.name());
  }
  if (rule.source != rule.target) {
    if (auto it = rules_.find(rule.target);
        it != rules_.end() && it->second.target != rule.target) {
      throw ConflictError("canonical target " + rule.target.name() +
                          " is not itself canonical");
    }
  }
  for (const auto& [src, other] : rules_) {
    if (other.target == rule.source && rule.target != rule.source) {
      throw ConflictError(rule.source.name() + " is the canonical target of " +
                          src.name() + " and cannot map elsewhere");
    }
  }
  Context next = *this;
  next.derived_.clear();
  next.closed_ = false;
  next.rules_.emplace(rule.source, std::move(rule));
  return next;
}

Context Context::AddGround(Ground ground) const {
  RequireSort(ground.kind, Sort::kKind, "ground");
  Context next = *this;
  next.derived_.clear();
  next.closed_ = false;
  next.grounds_.insert(std::move(ground));
  return next;
}

Context Context::Merge(const Context& other) const {
  Context next = *this;
  next.derived_.clear();
  next.closed_ = false;
  for (const auto& a : other.asserted_) next.Insert(a);
  for (const auto& [_, rule] : other.rules_) next = next.AddRule(rule);
  for (const auto& g : other.grounds_) next.grounds_.insert(g);
  return next;
}

std::set<Fact> Context::Facts() const {
  std::set<Fact> out = derived_;
  for (const auto& a : asserted_) out.insert(a.fact);
  return out;
}

std::set<AssetId> Context::Assets() const {
  std::set<AssetId> out;
  auto add_expr = [&](const KindExpr& e) {
    for (const auto& atom : e.Atoms()) out.insert(AssetId::Kind(atom));
  };
  for (const auto& f : Facts()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Realization>) {
            out.insert(v.instance);
            add_expr(v.kind);
          } else if constexpr (std::is_same_v<T, Inheritance>) {
            out.insert(v.child);
            out.insert(v.parent);
          } else if constexpr (std::is_same_v<T, Inclusion>) {
            out.insert(v.part);
            out.insert(v.whole);
          } else if constexpr (std::is_same_v<T, FullEquiv>) {
            out.insert(v.a);
            out.insert(v.b);
          } else if constexpr (std::is_same_v<T, PartialEquiv>) {
            out.insert(v.lesser);
            out.insert(v.greater);
          } else if constexpr (std::is_same_v<T, TextualEquiv>) {
            out.insert(v.asset);
          } else {
            out.insert(v.edge.from);
            out.insert(v.edge.to);
          }
        },
        f);
  }
  for (const auto& [src, rule] : rules_) {
    out.insert(src);
    out.insert(rule.target);
  }
  for (const auto& g : grounds_) out.insert(g.kind);
  return out;
}

bool Context::Mentions(const AssetId& id) const {
  return Assets().count(id) > 0;
}

bool Context::IsGround(const AssetId& kind) const {
  return std::any_of(grounds_.begin(), grounds_.end(),
                     [&](const Ground& g) { return g.kind == kind; });
}

std::optional<std::string> Context::LiteralOf(const AssetId& asset) const {
  for (const auto& a : asserted_) {
    if (auto* te = std::get_if<TextualEquiv>(&a.fact);
        te && te->asset == asset) {
      return te->literal;
    }
  }
  return std::nullopt;
}

bool Context::operator==(const Context& o) const {
  return asserted_ == o.asserted_ && derived_ == o.derived_ &&
         rules_ == o.rules_ && grounds_ == o.grounds_;
}

// ---------------------------------------------------------------- Closure

namespace {

void AddOperandRealizations(const AssetId& instance, const KindExpr& e,
                            std::set<Fact>& out) {
  for (const auto& operand : e.operands()) {
    out.insert(Realization{instance, operand});
    AddOperandRealizations(instance, operand, out);
  }
}

}  // namespace

Context Close(const Context& ctx) {
  if (ctx.closed_) return ctx;
  std::set<Fact> base;
  for (const auto& a : ctx.asserted_) base.insert(a.fact);

  std::set<Fact> all = base;
  Graph inheritance;
  Graph inclusion;
  Graph partial;
  std::map<AssetId, AssetId> parent;  // union-find for full equivalence
  std::function<AssetId(const AssetId&)> find = [&](const AssetId& x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    AssetId root = find(it->second);
    parent.insert_or_assign(x, root);
    return root;
  };

  for (const auto& f : base) {
    if (auto* inh = std::get_if<Inheritance>(&f)) {
      inheritance[inh->child].insert(inh->parent);
    } else if (auto* inc = std::get_if<Inclusion>(&f)) {
      inclusion[inc->part].insert(inc->whole);
    } else if (auto* pe = std::get_if<PartialEquiv>(&f)) {
      partial[pe->lesser].insert(pe->greater);
    } else if (auto* fe = std::get_if<FullEquiv>(&f)) {
      parent.emplace(fe->a, fe->a);
      parent.emplace(fe->b, fe->b);
      AssetId ra = find(fe->a);
      AssetId rb = find(fe->b);
      if (ra != rb) parent.insert_or_assign(std::max(ra, rb), std::min(ra, rb));
    } else if (auto* r = std::get_if<Realization>(&f)) {
      AddOperandRealizations(r->instance, r->kind, all);
    }
  }

  for (const auto& [child, anc] : TransitivePairs(inheritance)) {
    all.insert(Inheritance{child, anc});
  }
  for (const auto& [part, whole] : TransitivePairs(inclusion)) {
    all.insert(Inclusion{part, whole});
  }

  std::map<AssetId, std::vector<AssetId>> classes;
  for (const auto& [x, _] : parent) classes[find(x)].push_back(x);
  for (const auto& [_, members] : classes) {
    for (const auto& a : members) {
      for (const auto& b : members) {
        if (a == b) continue;
        all.insert(FullEquiv{a, b});
        partial[a].insert(b);
      }
    }
  }
  for (const auto& [lesser, greater] : TransitivePairs(partial)) {
    all.insert(PartialEquiv{lesser, greater});
  }

  for (const auto& f : std::set<Fact>(all)) {
    auto* inh = std::get_if<Inheritance>(&f);
    if (!inh) continue;
    const AssetId& k = inh->child;
    const AssetId& l = inh->parent;
    all.insert(Interpretation{InterpEdge{l, k, InterpKind::kFull,
                                         std::string(kParentInterpAgent), "",
                                         std::nullopt, false}});
    all.insert(Interpretation{InterpEdge{k, l, InterpKind::kPartial,
                                         std::string(kParentInterpAgent), "",
                                         std::nullopt, false}});
  }

  Context out = ctx;
  out.derived_.clear();
  for (const auto& f : all) {
    if (!base.count(f)) out.derived_.insert(f);
  }
  out.closed_ = true;
  return out;
}

bool Holds(const Context& ctx, const Fact& fact) {
  // Implicit reflexive and identity judgments.
  if (auto* inh = std::get_if<Inheritance>(&fact);
      inh && inh->child == inh->parent) {
    return true;
  }
  if (auto* inc = std::get_if<Inclusion>(&fact);
      inc && inc->part == inc->whole) {
    return true;
  }
  if (auto* fe = std::get_if<FullEquiv>(&fact); fe && fe->a == fe->b) {
    return true;
  }
  if (auto* pe = std::get_if<PartialEquiv>(&fact);
      pe && pe->lesser == pe->greater) {
    return true;
  }
  const Context closed = Close(ctx);
  std::set<Fact> facts = closed.Facts();
  if (auto* in = std::get_if<Interpretation>(&fact)) {
    const InterpEdge& q = in->edge;
    if (q.from == q.to && q.kind == InterpKind::kFull) return true;
    if (!q.agent.empty()) return facts.count(fact) > 0;
    return std::any_of(facts.begin(), facts.end(), [&](const Fact& f) {
      auto* other = std::get_if<Interpretation>(&f);
      return other && other->edge.from == q.from && other->edge.to == q.to &&
             other->edge.kind == q.kind;
    });
  }
  return facts.count(fact) > 0;
}

bool ComposesToIdentity(const Context& ctx, const InterpEdge& first,
                        const InterpEdge& second) {
  if (first.to != second.from) return false;
  if (first.is_identity || second.is_identity) {
    return first.is_identity && second.is_identity;
  }
  if (first.from != second.to) return false;
  // first: L ~> K (full), second: K -> L (partial), with K < L.
  return first.kind == InterpKind::kFull &&
         second.kind == InterpKind::kPartial &&
         Holds(ctx, Inheritance{first.to, first.from});
}

}  // namespace kindc
