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

// The assertion knowledge base: assets, kind expressions, the judgments
// relating them, and the inference closure over those judgments.

#ifndef KINDC_KIND_STORE_H_
#define KINDC_KIND_STORE_H_

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

enum class Sort { kKind, kInstance };

// True for `[A-Za-z_][A-Za-z0-9_]*`.
bool IsIdentifier(std::string_view s);
// True for one or more identifiers joined by '.'.
bool IsDottedName(std::string_view s);

// A named asset. The same name may denote both a kind and an instance
// (class `Date` realizes kind `Date`); the pair is the identity.
class AssetId {
 public:
  // Throws InvalidAssetError on a malformed name.
  AssetId(std::string name, Sort sort);

  static AssetId Kind(std::string name) {
    return {std::move(name), Sort::kKind};
  }
  static AssetId Instance(std::string name) {
    return {std::move(name), Sort::kInstance};
  }

  const std::string& name() const { return name_; }
  Sort sort() const { return sort_; }
  bool is_kind() const { return sort_ == Sort::kKind; }
  // Last dotted segment.
  std::string_view leaf() const;
  // "kind:Date" / "instance:Date".
  std::string ToString() const;

  auto operator<=>(const AssetId&) const = default;
  bool operator==(const AssetId&) const = default;

 private:
  std::string name_;
  Sort sort_;
};

enum class ComposeOp { kPlus, kTensor, kCirc };

// Atomic kind names and their compositions. Printed as `A + B`, `A * B`
// and `A @ B` for the three composition operators.
class KindExpr {
 public:
  static KindExpr Atom(std::string kind_name);
  // Throws InvalidAssetError for fewer than two operands.
  static KindExpr Compose(ComposeOp op, std::vector<KindExpr> operands);

  bool is_atom() const { return operands_.empty(); }
  const std::string& atom() const { return atom_; }
  ComposeOp op() const { return op_; }
  const std::vector<KindExpr>& operands() const { return operands_; }

  // Every atom reachable through compositions, sorted and de-duplicated.
  std::vector<std::string> Atoms() const;
  std::string ToString() const;

  std::strong_ordering operator<=>(const KindExpr&) const = default;
  bool operator==(const KindExpr&) const = default;

 private:
  KindExpr() = default;
  std::string atom_;
  ComposeOp op_ = ComposeOp::kPlus;
  std::vector<KindExpr> operands_;
};

// Parses the printed form back. Throws InvalidAssetError.
KindExpr ParseKindExpr(std::string_view text);

// A belief degree in [0, 1], kept normalized.
class Rational {
 public:
  // Throws ConflictError when outside [0, 1] or den == 0.
  Rational(std::int64_t num, std::int64_t den);
  static Rational Parse(std::string_view text);  // "p/q"

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string ToString() const;

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

enum class TruthLevel { kClaim, kBelief };

struct TruthStructure {
  TruthLevel level = TruthLevel::kClaim;
  std::optional<Rational> degree;  // set iff level == kBelief
  std::string author;

  static TruthStructure Claim(std::string author = {});
  static TruthStructure Belief(Rational degree, std::string author);

  auto operator<=>(const TruthStructure&) const = default;
  bool operator==(const TruthStructure&) const = default;
};

enum class InterpKind { kFull, kPartial };

struct InterpEdge {
  AssetId from;
  AssetId to;
  InterpKind kind = InterpKind::kFull;
  std::string agent;
  std::string context_label;
  // Arithmetic conversion template over the `from` and `to` kind names.
  std::optional<std::string> conversion_template;
  bool is_identity = false;

  static InterpEdge Identity(const AssetId& asset);
  // "from->to" plus agent; used for deterministic tie-breaking.
  std::string Key() const;

  auto operator<=>(const InterpEdge&) const = default;
  bool operator==(const InterpEdge&) const = default;
};

struct Realization {
  AssetId instance;
  KindExpr kind;
  auto operator<=>(const Realization&) const = default;
  bool operator==(const Realization&) const = default;
};
struct Inheritance {
  AssetId child;
  AssetId parent;
  auto operator<=>(const Inheritance&) const = default;
  bool operator==(const Inheritance&) const = default;
};
struct Inclusion {
  AssetId part;
  AssetId whole;
  auto operator<=>(const Inclusion&) const = default;
  bool operator==(const Inclusion&) const = default;
};
struct FullEquiv {
  AssetId a;
  AssetId b;
  auto operator<=>(const FullEquiv&) const = default;
  bool operator==(const FullEquiv&) const = default;
};
struct PartialEquiv {
  AssetId lesser;
  AssetId greater;
  auto operator<=>(const PartialEquiv&) const = default;
  bool operator==(const PartialEquiv&) const = default;
};
struct TextualEquiv {
  AssetId asset;
  std::string literal;
  auto operator<=>(const TextualEquiv&) const = default;
  bool operator==(const TextualEquiv&) const = default;
};
struct Interpretation {
  InterpEdge edge;
  auto operator<=>(const Interpretation&) const = default;
  bool operator==(const Interpretation&) const = default;
};

using Fact = std::variant<Realization, Inheritance, Inclusion, FullEquiv,
                          PartialEquiv, TextualEquiv, Interpretation>;

struct Assertion {
  Fact fact;
  std::optional<TruthStructure> provenance;

  auto operator<=>(const Assertion&) const = default;
  bool operator==(const Assertion&) const = default;
};

std::string ToString(const Fact& fact);

// Maps a kind to its canonical kind, renaming features along the way.
struct CanonicalizationRule {
  AssetId source;
  AssetId target;
  std::map<std::string, std::string> feature_renames;
  std::optional<TruthStructure> provenance;

  auto operator<=>(const CanonicalizationRule&) const = default;
  bool operator==(const CanonicalizationRule&) const = default;
};

struct Ground {
  AssetId kind;
  bool universal = true;
  std::optional<TruthStructure> provenance;

  auto operator<=>(const Ground&) const = default;
  bool operator==(const Ground&) const = default;
};

// Agent name used for the interpretations derived from inheritance.
inline constexpr std::string_view kParentInterpAgent = "inheritance";

// An immutable set of asserted judgments plus, once closed, everything
// derivable from them. Every mutator returns a new Context.
class Context {
 public:
  explicit Context(std::string label = "default");

  const std::string& label() const { return label_; }

  // Throws CycleError, ConflictError or InvalidAssetError. Reflexive
  // inheritance/inclusion is implicit, so asserting it is a no-op.
  Context Add(Assertion a) const;
  Context Add(Fact f) const { return Add(Assertion{std::move(f), {}}); }
  // Throws ConflictError when the source kind already has a different rule,
  // the renames are not injective, or the target is itself non-canonical.
  Context AddRule(CanonicalizationRule rule) const;
  Context AddGround(Ground ground) const;
  // Adds every asserted fact, rule and ground of `other`.
  Context Merge(const Context& other) const;

  const std::set<Assertion>& asserted() const { return asserted_; }
  const std::set<Fact>& derived() const { return derived_; }
  const std::map<AssetId, CanonicalizationRule>& rules() const {
    return rules_;
  }
  const std::set<Ground>& grounds() const { return grounds_; }
  bool closed() const { return closed_; }

  // Asserted facts (provenance dropped) together with the derived ones.
  std::set<Fact> Facts() const;
  // Every AssetId mentioned anywhere.
  std::set<AssetId> Assets() const;
  bool Mentions(const AssetId& id) const;
  bool IsGround(const AssetId& kind) const;

  // Literal bound to `asset` by a TextualEquiv, if any.
  std::optional<std::string> LiteralOf(const AssetId& asset) const;

  bool operator==(const Context& o) const;

 private:
  friend Context Close(const Context& ctx);
  void Insert(Assertion a);

  std::string label_;
  std::set<Assertion> asserted_;
  std::set<Fact> derived_;
  std::map<AssetId, CanonicalizationRule> rules_;
  std::set<Ground> grounds_;
  bool closed_ = false;
};

// Free-function spellings of the store operations.
inline Context Assert(const Context& ctx, Assertion a) {
  return ctx.Add(std::move(a));
}

// Saturates `ctx`: transitive inheritance/inclusion/partial equivalence,
// symmetric-transitive full equivalence, operand membership for composite
// realizations, and the two interpretations every inheritance induces.
// Idempotent and monotone.
Context Close(const Context& ctx);

// True iff `fact` is in Close(ctx) or is an implicit reflexive/identity
// judgment. An Interpretation query with an empty agent matches any agent,
// context label and template.
bool Holds(const Context& ctx, const Fact& fact);

// True when following `first` then `second` is the identity on first.from:
// either is an identity edge, or they are the L~>K / K->L pair induced by
// Inheritance(K, L).
bool ComposesToIdentity(const Context& ctx, const InterpEdge& first,
                        const InterpEdge& second);

}  // namespace kindc

#endif  // KINDC_KIND_STORE_H_
