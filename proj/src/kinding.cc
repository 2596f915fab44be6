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

#include "kindc/kinding.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "kindc/errors.h"
#include "kindc/vocabulary.h"

namespace kindc {

std::vector<const FeatureKind*> ComponentKind::Provided() const {
  std::vector<const FeatureKind*> out;
  for (const auto& [_, f] : features) {
    if (f.direction == Direction::kProvided) out.push_back(&f);
  }
  return out;
}

std::vector<const FeatureKind*> ComponentKind::Required() const {
  std::vector<const FeatureKind*> out;
  for (const auto& [_, f] : features) {
    if (f.direction == Direction::kRequired) out.push_back(&f);
  }
  return out;
}

const FeatureKind* ComponentKind::Find(Direction direction,
                                       const std::string& name) const {
  for (const auto& [_, f] : features) {
    if (f.direction == direction && f.name == name) return &f;
  }
  return nullptr;
}

std::string ConcurrencySemanticsName(std::string_view tag_value) {
  std::string out;
  for (char c : tag_value) {
    out += static_cast<char>(out.empty() ? std::toupper(c) : std::tolower(c));
  }
  return out + "Semantics";
}

namespace {

std::string Kind(std::string_view k) { return std::string(k); }

class Encoder {
 public:
  Encoder(Context ctx, const KindingOptions& opts)
      : ctx_(std::move(ctx)), opts_(opts) {}

  KindingResult Encode(const ComponentDecl& decl) {
    for (auto k : {vocab::kProvides, vocab::kRequires}) {
      ctx_ = ctx_.AddRule({AssetId::Kind(Kind(k)),
                           AssetId::Kind(Kind(vocab::kInterface)),
                           {},
                           std::nullopt});
    }
    AssetId c = AssetId::Instance(decl.name);
    AssetId provides_iface = AssetId::Instance(decl.name + ".Provides");
    AssetId requires_iface = AssetId::Instance(decl.name + ".Requires");
    Realize(c, vocab::kSemanticComponent);
    Part(provides_iface, c, vocab::kProvides);
    Part(requires_iface, c, vocab::kRequires);

    std::size_t prop = 0;
    for (const auto& p : decl.properties) {
      if (p.tag == "realizes") {
        ClaimRealizes(c, p.value);
      } else {
        Property(c, prop++, p);
      }
    }

    ComponentKind kind{c, provides_iface, requires_iface, {}};
    for (const auto& m : decl.provided) {
      FeatureKind f =
          Method(decl.name, m, Direction::kProvided, provides_iface);
      kind.features.emplace(f.feature, std::move(f));
    }
    for (const auto& m : decl.required) {
      FeatureKind f =
          Method(decl.name, m, Direction::kRequired, requires_iface);
      kind.features.emplace(f.feature, std::move(f));
    }
    return {std::move(ctx_), std::move(kind)};
  }

 private:
  void Realize(const AssetId& id, std::string_view kind) {
    ctx_ = ctx_.Add(Realization{id, KindExpr::Atom(Kind(kind))});
  }

  void Part(const AssetId& part, const AssetId& whole, std::string_view kind) {
    ctx_ = ctx_.Add(Inclusion{part, whole});
    Realize(part, kind);
  }

  void Literal(const AssetId& part, const AssetId& whole, std::string_view kind,
               const std::string& value) {
    Part(part, whole, kind);
    ctx_ = ctx_.Add(TextualEquiv{part, value});
  }

  KindExpr ClaimRealizes(const AssetId& id, const std::string& text) {
    KindExpr k = ParseKindExpr(text);
    if (!opts_.auto_declare_kinds) {
      for (const auto& atom : k.Atoms()) {
        if (!ctx_.Mentions(AssetId::Kind(atom))) {
          throw UnknownKind("@realizes names undeclared kind '" + atom + "'");
        }
      }
    }
    ctx_ = ctx_.Add(Assertion{Realization{id, k}, TruthStructure::Claim()});
    return k;
  }

  void Property(const AssetId& owner, std::size_t index,
                const SemanticProperty& p) {
    std::string text = "@" + p.tag;
    if (!p.value.empty()) text += " " + p.value;
    if (!p.description.empty()) text += " " + p.description;
    Literal(
        AssetId::Instance(owner.name() + ".Property" + std::to_string(index)),
        owner, vocab::kSemanticProperty, text);
  }

  void CheckBound(const ContractExpr& e, const MethodDecl& m,
                  const std::string& component) {
    std::set<std::string> names;
    for (const auto& p : m.params) names.insert(p.name);
    for (const auto& v : e.Variables()) {
      if (!names.count(v)) {
        throw UnboundIdentifier(component + "." + m.name + " at line " +
                                std::to_string(m.pos.line) + ": contract " +
                                "names '" + v + "', which is not a parameter");
      }
    }
  }

  FeatureKind Method(const std::string& component, const MethodDecl& m,
                     Direction direction, const AssetId& iface) {
    const std::string base = component + "." + m.name;
    AssetId id = AssetId::Instance(base);
    auto sub = [&](const std::string& s) {
      return AssetId::Instance(base + "." + s);
    };
    FeatureKind f{id, m.name, direction, {}, {}, {}, {}, {}, {}, {}};
    Part(id, iface, vocab::kMethod);
    Literal(sub("Name"), id, vocab::kIdentifier, m.name);
    f.return_type = m.return_type.value_or(std::string(vocab::kVoid));
    Literal(sub("ReturnType"), id, vocab::kReturnType, f.return_type);
    AssetId params = sub("ParameterSet");
    Part(params, id, vocab::kParameterSet);
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      std::string p = "Parameter" + std::to_string(i);
      AssetId pid = sub(p);
      Part(pid, params, vocab::kParameter);
      Literal(sub(p + "Type"), pid, vocab::kTypeName, m.params[i].type_name);
      Literal(sub(p + "Name"), pid, vocab::kIdentifier, m.params[i].name);
      f.params.push_back({pid, m.params[i].name, m.params[i].type_name});
    }
    if (m.precondition) {
      CheckBound(*m.precondition, m, component);
      f.precondition = m.precondition;
      Literal(sub("Precondition"), id, vocab::kPrecondition,
              m.precondition->ToString());
    }
    std::size_t prop = 0;
    for (const auto& p : m.properties) {
      if (p.tag == "concurrency" && !f.concurrency) {
        f.concurrency = ConcurrencySemanticsName(p.value);
        Literal(sub("ConcurrencySemantics0"), id, vocab::kConcurrencySemantics,
                *f.concurrency);
      } else if (p.tag == "ensure" && direction == Direction::kRequired &&
                 !f.guarantee) {
        ContractExpr g = ParseContract(p.value);
        CheckBound(g, m, component);
        f.guarantee = g;
        Literal(sub("Guarantee"), id, vocab::kCallGuarantee, g.ToString());
      } else if (p.tag == "ensure" && direction == Direction::kProvided &&
                 !f.postcondition) {
        f.postcondition = p.value;
        Literal(sub("Postcondition"), id, vocab::kPostcondition, p.value);
      } else if (p.tag == "realizes" && !f.realizes) {
        f.realizes = ClaimRealizes(id, p.value);
      } else {
        Property(id, prop++, p);
      }
    }
    return f;
  }

  Context ctx_;
  KindingOptions opts_;
};

}  // namespace

KindingResult KindComponent(const Context& ctx, const ComponentDecl& decl,
                            const KindingOptions& opts) {
  return Encoder(ctx, opts).Encode(decl);
}

// ---------------------------------------------------------------- Decoding

namespace {

class Decoder {
 public:
  explicit Decoder(const Context& ctx) {
    for (const auto& a : ctx.asserted()) {
      facts_.insert(a.fact);
      if (auto* te = std::get_if<TextualEquiv>(&a.fact)) {
        literals_.emplace(te->asset, te->literal);
      } else if (auto* r = std::get_if<Realization>(&a.fact)) {
        realizations_[r->instance].push_back(r->kind);
      } else if (auto* inc = std::get_if<Inclusion>(&a.fact)) {
        parts_[inc->whole].push_back(inc->part);
      }
    }
  }

  ComponentKind Decode(const std::string& name) {
    AssetId c = AssetId::Instance(name);
    if (!Realizes(c, vocab::kSemanticComponent)) {
      throw UnknownAssetError("no kinded component named '" + name + "'");
    }
    ComponentKind kind{c,
                       AssetId::Instance(name + ".Provides"),
                       AssetId::Instance(name + ".Requires"),
                       {}};
    for (auto [iface, dir] :
         {std::pair{kind.provides_iface, Direction::kProvided},
          std::pair{kind.requires_iface, Direction::kRequired}}) {
      for (const auto& m : parts_[iface]) {
        if (!Realizes(m, vocab::kMethod)) continue;
        FeatureKind f = Feature(m, dir);
        kind.features.emplace(m, std::move(f));
      }
    }
    return kind;
  }

 private:
  bool Realizes(const AssetId& id, std::string_view kind) const {
    auto it = realizations_.find(id);
    if (it == realizations_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const KindExpr& k) {
                         return k == KindExpr::Atom(std::string(kind));
                       });
  }

  std::optional<std::string> Lit(const std::string& name) const {
    auto it = literals_.find(AssetId::Instance(name));
    if (it == literals_.end()) return std::nullopt;
    return it->second;
  }

  FeatureKind Feature(const AssetId& m, Direction dir) {
    const std::string& base = m.name();
    FeatureKind f{m, std::string(m.leaf()), dir, {}, {}, {}, {}, {}, {}, {}};
    if (auto name = Lit(base + ".Name")) f.name = *name;
    f.return_type =
        Lit(base + ".ReturnType").value_or(std::string(vocab::kVoid));
    for (std::size_t i = 0;; ++i) {
      std::string p = base + ".Parameter" + std::to_string(i);
      AssetId pid = AssetId::Instance(p);
      if (!facts_.count(
              Inclusion{pid, AssetId::Instance(base + ".ParameterSet")})) {
        break;
      }
      f.params.push_back(
          {pid, Lit(p + "Name").value_or(""), Lit(p + "Type").value_or("")});
    }
    f.concurrency = Lit(base + ".ConcurrencySemantics0");
    if (auto pre = Lit(base + ".Precondition")) {
      f.precondition = ParseContract(*pre);
    }
    if (auto g = Lit(base + ".Guarantee")) f.guarantee = ParseContract(*g);
    f.postcondition = Lit(base + ".Postcondition");
    if (auto it = realizations_.find(m); it != realizations_.end()) {
      for (const auto& k : it->second) {
        if (k != KindExpr::Atom(std::string(vocab::kMethod))) {
          f.realizes = k;
          break;
        }
      }
    }
    return f;
  }

  std::set<Fact> facts_;
  std::map<AssetId, std::string> literals_;
  std::map<AssetId, std::vector<KindExpr>> realizations_;
  std::map<AssetId, std::vector<AssetId>> parts_;
};

}  // namespace

ComponentKind ComponentKindFromContext(const Context& ctx,
                                       const std::string& name) {
  return Decoder(ctx).Decode(name);
}

bool CheckSubsumption(const FeatureKind& overriding,
                      const FeatureKind& overridden) {
  ContractExpr parent = overridden.precondition.value_or(ContractExpr{});
  ContractExpr child = overriding.precondition.value_or(ContractExpr{});
  switch (Implies(parent, child)) {
    case Implication::kTrue:
      return true;
    case Implication::kFalse:
      return false;
    case Implication::kUndecidable:
      break;
  }
  throw UndecidableContract("cannot decide " + parent.ToString() + " => " +
                            child.ToString());
}

}  // namespace kindc
