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

#include "kindc/canonical.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "kindc/errors.h"
#include "kindc/vocabulary.h"

namespace kindc {

std::strong_ordering CanonicalAsset::operator<=>(
    const CanonicalAsset& o) const {
  if (auto c = kinds <=> o.kinds; c != 0) return c;
  if (auto c = literals <=> o.literals; c != 0) return c;
  return std::lexicographical_compare_three_way(parts.begin(), parts.end(),
                                                o.parts.begin(), o.parts.end());
}

bool CanonicalAsset::operator==(const CanonicalAsset& o) const {
  return (*this <=> o) == 0;
}

namespace {

void Render(const CanonicalAsset& c, int depth, std::string& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out += pad + c.canonical_name;
  for (const auto& [slot, value] : c.literals) {
    out +=
        slot.empty() ? " \"" + value + "\"" : " " + slot + "=\"" + value + "\"";
  }
  out += "\n";
  for (const auto& p : c.parts) Render(p, depth + 1, out);
}

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> Split(const std::string& s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, at - start));
    start = at + sep.size();
  }
}

// Precomputed views of a closed context.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Context& closed) : ctx_(closed) {
    std::map<AssetId, std::set<AssetId>> parts;
    for (const auto& f : closed.Facts()) {
      if (auto* inc = std::get_if<Inclusion>(&f)) {
        parts[inc->whole].insert(inc->part);
        wholes_[inc->part].insert(inc->whole);
      } else if (auto* r = std::get_if<Realization>(&f)) {
        for (auto& atom : r->kind.Atoms()) kinds_[r->instance].insert(atom);
      }
    }
    for (const auto& a : closed.asserted()) {
      if (auto* te = std::get_if<TextualEquiv>(&a.fact)) {
        literal_.emplace(te->asset, te->literal);
      }
    }
    // Transitive reduction of the inclusion order.
    for (const auto& [whole, all] : parts) {
      for (const auto& p : all) {
        bool direct = true;
        for (const auto& q : all) {
          if (q == p) continue;
          auto it = parts.find(q);
          if (it != parts.end() && it->second.count(p)) {
            direct = false;
            break;
          }
        }
        if (direct) direct_parts_[whole].push_back(p);
      }
    }
  }

  const CanonicalAsset& Form(const AssetId& id) {
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    CanonicalAsset c = Build(id);
    return memo_.emplace(id, std::move(c)).first->second;
  }

 private:
  std::set<std::string> RawKinds(const AssetId& id) const {
    if (id.is_kind()) return {id.name()};
    auto it = kinds_.find(id);
    if (it == kinds_.end() || it->second.empty()) {
      return {std::string(kTopKind)};
    }
    return it->second;
  }

  const CanonicalizationRule* RuleFor(const std::string& kind) const {
    auto it = ctx_.rules().find(AssetId::Kind(kind));
    return it == ctx_.rules().end() ? nullptr : &it->second;
  }

  void AddRenames(const CanonicalizationRule& rule,
                  std::map<std::string, std::string>& scope) const {
    for (const auto& [from, to] : rule.feature_renames) {
      auto [it, fresh] = scope.emplace(from, to);
      if (!fresh && it->second != to) {
        throw NoCanonicalTarget("conflicting renames for '" + from + "': '" +
                                it->second + "' and '" + to + "'");
      }
    }
  }

  std::map<std::string, std::string> RenameScope(const AssetId& id) const {
    std::set<std::string> kinds = RawKinds(id);
    if (auto it = wholes_.find(id); it != wholes_.end()) {
      for (const auto& w : it->second) {
        auto wk = RawKinds(w);
        kinds.insert(wk.begin(), wk.end());
      }
    }
    std::map<std::string, std::string> scope;
    for (const auto& k : kinds) {
      const CanonicalizationRule* rule = RuleFor(k);
      if (!rule) continue;
      AddRenames(*rule, scope);
      if (const auto* target = RuleFor(rule->target.name())) {
        AddRenames(*target, scope);
      }
    }
    std::map<std::string, std::string> seen;
    for (const auto& [from, to] : scope) {
      if (auto [it, fresh] = seen.emplace(to, from); !fresh) {
        throw NoCanonicalTarget("renames '" + it->second + "' and '" + from +
                                "' both map to '" + to + "'");
      }
      if (auto it = scope.find(to); it != scope.end() && it->second != to) {
        throw NoCanonicalTarget("rename chain '" + from + "' -> '" + to +
                                "' -> '" + it->second + "'");
      }
    }
    return scope;
  }

  CanonicalAsset Build(const AssetId& id) {
    CanonicalAsset c;
    c.source = id;
    std::set<std::string> mapped;
    for (const auto& k : RawKinds(id)) {
      if (const auto* rule = RuleFor(k)) {
        c.self_canonical = false;
        mapped.insert(rule->target.name());
      } else {
        mapped.insert(k);
      }
    }
    c.kinds.assign(mapped.begin(), mapped.end());
    c.canonical_name = Join(c.kinds, " + ");

    auto scope = RenameScope(id);
    auto rename = [&](const std::string& v) {
      auto it = scope.find(v);
      return it == scope.end() ? v : it->second;
    };
    if (auto it = literal_.find(id); it != literal_.end()) {
      c.literals.emplace_back("", rename(it->second));
    }

    if (auto it = direct_parts_.find(id); it != direct_parts_.end()) {
      for (const auto& p : it->second) {
        const CanonicalAsset& pc = Form(p);
        if (std::any_of(pc.kinds.begin(), pc.kinds.end(),
                        [](const std::string& k) {
                          return vocab::IsAnnotationKind(k);
                        })) {
          continue;
        }
        if (pc.parts.empty() && pc.literals.size() == 1 &&
            pc.literals[0].first.empty()) {
          c.literals.emplace_back(pc.canonical_name, pc.literals[0].second);
        } else {
          c.parts.push_back(pc);
        }
      }
    }
    std::sort(c.literals.begin(), c.literals.end());
    std::stable_sort(c.parts.begin(), c.parts.end());
    return c;
  }

  const Context& ctx_;
  std::map<AssetId, std::set<AssetId>> wholes_;
  std::map<AssetId, std::vector<AssetId>> direct_parts_;
  std::map<AssetId, std::set<std::string>> kinds_;
  std::map<AssetId, std::string> literal_;
  std::map<AssetId, CanonicalAsset> memo_;
};

}  // namespace

std::string CanonicalAsset::ToString() const {
  std::string out;
  Render(*this, 0, out);
  return out;
}

CanonicalAsset CanonicalForm(const Context& ctx, const AssetId& asset) {
  Context closed = Close(ctx);
  if (!closed.Mentions(asset)) {
    throw UnknownAssetError("unknown asset " + asset.ToString());
  }
  Canonicalizer canon(closed);
  return canon.Form(asset);
}

Context Materialize(const CanonicalAsset& c, const std::string& root) {
  Context out;
  std::function<void(const CanonicalAsset&, const AssetId&)> emit =
      [&](const CanonicalAsset& node, const AssetId& id) {
        for (const auto& k : node.kinds) {
          out = out.Add(Realization{id, KindExpr::Atom(k)});
        }
        std::size_t lit = 0;
        for (const auto& [slot, value] : node.literals) {
          if (slot.empty()) {
            out = out.Add(TextualEquiv{id, value});
            continue;
          }
          AssetId part =
              AssetId::Instance(id.name() + ".l" + std::to_string(lit++));
          out = out.Add(Inclusion{part, id});
          for (const auto& k : Split(slot, " + ")) {
            out = out.Add(Realization{part, KindExpr::Atom(k)});
          }
          out = out.Add(TextualEquiv{part, value});
        }
        for (std::size_t i = 0; i < node.parts.size(); ++i) {
          AssetId part =
              AssetId::Instance(id.name() + ".p" + std::to_string(i));
          out = out.Add(Inclusion{part, id});
          emit(node.parts[i], part);
        }
      };
  AssetId id = AssetId::Instance(root);
  emit(c, id);
  if (c.kinds.empty() && c.literals.empty() && c.parts.empty()) {
    // Keep the root mentioned.
    out = out.Add(Realization{id, KindExpr::Atom(std::string(kTopKind))});
  }
  return out;
}

// ---------------------------------------------------------------- Containment

Chain ConversionGroup::Spliced() const {
  Chain out{from_kinds.front(), from_kinds.front(), {}};
  for (const auto& s : segments) out = out.Then(s);
  return out;
}

std::optional<AssetId> Embedding::MatchOf(const AssetId& inner) const {
  for (const auto& [in, out] : matches) {
    if (in == inner) return out;
  }
  return std::nullopt;
}

namespace {

void Append(Embedding& into, const Embedding& from) {
  into.matches.insert(into.matches.end(), from.matches.begin(),
                      from.matches.end());
  into.conversions.insert(into.conversions.end(), from.conversions.begin(),
                          from.conversions.end());
}

std::vector<std::string> Difference(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

class Matcher {
 public:
  Matcher(const Context& closed, const ContainmentOptions& opts)
      : edges_(InterpretationEdges(closed, ChainMode::kFullOnly)),
        has_ground_(!closed.grounds().empty()),
        max_len_(opts.max_chain_len) {}

  std::optional<Embedding> Contain(const CanonicalAsset& in,
                                   const CanonicalAsset& out) {
    if (in.kinds != out.kinds) return std::nullopt;
    if (!std::includes(out.literals.begin(), out.literals.end(),
                       in.literals.begin(), in.literals.end())) {
      return std::nullopt;
    }
    Pairs pairs(this, in, out);
    bool closed = std::any_of(
        in.kinds.begin(), in.kinds.end(),
        [](const std::string& k) { return vocab::IsClosedKind(k); });
    std::optional<Embedding> rest;
    if (closed) {
      if (in.parts.size() < out.parts.size()) return std::nullopt;
      if (in.parts.size() > out.parts.size() && !has_ground_) {
        return std::nullopt;
      }
      std::vector<bool> used(in.parts.size(), false);
      rest = Cover(pairs, 0, used);
    } else {
      if (in.parts.size() > out.parts.size()) return std::nullopt;
      std::vector<bool> used(out.parts.size(), false);
      rest = Inject(pairs, 0, used);
    }
    if (!rest) return std::nullopt;
    Embedding e;
    if (in.source && out.source)
      e.matches.emplace_back(*in.source, *out.source);
    Append(e, *rest);
    return e;
  }

 private:
  // Lazily computed containment of inner part i in outer part j.
  class Pairs {
   public:
    Pairs(Matcher* m, const CanonicalAsset& in, const CanonicalAsset& out)
        : m_(m), in_(in), out_(out) {}
    const std::optional<Embedding>& At(std::size_t i, std::size_t j) {
      auto key = std::make_pair(i, j);
      auto it = memo_.find(key);
      if (it == memo_.end()) {
        it = memo_.emplace(key, m_->Contain(in_.parts[i], out_.parts[j])).first;
      }
      return it->second;
    }
    const CanonicalAsset& in() const { return in_; }
    const CanonicalAsset& out() const { return out_; }

   private:
    Matcher* m_;
    const CanonicalAsset& in_;
    const CanonicalAsset& out_;
    std::map<std::pair<std::size_t, std::size_t>, std::optional<Embedding>>
        memo_;
  };

  std::optional<Embedding> Inject(Pairs& pairs, std::size_t i,
                                  std::vector<bool>& used) {
    if (i == pairs.in().parts.size()) return Embedding{};
    for (std::size_t j = 0; j < pairs.out().parts.size(); ++j) {
      if (used[j]) continue;
      const auto& sub = pairs.At(i, j);
      if (!sub) continue;
      used[j] = true;
      auto rest = Inject(pairs, i + 1, used);
      used[j] = false;
      if (rest) {
        Embedding e = *sub;
        Append(e, *rest);
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<Embedding> Cover(Pairs& pairs, std::size_t j,
                                 std::vector<bool>& used) {
    const auto& inner = pairs.in().parts;
    if (j == pairs.out().parts.size()) {
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
        return Embedding{};
      }
      return std::nullopt;
    }
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (used[i]) continue;
      const auto& sub = pairs.At(i, j);
      if (!sub) continue;
      used[i] = true;
      auto rest = Cover(pairs, j + 1, used);
      used[i] = false;
      if (rest) {
        Embedding e = *sub;
        Append(e, *rest);
        return e;
      }
    }
    const CanonicalAsset& target = pairs.out().parts[j];
    if (!has_ground_ || !target.source) return std::nullopt;

    // Conversion groups: inner kinds S + {a_i}, outer kinds S + {b}.
    std::vector<std::size_t> candidates;
    std::vector<std::string> ontology(inner.size());
    std::optional<std::string> b;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (used[i] || !inner[i].source) continue;
      auto extra = Difference(inner[i].kinds, target.kinds);
      auto missing = Difference(target.kinds, inner[i].kinds);
      if (extra.size() != 1 || missing.size() != 1) continue;
      if (b && *b != missing[0]) continue;
      b = missing[0];
      ontology[i] = extra[0];
      candidates.push_back(i);
    }
    if (candidates.empty()) return std::nullopt;

    ConversionGroup group{{}, *target.source, {}, AssetId::Kind(*b), {}};
    return Grow(pairs, j, used, candidates, ontology, group);
  }

  std::optional<Embedding> Grow(Pairs& pairs, std::size_t j,
                                std::vector<bool>& used,
                                const std::vector<std::size_t>& candidates,
                                const std::vector<std::string>& ontology,
                                ConversionGroup& group) {
    if (!group.inner.empty()) {
      if (auto last = ChainBetween(group.from_kinds.back(), group.to_kind)) {
        group.segments.push_back(*last);
        auto rest = Cover(pairs, j + 1, used);
        group.segments.pop_back();
        if (rest) {
          Embedding e;
          ConversionGroup done = group;
          done.segments.push_back(*last);
          e.conversions.push_back(std::move(done));
          Append(e, *rest);
          return e;
        }
      }
    }
    for (std::size_t i : candidates) {
      if (used[i]) continue;
      AssetId kind = AssetId::Kind(ontology[i]);
      if (std::find(group.from_kinds.begin(), group.from_kinds.end(), kind) !=
          group.from_kinds.end()) {
        continue;
      }
      std::optional<Chain> link;
      if (!group.inner.empty()) {
        link = ChainBetween(group.from_kinds.back(), kind);
        if (!link) continue;
        group.segments.push_back(*link);
      }
      used[i] = true;
      group.inner.push_back(*pairs.in().parts[i].source);
      group.from_kinds.push_back(kind);
      auto found = Grow(pairs, j, used, candidates, ontology, group);
      group.from_kinds.pop_back();
      group.inner.pop_back();
      used[i] = false;
      if (link) group.segments.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Chain> ChainBetween(const AssetId& from, const AssetId& to) {
    auto key = std::make_pair(from, to);
    auto it = chains_.find(key);
    if (it == chains_.end()) {
      it = chains_.emplace(key, FindChain(edges_, from, to, max_len_)).first;
    }
    return it->second;
  }

  std::vector<InterpEdge> edges_;
  bool has_ground_;
  std::size_t max_len_;
  std::map<std::pair<AssetId, AssetId>, std::optional<Chain>> chains_;
};

}  // namespace

std::optional<Embedding> FindContainment(const Context& ctx,
                                         const CanonicalAsset& inner,
                                         const CanonicalAsset& outer,
                                         const ContainmentOptions& opts) {
  Matcher m(Close(ctx), opts);
  return m.Contain(inner, outer);
}

bool FullyEquivalent(const Context& ctx, const AssetId& u, const AssetId& v) {
  Context closed = Close(ctx);
  return CanonicalForm(closed, u) == CanonicalForm(closed, v);
}

bool PartiallyEquivalent(const Context& ctx, const AssetId& u, const AssetId& v,
                         const ContainmentOptions& opts) {
  Context closed = Close(ctx);
  return FindContainment(closed, CanonicalForm(closed, u),
                         CanonicalForm(closed, v), opts)
      .has_value();
}

}  // namespace kindc
