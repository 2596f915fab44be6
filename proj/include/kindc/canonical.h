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

// Canonical forms of assets and the equivalence relations built on them.
//
// The canonical form of an instance is its inclusion tree with every
// realized kind mapped through the context's canonicalization rules, every
// bound literal renamed by the feature renames in scope, and leaf parts that
// only carry a literal folded into their parent. Parts and literals are
// multisets, so declaration order never matters.

#ifndef KINDC_CANONICAL_H_
#define KINDC_CANONICAL_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kindc/chain.h"
#include "kindc/kind_store.h"

namespace kindc {

// Kind given to instances that realize nothing.
inline constexpr std::string_view kTopKind = "Asset";

struct CanonicalAsset {
  // Sorted canonical kinds joined by " + ".
  std::string canonical_name;
  std::vector<std::string> kinds;     // sorted, unique
  std::vector<CanonicalAsset> parts;  // sorted
  // (slot, value); slot is "" for the asset's own literal, otherwise the
  // canonical name of the folded leaf part. Sorted.
  std::vector<std::pair<std::string, std::string>> literals;

  // Where this node came from; not part of the identity.
  std::optional<AssetId> source;
  // True when none of the realized kinds has a canonicalization rule.
  bool self_canonical = true;

  std::strong_ordering operator<=>(const CanonicalAsset& o) const;
  bool operator==(const CanonicalAsset& o) const;

  // Indented multi-line rendering, for diagnostics.
  std::string ToString() const;
};

// Throws UnknownAssetError when `asset` is not mentioned in ctx, and
// NoCanonicalTarget when the renames in scope contradict each other.
CanonicalAsset CanonicalForm(const Context& ctx, const AssetId& asset);

// Rebuilds a context whose instance `root` has canonical form `c`.
Context Materialize(const CanonicalAsset& c, const std::string& root = "c");

// One part of the outer asset fed by an ordered run of inner parts whose
// ontology kinds are linked by full interpretation chains.
struct ConversionGroup {
  std::vector<AssetId> inner;  // inner[i] has ontology kind from_kinds[i]
  AssetId outer;
  std::vector<AssetId> from_kinds;
  AssetId to_kind;
  // segments[i] runs from from_kinds[i] to from_kinds[i + 1], the last one
  // to to_kind.
  std::vector<Chain> segments;

  Chain Spliced() const;
};

// A witness that one canonical form is contained in another.
struct Embedding {
  // (inner source, outer source) for every structurally matched node.
  std::vector<std::pair<AssetId, AssetId>> matches;
  std::vector<ConversionGroup> conversions;

  std::optional<AssetId> MatchOf(const AssetId& inner) const;
};

struct ContainmentOptions {
  std::size_t max_chain_len = kDefaultMaxChainLength;
};

// Searches for an embedding of `inner` into `outer`. Kinds must agree and
// inner literals must be a sub-multiset of the outer ones. Parts of open
// nodes embed injectively. Parts of closed nodes (parameter sets) must be
// covered exactly; one outer part may absorb a run of inner parts through
// interpretation chains when the context declares a ground. Deterministic.
std::optional<Embedding> FindContainment(const Context& ctx,
                                         const CanonicalAsset& inner,
                                         const CanonicalAsset& outer,
                                         const ContainmentOptions& opts = {});

bool FullyEquivalent(const Context& ctx, const AssetId& u, const AssetId& v);

// True iff the canonical form of v contains that of u.
bool PartiallyEquivalent(const Context& ctx, const AssetId& u, const AssetId& v,
                         const ContainmentOptions& opts = {});

}  // namespace kindc

#endif  // KINDC_CANONICAL_H_
