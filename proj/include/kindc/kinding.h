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

// Encodes parsed components as kind-store assertions.
//
// For component C and method m the generated assets are
//
//   C                       : SemanticComponent
//   C.Provides, C.Requires  : Provides, Requires     (parts of C)
//   C.m                     : Method                 (part of an interface)
//   C.m.Name                : Identifier      = "m"
//   C.m.ReturnType          : ReturnType      = "<type>" or "void"
//   C.m.ParameterSet        : ParameterSet
//   C.m.Parameter<i>        : Parameter              (part of ParameterSet)
//   C.m.Parameter<i>Type    : TypeName        = "<type>"
//   C.m.Parameter<i>Name    : Identifier      = "<name>"
//
// plus annotation parts (ConcurrencySemantics0, Precondition, Guarantee,
// Postcondition, Property<i>) whose literals carry the semantic properties.

#ifndef KINDC_KINDING_H_
#define KINDC_KINDING_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kindc/contract.h"
#include "kindc/kind_store.h"
#include "kindc/sidl.h"

namespace kindc {

struct ParameterKind {
  AssetId asset;
  std::string name;
  std::string type_name;

  bool operator==(const ParameterKind&) const = default;
};

struct FeatureKind {
  AssetId feature;
  std::string name;
  Direction direction = Direction::kProvided;
  std::vector<ParameterKind> params;
  std::string return_type;
  // "GuardedSemantics" for `@concurrency GUARDED`.
  std::optional<std::string> concurrency;
  // Provided methods: what callers must establish. Required methods: what
  // the consumer expects the provider to demand.
  std::optional<ContractExpr> precondition;
  // Required methods only: what the consumer guarantees at each call.
  std::optional<ContractExpr> guarantee;
  std::optional<std::string> postcondition;
  std::optional<KindExpr> realizes;

  bool operator==(const FeatureKind&) const = default;
};

struct ComponentKind {
  AssetId component;
  AssetId provides_iface;
  AssetId requires_iface;
  std::map<AssetId, FeatureKind> features;

  // Sorted by feature name.
  std::vector<const FeatureKind*> Provided() const;
  std::vector<const FeatureKind*> Required() const;
  const FeatureKind* Find(Direction direction, const std::string& name) const;

  bool operator==(const ComponentKind&) const = default;
};

struct KindingOptions {
  // Accept `@realizes K` for kinds the context has never mentioned.
  bool auto_declare_kinds = false;
};

struct KindingResult {
  Context context;
  ComponentKind kind;
};

// Throws UnboundIdentifier when a contract names a missing parameter and
// UnknownKind for an undeclared `@realizes` kind.
KindingResult KindComponent(const Context& ctx, const ComponentDecl& decl,
                            const KindingOptions& opts = {});

// Reads a kinded component back out of a context. Throws UnknownAssetError
// when `name` was never kinded.
ComponentKind ComponentKindFromContext(const Context& ctx,
                                       const std::string& name);

// "GUARDED" -> "GuardedSemantics".
std::string ConcurrencySemanticsName(std::string_view tag_value);

// True iff the overridden precondition implies the overriding one. Throws
// UndecidableContract outside the decidable fragment.
bool CheckSubsumption(const FeatureKind& overriding,
                      const FeatureKind& overridden);

}  // namespace kindc

#endif  // KINDC_KINDING_H_
