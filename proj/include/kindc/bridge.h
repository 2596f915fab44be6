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

// Semantic bridges: how each feature a consumer requires is served by a
// feature of the provider.

#ifndef KINDC_BRIDGE_H_
#define KINDC_BRIDGE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kindc/canonical.h"
#include "kindc/chain.h"
#include "kindc/contract.h"
#include "kindc/kind_store.h"
#include "kindc/kinding.h"

namespace kindc {

struct ConversionSpec {
  enum class Form { kRename, kReorder, kExpr, kComposite };

  Form form = Form::kRename;
  // kRename: consumer name -> provider name.
  std::map<std::string, std::string> renames;
  // kReorder: provider argument i is consumer argument permutation[i].
  std::vector<std::size_t> permutation;
  // kExpr: one interpretation edge and its template.
  std::string from_kind;
  std::string to_kind;
  std::optional<std::string> expr_template;
  // kComposite: applied in order.
  std::vector<ConversionSpec> steps;

  static ConversionSpec Rename(std::map<std::string, std::string> renames);
  static ConversionSpec Reorder(std::vector<std::size_t> permutation);
  static ConversionSpec Expr(const InterpEdge& edge);
  static ConversionSpec Composite(std::vector<ConversionSpec> steps);

  // "rename{writeDate=setDate}", "reorder[2,1,0]", "expr(Year->Month)",
  // "composite(...)".
  std::string ToString() const;

  bool operator==(const ConversionSpec&) const = default;
};

// Consumer arguments combined into one provider argument along a chain.
struct ChainConversion {
  // Consumer argument indices, in chain order.
  std::vector<std::size_t> inputs;
  Chain chain;
  // For each chain edge, the index into `inputs` of the consumer argument
  // bound to the edge's target kind, if any.
  std::vector<std::optional<std::size_t>> edge_inputs;

  bool operator==(const ChainConversion&) const = default;
};

struct ArgumentBinding {
  std::optional<std::size_t> consumer_index;  // direct pass-through
  std::optional<ChainConversion> conversion;

  bool operator==(const ArgumentBinding&) const = default;
};

enum class ObligationKind {
  // The provider precondition must imply what the consumer requires of it.
  kRequires,
  // What the consumer guarantees at the call must imply the provider
  // precondition.
  kGuarantee,
};

struct Obligation {
  std::string feature;  // required feature name
  ObligationKind kind = ObligationKind::kRequires;
  ContractExpr antecedent;
  ContractExpr consequent;
  Implication result = Implication::kUndecidable;

  bool discharged() const { return result == Implication::kTrue; }
  // "discharged", "failed" or "undecidable".
  std::string_view Status() const;
  // "year>1970 => year>0 : discharged".
  std::string ToString() const;
};

struct FeatureMap {
  AssetId required;
  AssetId provided;
  std::string required_name;
  std::string provided_name;
  ConversionSpec conversion;
  // One per provider parameter, in provider order.
  std::vector<ArgumentBinding> bindings;
  // Provider precondition over provider parameter names, checked at run
  // time when it was not discharged statically.
  std::optional<ContractExpr> guard;
  FeatureKind consumer_feature;
  FeatureKind provider_feature;

  bool operator==(const FeatureMap&) const = default;
};

struct SemanticBridge {
  AssetId provider;
  AssetId consumer;
  std::vector<FeatureMap> feature_maps;  // sorted by required name
  std::vector<Obligation> obligations;

  // Stable line-oriented rendering.
  std::string ToString() const;
};

struct BridgeOptions {
  std::size_t max_chain_len = kDefaultMaxChainLength;
};

// Contract obligations and the residual guard for one matched pair.
struct ContractAnalysis {
  std::vector<Obligation> obligations;
  std::optional<ContractExpr> guard;
};

ContractAnalysis AnalyzeContracts(const FeatureKind& required,
                                  const FeatureKind& provided,
                                  const std::vector<ArgumentBinding>& bindings);

// Builds the bridge witnessing that the consumer's required interface is
// contained in the provider's provided interface. Throws NoBridge when no
// such containment exists.
SemanticBridge BuildBridge(const Context& ctx, const ComponentKind& provider,
                           const ComponentKind& consumer,
                           const BridgeOptions& opts = {});

// Throws UnrealizableConversion when a conversion edge has no template, a
// template does not parse, or it names anything other than its own source
// kind and, when bound, its target kind.
void CheckRealizable(const FeatureMap& map);

}  // namespace kindc

#endif  // KINDC_BRIDGE_H_
