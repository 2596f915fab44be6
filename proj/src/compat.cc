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

#include "kindc/compat.h"

#include "kindc/canonical.h"
#include "kindc/errors.h"

namespace kindc {

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kCompatible:
      return "compatible";
    case Verdict::kIncompatible:
      return "incompatible";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// One line per required feature that no provided feature contains.
std::vector<std::string> Unmatched(const Context& closed,
                                   const ComponentKind& provider,
                                   const ComponentKind& consumer,
                                   const ContainmentOptions& opts) {
  std::vector<std::string> out;
  for (const FeatureKind* f : consumer.Required()) {
    bool found = false;
    try {
      CanonicalAsset inner = CanonicalForm(closed, f->feature);
      for (const FeatureKind* p : provider.Provided()) {
        if (FindContainment(closed, inner, CanonicalForm(closed, p->feature),
                            opts)) {
          found = true;
          break;
        }
      }
    } catch (const Error& e) {
      out.push_back("required feature " + f->name + ": " + e.what());
      continue;
    }
    if (!found) {
      out.push_back("required feature " + f->name +
                    " has no matching provided feature");
    }
  }
  return out;
}

}  // namespace

CompatibilityResult CheckCompatibility(const Context& ctx,
                                       const ComponentKind& provider,
                                       const ComponentKind& consumer,
                                       const CompatOptions& opts) {
  CompatibilityResult result;
  Context closed = Close(ctx);
  std::optional<SemanticBridge> bridge;
  try {
    bridge = BuildBridge(closed, provider, consumer, {opts.max_chain_len});
  } catch (const NoBridge& e) {
    result.diagnostics.push_back(e.what());
    auto unmatched =
        Unmatched(closed, provider, consumer, {opts.max_chain_len});
    result.diagnostics.insert(result.diagnostics.end(), unmatched.begin(),
                              unmatched.end());
    return result;
  } catch (const NoCanonicalTarget& e) {
    result.diagnostics.push_back(e.what());
    return result;
  }

  result.obligations = bridge->obligations;
  bool failed = false;
  bool undecidable = false;
  for (const auto& o : bridge->obligations) {
    if (o.result == Implication::kFalse) {
      failed = true;
      result.diagnostics.push_back("obligation failed for " + o.feature + ": " +
                                   o.ToString());
    } else if (o.result == Implication::kUndecidable) {
      undecidable = true;
      result.diagnostics.push_back("obligation undecidable for " + o.feature +
                                   ": " + o.ToString());
    }
  }
  for (const auto& map : bridge->feature_maps) {
    try {
      CheckRealizable(map);
    } catch (const UnrealizableConversion& e) {
      failed = true;
      result.diagnostics.push_back("unrealizable: " + std::string(e.what()));
    }
  }
  if (failed) return result;
  result.verdict = undecidable ? Verdict::kUnknown : Verdict::kCompatible;
  result.witness = std::move(bridge);
  return result;
}

bool SemanticallyEquivalent(const Context& ctx, const AssetId& i,
                            const AssetId& j) {
  return FullyEquivalent(ctx, i, j);
}

}  // namespace kindc
