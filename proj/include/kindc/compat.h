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

// Semantic compatibility of a provider and a consumer.

#ifndef KINDC_COMPAT_H_
#define KINDC_COMPAT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kindc/bridge.h"
#include "kindc/kind_store.h"
#include "kindc/kinding.h"

namespace kindc {

enum class Verdict { kCompatible, kIncompatible, kUnknown };

std::string_view ToString(Verdict v);

struct CompatibilityResult {
  Verdict verdict = Verdict::kIncompatible;
  // Present for kCompatible and kUnknown.
  std::optional<SemanticBridge> witness;
  std::vector<Obligation> obligations;
  std::vector<std::string> diagnostics;
};

struct CompatOptions {
  std::size_t max_chain_len = kDefaultMaxChainLength;
};

// Compatible iff the consumer's required interface embeds into the
// provider's provided interface, every contract obligation is discharged
// and every conversion is realizable. An undecidable obligation yields
// kUnknown. Never throws for incompatibility.
CompatibilityResult CheckCompatibility(const Context& ctx,
                                       const ComponentKind& provider,
                                       const ComponentKind& consumer,
                                       const CompatOptions& opts = {});

bool SemanticallyEquivalent(const Context& ctx, const AssetId& i,
                            const AssetId& j);

}  // namespace kindc

#endif  // KINDC_COMPAT_H_
