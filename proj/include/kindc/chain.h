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

#ifndef KINDC_CHAIN_H_
#define KINDC_CHAIN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kindc/kind_store.h"

namespace kindc {

inline constexpr std::size_t kDefaultMaxChainLength = 8;

// A path of interpretation edges. Empty means the identity on `from`.
struct Chain {
  AssetId from;
  AssetId to;
  std::vector<InterpEdge> edges;

  std::size_t length() const { return edges.size(); }
  // Full iff every edge is full; the identity is full.
  bool full() const;
  // Appends `next`, which must start where this chain ends.
  Chain Then(const Chain& next) const;
  // "Year -> Month -> Day".
  std::string ToString() const;

  bool operator==(const Chain&) const = default;
};

enum class ChainMode { kAny, kFullOnly };

// Registered and derived interpretation edges of Close(ctx), sorted by
// (Key(), edge).
std::vector<InterpEdge> InterpretationEdges(const Context& ctx,
                                            ChainMode mode = ChainMode::kAny);

// Shortest chain from `from` to `to` of at most `max_len` edges; among
// equally short ones, the lexicographically least sequence of edge keys.
std::optional<Chain> FindChain(const Context& ctx, const AssetId& from,
                               const AssetId& to,
                               std::size_t max_len = kDefaultMaxChainLength,
                               ChainMode mode = ChainMode::kAny);

// Same search over a pre-extracted, sorted edge list.
std::optional<Chain> FindChain(const std::vector<InterpEdge>& edges,
                               const AssetId& from, const AssetId& to,
                               std::size_t max_len);

}  // namespace kindc

#endif  // KINDC_CHAIN_H_
