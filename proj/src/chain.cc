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

#include "kindc/chain.h"

#include <algorithm>
#include <deque>
#include <map>

#include "kindc/errors.h"

namespace kindc {

bool Chain::full() const {
  return std::all_of(edges.begin(), edges.end(), [](const InterpEdge& e) {
    return e.kind == InterpKind::kFull;
  });
}

Chain Chain::Then(const Chain& next) const {
  if (next.from != to) {
    throw Error("cannot splice chain ending at " + to.name() +
                " onto one starting at " + next.from.name());
  }
  Chain out = *this;
  out.to = next.to;
  out.edges.insert(out.edges.end(), next.edges.begin(), next.edges.end());
  return out;
}

std::string Chain::ToString() const {
  std::string out = from.name();
  for (const auto& e : edges) out += " -> " + e.to.name();
  return out;
}

namespace {

bool EdgeLess(const InterpEdge& a, const InterpEdge& b) {
  auto ka = a.Key();
  auto kb = b.Key();
  if (ka != kb) return ka < kb;
  return a < b;
}

}  // namespace

std::vector<InterpEdge> InterpretationEdges(const Context& ctx,
                                            ChainMode mode) {
  std::vector<InterpEdge> out;
  for (const auto& f : Close(ctx).Facts()) {
    auto* in = std::get_if<Interpretation>(&f);
    if (!in) continue;
    if (mode == ChainMode::kFullOnly && in->edge.kind != InterpKind::kFull) {
      continue;
    }
    out.push_back(in->edge);
  }
  std::sort(out.begin(), out.end(), EdgeLess);
  return out;
}

std::optional<Chain> FindChain(const std::vector<InterpEdge>& edges,
                               const AssetId& from, const AssetId& to,
                               std::size_t max_len) {
  if (from == to) return Chain{from, to, {}};

  std::map<AssetId, std::vector<const InterpEdge*>> out_edges;
  std::map<AssetId, std::vector<const InterpEdge*>> in_edges;
  for (const auto& e : edges) {
    out_edges[e.from].push_back(&e);
    in_edges[e.to].push_back(&e);
  }

  // Distance to `to`, bounded by max_len.
  std::map<AssetId, std::size_t> dist{{to, 0}};
  std::deque<AssetId> queue{to};
  while (!queue.empty()) {
    AssetId cur = queue.front();
    queue.pop_front();
    std::size_t d = dist.at(cur);
    if (d == max_len) continue;
    for (const InterpEdge* e : in_edges[cur]) {
      if (dist.emplace(e->from, d + 1).second) queue.push_back(e->from);
    }
  }
  auto it = dist.find(from);
  if (it == dist.end()) return std::nullopt;

  // Greedy walk: every step stays on some shortest path, and the edges are
  // pre-sorted, so the first candidate gives the least key sequence.
  Chain chain{from, to, {}};
  AssetId cur = from;
  std::size_t remaining = it->second;
  while (remaining > 0) {
    const InterpEdge* pick = nullptr;
    for (const InterpEdge* e : out_edges[cur]) {
      auto d = dist.find(e->to);
      if (d != dist.end() && d->second == remaining - 1) {
        pick = e;
        break;
      }
    }
    chain.edges.push_back(*pick);
    cur = pick->to;
    --remaining;
  }
  return chain;
}

std::optional<Chain> FindChain(const Context& ctx, const AssetId& from,
                               const AssetId& to, std::size_t max_len,
                               ChainMode mode) {
  if (max_len == 0) throw Error("max chain length must be positive");
  return FindChain(InterpretationEdges(ctx, mode), from, to, max_len);
}

}  // namespace kindc
