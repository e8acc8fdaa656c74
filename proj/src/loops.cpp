// Copyright 2026 The dsphere Authors.
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

#include "dsphere/loops.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

#include "dsphere/errors.h"

namespace dsphere {

namespace {

using Key = std::u16string;

/// Start of the lexicographically least rotation (two-pointer method).
std::size_t least_rotation(const Key& s) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const char16_t a = s[(i + k) % n];
    const char16_t b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Key rotate(const Key& s, std::size_t k) { return s.substr(k) + s.substr(0, k); }

Key canonical_key(const Loop& loop) {
  Key forward(loop.begin(), loop.end());
  Key backward(loop.rbegin(), loop.rend());
  Key a = rotate(forward, least_rotation(forward));
  Key b = rotate(backward, least_rotation(backward));
  return std::min(a, b);
}

Loop apply(const Loop& loop, LoopMoveKind kind, std::size_t position, Vertex vertex) {
  const std::size_t m = loop.size();
  Loop out;
  out.reserve(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (kind == LoopMoveKind::shortcut && j == position) continue;
    if (kind == LoopMoveKind::cancel && (j == position || j == (position + 1) % m)) continue;
    out.push_back(loop[j]);
    if (kind == LoopMoveKind::expand && j == position) out.push_back(vertex);
  }
  return out;
}

struct Node {
  const Key* key = nullptr;
  std::size_t parent = std::numeric_limits<std::size_t>::max();
  LoopMoveKind kind = LoopMoveKind::shortcut;
  std::size_t position = 0;
  Vertex vertex = 0;
};

}  // namespace

void validate_loop(const Graph& g, const Loop& loop) {
  if (loop.empty()) throw InputError("loop is empty");
  for (Vertex v : loop) {
    if (v >= g.order()) throw InputError("loop vertex " + std::to_string(v) + " out of range");
  }
  if (loop.size() == 1) return;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vertex a = loop[i];
    const Vertex b = loop[(i + 1) % loop.size()];
    if (!g.adjacent(a, b)) {
      throw InputError("loop step " + std::to_string(a) + " -> " + std::to_string(b) +
                       " is not an edge");
    }
  }
}

Loop canonical_loop(const Loop& loop) {
  const Key k = canonical_key(loop);
  return Loop(k.begin(), k.end());
}

std::string to_string(LoopMoveKind kind) {
  switch (kind) {
    case LoopMoveKind::shortcut:
      return "shortcut";
    case LoopMoveKind::cancel:
      return "cancel";
    case LoopMoveKind::expand:
      return "expand";
  }
  return "?";
}

LoopContraction contract_loop(const Graph& g, const Loop& loop, const LoopOptions& options) {
  validate_loop(g, loop);
  if (g.order() > std::numeric_limits<char16_t>::max()) {
    throw InputError("contract_loop supports at most 65535 vertices");
  }
  LoopContraction result;
  if (loop.size() <= 2) {
    result.verdict = LoopVerdict::contractible;
    result.states = 1;
    return result;
  }
  const std::size_t cap = options.length_cap.value_or(3 * g.order());

  std::unordered_map<Key, std::size_t> seen;
  std::vector<Node> nodes;
  using Entry = std::pair<std::size_t, std::size_t>;  // (length, node)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  auto discover = [&](Key key, std::size_t parent, LoopMoveKind kind, std::size_t position,
                      Vertex vertex) -> std::optional<std::size_t> {
    auto [it, inserted] = seen.emplace(std::move(key), nodes.size());
    if (!inserted) return std::nullopt;
    nodes.push_back({&it->first, parent, kind, position, vertex});
    queue.emplace(it->first.size(), nodes.size() - 1);
    return nodes.size() - 1;
  };

  auto finish = [&](std::size_t goal) {
    std::vector<std::size_t> chain;
    for (std::size_t i = goal; nodes[i].parent != std::numeric_limits<std::size_t>::max();
         i = nodes[i].parent) {
      chain.push_back(i);
    }
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i : chain) {
      const Node& node = nodes[i];
      const Key& parent_key = *nodes[node.parent].key;
      LoopMove move;
      move.kind = node.kind;
      move.position = node.position;
      move.vertex = node.vertex;
      move.before.assign(parent_key.begin(), parent_key.end());
      move.after = apply(move.before, node.kind, node.position, node.vertex);
      result.moves.push_back(std::move(move));
    }
    result.verdict = LoopVerdict::contractible;
    result.states = nodes.size();
  };

  discover(canonical_key(loop), std::numeric_limits<std::size_t>::max(), LoopMoveKind::shortcut,
           0, 0);
  while (!queue.empty()) {
    const std::size_t id = queue.top().second;
    queue.pop();
    const Loop current(nodes[id].key->begin(), nodes[id].key->end());
    const std::size_t m = current.size();

    auto consider = [&](LoopMoveKind kind, std::size_t position, Vertex vertex) {
      const Loop next = apply(current, kind, position, vertex);
      const auto child = discover(canonical_key(next), id, kind, position, vertex);
      return child && next.size() <= 2 ? child : std::nullopt;
    };

    for (std::size_t i = 0; i < m; ++i) {
      const Vertex a = current[(i + m - 1) % m];
      const Vertex b = current[(i + 1) % m];
      std::optional<std::size_t> goal;
      if (a == b) {
        goal = consider(LoopMoveKind::cancel, i, 0);
      } else if (g.adjacent(a, b)) {
        goal = consider(LoopMoveKind::shortcut, i, 0);
      }
      if (goal) {
        finish(*goal);
        return result;
      }
    }
    if (m < cap) {
      for (std::size_t i = 0; i < m; ++i) {
        const VertexSet common = g.neighbors(current[i]) & g.neighbors(current[(i + 1) % m]);
        common.for_each([&](Vertex c) { consider(LoopMoveKind::expand, i, c); });
      }
    }
    if (nodes.size() >= options.state_budget) {
      result.budget_exhausted = true;
      break;
    }
  }
  result.states = nodes.size();
  return result;
}

bool replay_loop_contraction(const Graph& g, const Loop& loop, const std::vector<LoopMove>& moves) {
  try {
    validate_loop(g, loop);
  } catch (const InputError&) {
    return false;
  }
  Loop current = loop;
  for (const LoopMove& move : moves) {
    if (canonical_loop(current) != canonical_loop(move.before)) return false;
    const Loop& l = move.before;
    const std::size_t m = l.size();
    const std::size_t i = move.position;
    if (m < 3 || i >= m) return false;
    const Vertex prev = l[(i + m - 1) % m];
    const Vertex next = l[(i + 1) % m];
    Loop expected;
    switch (move.kind) {
      case LoopMoveKind::shortcut:
        if (prev == next || !g.adjacent(prev, next)) return false;
        expected = l;
        expected.erase(expected.begin() + static_cast<long>(i));
        break;
      case LoopMoveKind::cancel: {
        if (prev != next) return false;
        for (std::size_t j = 0; j < m; ++j) {
          if (j != i && j != (i + 1) % m) expected.push_back(l[j]);
        }
        break;
      }
      case LoopMoveKind::expand:
        if (!g.adjacent(move.vertex, l[i]) || !g.adjacent(move.vertex, next)) return false;
        expected = l;
        expected.insert(expected.begin() + static_cast<long>(i) + 1, move.vertex);
        break;
    }
    if (expected != move.after) return false;
    try {
      validate_loop(g, expected);
    } catch (const InputError&) {
      return false;
    }
    current = expected;
  }
  return current.size() <= 2;
}

}  // namespace dsphere
