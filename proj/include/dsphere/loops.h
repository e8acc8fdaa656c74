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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsphere/graph.h"

namespace dsphere {

/// A closed walk given as a cyclic vertex sequence: loop[i] ~ loop[i+1] and
/// loop.back() ~ loop.front(). Loops of length <= 2 are trivial.
using Loop = std::vector<Vertex>;

/// Throws InputError unless `loop` is a nonempty closed walk in g.
void validate_loop(const Graph& g, const Loop& loop);

/// Smallest rotation of the loop or of its reversal.
Loop canonical_loop(const Loop& loop);

enum class LoopMoveKind {
  /// a,b,c with a ~ c becomes a,c: two triangle edges replaced by the third.
  shortcut,
  /// a,b,a becomes a.
  cancel,
  /// a,b becomes a,c,b for a common neighbor c: the reverse of a shortcut.
  expand,
};

std::string to_string(LoopMoveKind kind);

struct LoopMove {
  LoopMoveKind kind = LoopMoveKind::shortcut;
  /// Index into `before` of the removed vertex (shortcut, cancel) or of the
  /// vertex after which `vertex` is inserted (expand). A cancel removes
  /// `position` and the following index.
  std::size_t position = 0;
  /// Inserted vertex for expand moves.
  Vertex vertex = 0;
  Loop before;
  Loop after;
};

enum class LoopVerdict { contractible, unknown };

struct LoopContraction {
  LoopVerdict verdict = LoopVerdict::unknown;
  std::vector<LoopMove> moves;
  std::size_t states = 0;
  bool budget_exhausted = false;
};

struct LoopOptions {
  std::size_t state_budget = 1'000'000;
  /// Longest intermediate loop; 3n when unset.
  std::optional<std::size_t> length_cap;
};

/// Searches loop space under shortcut, cancel and expand moves, shortest
/// loops first and breadth-first within a length. A semi-decision: "unknown"
/// means the budget or the length cap ran out.
LoopContraction contract_loop(const Graph& g, const Loop& loop, const LoopOptions& options = {});

/// Checks every move against the graph and the move rules; true iff the
/// sequence turns `loop` into a trivial loop.
bool replay_loop_contraction(const Graph& g, const Loop& loop, const std::vector<LoopMove>& moves);

}  // namespace dsphere
