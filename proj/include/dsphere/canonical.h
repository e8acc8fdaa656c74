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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dsphere/graph.h"

namespace dsphere {

/// Isomorphism-invariant key: two graphs have equal forms iff they are
/// isomorphic. Ordered first by vertex count, then by the packed upper
/// triangle of the canonically relabeled adjacency matrix.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  std::string hex() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
  /// Number of leaves of the search tree that were visited.
  std::size_t leaves = 0;
};

/// Partition refinement plus individualization search, pruned with the
/// automorphisms discovered along the way.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// g relabeled into its canonical order.
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace dsphere
