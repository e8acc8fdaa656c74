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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dsphere {

using Vertex = std::size_t;

/// An undirected edge, always stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of vertices drawn from a universe {0..universe-1}. Universes up to 64
/// live in a single inline word; larger ones spill to the heap.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    return v < universe_ && ((words()[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  /// Removes every member <= v.
  void erase_through(Vertex v);

  /// Smallest member, or universe() when empty.
  Vertex first() const;
  /// Smallest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// |this & other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b);

  std::span<const std::uint64_t> words() const {
    return universe_ <= 64 ? std::span<const std::uint64_t>(&inline_, 1)
                           : std::span<const std::uint64_t>(heap_);
  }
  std::size_t hash() const;

 private:
  std::span<std::uint64_t> mutable_words() {
    return universe_ <= 64 ? std::span<std::uint64_t>(&inline_, 1)
                           : std::span<std::uint64_t>(heap_);
  }

  std::size_t universe_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Finite simple graph on vertices 0..order()-1. Immutable once built; use
/// GraphBuilder or the factory functions to make one.
class Graph {
 public:
  /// The empty graph (no vertices).
  Graph() = default;
  /// Throws InputError on self-loops or out-of-range endpoints. Duplicate
  /// edges are merged.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph edgeless(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const { return adj_.size(); }
  Vertex add_vertex();
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  bool adjacent(Vertex a, Vertex b) const;
  const VertexSet& neighbors(Vertex v) const;

  Graph build() const;

 private:
  void check(Vertex v) const;
  std::vector<VertexSet> adj_;
};

/// A subgraph re-packed onto 0..k-1 together with the map back to the host:
/// vertex i of `graph` is host vertex `to_host[i]`.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  /// Inverse lookup; returns nullopt when the host vertex is not present.
  std::optional<Vertex> from_host(Vertex host_vertex) const;
};

/// Induced subgraph on `vertices`. Vertices are packed in increasing host
/// order.
Subgraph induced(const Graph& g, const VertexSet& vertices);
/// S(x): the subgraph induced by the neighbors of x.
Subgraph unit_sphere(const Graph& g, Vertex x);
/// G - x: x and its incident edges removed.
Subgraph puncture(const Graph& g, Vertex x);

/// Vertices within hop distance `radius` of x, x included.
VertexSet ball(const Graph& g, Vertex x, std::size_t radius);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced by `vertices`.
bool is_connected(const Graph& g, const VertexSet& vertices);

/// All-pairs hop distances by breadth-first search.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  int operator()(Vertex a, Vertex b) const { return dist_[a * n_ + b]; }

 private:
  std::size_t n_ = 0;
  std::vector<int> dist_;
};

DistanceMatrix distance_matrix(const Graph& g);
/// Hop distances from a single source; unreachable entries are
/// DistanceMatrix::kUnreachable.
std::vector<int> distances_from(const Graph& g, Vertex source);
/// Largest finite distance, or nullopt when the graph is disconnected.
/// The empty graph and K1 have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

/// A clique as a sorted list of vertices.
using Clique = std::vector<Vertex>;

/// counts[k] is the number of (k+1)-vertex cliques (k-simplices).
struct FVector {
  std::vector<std::size_t> counts;

  std::size_t vertices() const { return counts.empty() ? 0 : counts[0]; }
  std::size_t edges() const { return counts.size() > 1 ? counts[1] : 0; }
  std::size_t triangles() const { return counts.size() > 2 ? counts[2] : 0; }

  friend bool operator==(const FVector&, const FVector&) = default;
};

struct CliqueComplex {
  FVector f_vector;
  /// lists[k] holds every (k+1)-vertex clique, lexicographically sorted.
  std::vector<std::vector<Clique>> lists;
};

/// Enumerates all cliques with at most `max_size` vertices (all when
/// nullopt).
CliqueComplex cliques(const Graph& g,
                      std::optional<std::size_t> max_size = std::nullopt);
/// Clique counts only, restricted to the subgraph induced by `vertices`.
FVector f_vector(const Graph& g, const VertexSet& vertices);
FVector f_vector(const Graph& g);

/// Alternating sum of the f-vector.
long euler_characteristic(const FVector& f);
long euler_characteristic(const Graph& g);
long euler_characteristic(const Graph& g, const VertexSet& vertices);

/// Relabels g so that new vertex i is old vertex order[i].
Graph relabel(const Graph& g, std::span<const Vertex> order);

}  // namespace dsphere

template <>
struct std::hash<dsphere::VertexSet> {
  std::size_t operator()(const dsphere::VertexSet& s) const noexcept {
    return s.hash();
  }
};
