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

#include "dsphere/graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "dsphere/errors.h"

namespace dsphere {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

/// Clears the bits at or above `universe` in the last word.
void trim(std::span<std::uint64_t> words, std::size_t universe) {
  if (words.empty()) return;
  const std::size_t tail = universe & 63;
  if (tail != 0) words.back() &= (std::uint64_t{1} << tail) - 1;
  if (universe == 0) words[0] = 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe) {
  if (universe_ > 64) heap_.assign(word_count(universe_), 0);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  auto w = s.mutable_words();
  std::fill(w.begin(), w.end(), ~std::uint64_t{0});
  trim(w, universe);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words()) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (std::uint64_t w : words()) {
    if (w != 0) return false;
  }
  return true;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " outside universe of " +
                     std::to_string(universe_));
  }
  mutable_words()[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  mutable_words()[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::erase_through(Vertex v) {
  auto w = mutable_words();
  const std::size_t last = std::min<std::size_t>(v >> 6, w.size() - 1);
  for (std::size_t i = 0; i < last; ++i) w[i] = 0;
  if ((v >> 6) >= w.size()) {
    w[last] = 0;
  } else {
    const std::size_t bit = v & 63;
    w[last] &= bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
  }
}

Vertex VertexSet::first() const {
  auto w = words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) return i * 64 + static_cast<Vertex>(std::countr_zero(w[i]));
  }
  return universe_;
}

Vertex VertexSet::next(Vertex v) const {
  const Vertex start = v + 1;
  if (start >= universe_) return universe_;
  auto w = words();
  std::size_t i = start >> 6;
  std::uint64_t bits = w[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return i * 64 + static_cast<Vertex>(std::countr_zero(bits));
    if (++i >= w.size()) return universe_;
    bits = w[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  auto a = mutable_words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= i < b.size() ? b[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  auto a = mutable_words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] |= b[i];
  trim(a, universe_);
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  auto a = mutable_words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] &= ~b[i];
  return *this;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  auto a = words();
  auto b = other.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    total += std::popcount(a[i] & b[i]);
  }
  return total;
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  auto a = words();
  auto b = other.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t mask = i < b.size() ? b[i] : 0;
    if ((a[i] & ~mask) != 0) return false;
  }
  return true;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) return false;
  auto wa = a.words();
  auto wb = b.words();
  return std::equal(wa.begin(), wa.end(), wb.begin(), wb.end());
}

std::size_t VertexSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.first, e.second);
  return b.build();
}

Graph Graph::edgeless(std::size_t n) { return GraphBuilder(n).build(); }

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
  return adj_[v];
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  return a < order() && adj_[a].contains(b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < order(); ++a) {
    adj_[a].for_each([&](Vertex b) {
      if (a < b) out.emplace_back(a, b);
    });
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = adj_[v].size();
  return out;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const Graph& g) : GraphBuilder(g.order()) {
  for (const Edge& e : g.edges()) add_edge(e.first, e.second);
}

void GraphBuilder::check(Vertex v) const {
  if (v >= adj_.size()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(adj_.size()));
  }
}

Vertex GraphBuilder::add_vertex() {
  const std::size_t n = adj_.size() + 1;
  std::vector<VertexSet> grown(n, VertexSet(n));
  for (Vertex a = 0; a + 1 < n; ++a) {
    adj_[a].for_each([&](Vertex b) { grown[a].insert(b); });
  }
  adj_ = std::move(grown);
  return n - 1;
}

void GraphBuilder::add_edge(Vertex a, Vertex b) {
  check(a);
  check(b);
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
  adj_[a].insert(b);
  adj_[b].insert(a);
}

void GraphBuilder::remove_edge(Vertex a, Vertex b) {
  check(a);
  check(b);
  adj_[a].erase(b);
  adj_[b].erase(a);
}

bool GraphBuilder::adjacent(Vertex a, Vertex b) const {
  return a < adj_.size() && adj_[a].contains(b);
}

const VertexSet& GraphBuilder::neighbors(Vertex v) const {
  check(v);
  return adj_[v];
}

Graph GraphBuilder::build() const {
  Graph g;
  g.adj_ = adj_;
  std::size_t twice = 0;
  for (const VertexSet& s : adj_) twice += s.size();
  g.edge_count_ = twice / 2;
  return g;
}

// ---------------------------------------------------------------------------
// Subgraphs

std::optional<Vertex> Subgraph::from_host(Vertex host_vertex) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host_vertex);
  if (it != to_host.end() && *it == host_vertex) {
    return static_cast<Vertex>(it - to_host.begin());
  }
  // to_host is sorted for every subgraph built here, but fall back to a scan
  // for hand-assembled ones.
  auto lin = std::find(to_host.begin(), to_host.end(), host_vertex);
  if (lin == to_host.end()) return std::nullopt;
  return static_cast<Vertex>(lin - to_host.begin());
}

Subgraph induced(const Graph& g, const VertexSet& vertices) {
  Subgraph out;
  out.to_host = vertices.members();
  for (Vertex v : out.to_host) {
    if (v >= g.order()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(g.order()));
    }
  }
  const std::size_t k = out.to_host.size();
  std::vector<Vertex> to_local(g.order(), k);
  for (Vertex i = 0; i < k; ++i) to_local[out.to_host[i]] = i;
  GraphBuilder b(k);
  for (Vertex i = 0; i < k; ++i) {
    (g.neighbors(out.to_host[i]) & vertices).for_each([&](Vertex h) {
      if (to_local[h] > i) b.add_edge(i, to_local[h]);
    });
  }
  out.graph = b.build();
  return out;
}

Subgraph unit_sphere(const Graph& g, Vertex x) {
  return induced(g, g.neighbors(x));
}

Subgraph puncture(const Graph& g, Vertex x) {
  if (x >= g.order()) {
    throw InputError("vertex " + std::to_string(x) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
  VertexSet rest = g.all_vertices();
  rest.erase(x);
  return induced(g, rest);
}

VertexSet ball(const Graph& g, Vertex x, std::size_t radius) {
  VertexSet reached(g.order());
  reached.insert(x);
  VertexSet frontier = reached;
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

bool is_connected(const Graph& g, const VertexSet& vertices) {
  const Vertex start = vertices.first();
  if (start >= vertices.universe()) return true;
  VertexSet reached(g.order());
  reached.insert(start);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= vertices;
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached.size() == vertices.size();
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

// ---------------------------------------------------------------------------
// Metric

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    g.neighbors(v).for_each([&](Vertex w) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), dist_(g.order() * g.order(), kUnreachable) {
  for (Vertex s = 0; s < n_; ++s) {
    const auto row = distances_from(g, s);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<long>(s * n_));
  }
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : distances_from(g, s)) {
      if (d == DistanceMatrix::kUnreachable) return std::nullopt;
      best = std::max(best, static_cast<std::size_t>(d));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

void count_cliques(const Graph& g, const VertexSet& candidates,
                   std::size_t depth, std::vector<std::size_t>& counts) {
  candidates.for_each([&](Vertex v) {
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    ++counts[depth];
    VertexSet next = candidates & g.neighbors(v);
    // Only extend with larger vertices so each clique is counted once.
    next.erase_through(v);
    if (!next.empty()) count_cliques(g, next, depth + 1, counts);
  });
}

void list_cliques(const Graph& g, const VertexSet& candidates, Clique& current,
                  std::size_t max_size, std::vector<std::vector<Clique>>& lists) {
  candidates.for_each([&](Vertex v) {
    current.push_back(v);
    if (lists.size() < current.size()) lists.resize(current.size());
    lists[current.size() - 1].push_back(current);
    if (current.size() < max_size) {
      VertexSet next = candidates & g.neighbors(v);
      next.erase_through(v);
      if (!next.empty()) list_cliques(g, next, current, max_size, lists);
    }
    current.pop_back();
  });
}

}  // namespace

CliqueComplex cliques(const Graph& g, std::optional<std::size_t> max_size) {
  CliqueComplex out;
  Clique current;
  const std::size_t limit = max_size.value_or(g.order());
  if (limit > 0) list_cliques(g, g.all_vertices(), current, limit, out.lists);
  for (auto& list : out.lists) std::sort(list.begin(), list.end());
  for (const auto& list : out.lists) out.f_vector.counts.push_back(list.size());
  return out;
}

FVector f_vector(const Graph& g, const VertexSet& vertices) {
  FVector f;
  count_cliques(g, vertices, 0, f.counts);
  return f;
}

FVector f_vector(const Graph& g) { return f_vector(g, g.all_vertices()); }

long euler_characteristic(const FVector& f) {
  long chi = 0;
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    const long c = static_cast<long>(f.counts[k]);
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

long euler_characteristic(const Graph& g) {
  return euler_characteristic(f_vector(g));
}

long euler_characteristic(const Graph& g, const VertexSet& vertices) {
  return euler_characteristic(f_vector(g, vertices));
}

Graph relabel(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.order()) {
    throw InputError("relabeling must list every vertex exactly once");
  }
  std::vector<Vertex> position(g.order(), g.order());
  for (Vertex i = 0; i < order.size(); ++i) {
    if (order[i] >= g.order() || position[order[i]] != g.order()) {
      throw InputError("relabeling must list every vertex exactly once");
    }
    position[order[i]] = i;
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(position[e.first], position[e.second]);
  return b.build();
}

}  // namespace dsphere
