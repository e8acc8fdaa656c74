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

#include "dsphere/geomag.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "dsphere/canonical.h"
#include "dsphere/census.h"

namespace dsphere {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

/// Breadth-first distances from `source` inside `allowed`.
std::vector<int> distances_within(const Graph& g, Vertex source, const VertexSet& allowed) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (allowed.contains(w) && dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

/// Path source..target tracing back through the smallest closer neighbor.
std::vector<Vertex> trace_back(const Graph& g, const std::vector<int>& dist, Vertex target) {
  std::vector<Vertex> path{target};
  while (dist[path.back()] > 0) {
    const Vertex u = path.back();
    Vertex best = g.order();
    g.neighbors(u).for_each([&](Vertex w) {
      if (best == g.order() && dist[w] == dist[u] - 1) best = w;
    });
    path.push_back(best);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) return false;
  const VertexSet members = VertexSet::of(g.order(), cycle);
  if (members.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet expect(g.order());
    expect.insert(cycle[(i + n - 1) % n]);
    expect.insert(cycle[(i + 1) % n]);
    if (!((g.neighbors(cycle[i]) & members) == expect)) return false;
  }
  return true;
}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

SurfaceLinkKind classify_link(const std::set<Vertex>& nb, const std::set<Edge>& link) {
  if (nb.empty()) return SurfaceLinkKind::irregular;
  std::map<Vertex, std::size_t> degree;
  std::map<Vertex, Vertex> parent;
  for (Vertex v : nb) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : link) {
    if (++degree[e.first] > 2 || ++degree[e.second] > 2) return SurfaceLinkKind::broken;
    parent[find(e.first)] = find(e.second);
  }
  std::size_t comps = 0;
  for (Vertex v : nb) comps += find(v) == v ? 1 : 0;
  const std::size_t size = nb.size();
  if (comps == 1) {
    if (link.size() == size) {
      return size >= 4 ? SurfaceLinkKind::interior : SurfaceLinkKind::broken;
    }
    return size >= 2 ? SurfaceLinkKind::boundary : SurfaceLinkKind::irregular;
  }
  return link.size() > size - comps ? SurfaceLinkKind::broken : SurfaceLinkKind::irregular;
}

/// Mutable bookkeeping while wheels are added.
struct Growth {
  std::set<Triangle> triangles;
  std::map<Vertex, std::set<Vertex>> neighbors;
  std::map<Vertex, std::set<Edge>> links;
  std::vector<WheelEmbedding> wheels;

  void add_edge(Vertex a, Vertex b) {
    neighbors[a].insert(b);
    neighbors[b].insert(a);
  }

  void add_triangle(Vertex a, Vertex b, Vertex c) {
    if (!triangles.insert(make_triangle(a, b, c)).second) return;
    add_edge(a, b);
    add_edge(b, c);
    add_edge(a, c);
    links[a].insert(Edge(b, c));
    links[b].insert(Edge(a, c));
    links[c].insert(Edge(a, b));
  }

  void add_wheel(const WheelEmbedding& w) {
    const std::size_t k = w.rim.size();
    for (std::size_t i = 0; i < k; ++i) add_triangle(w.center, w.rim[i], w.rim[(i + 1) % k]);
    wheels.push_back(w);
  }

  SurfaceLinkKind kind(Vertex v) const {
    static const std::set<Vertex> kNone;
    static const std::set<Edge> kNoEdges;
    const auto nb = neighbors.find(v);
    const auto link = links.find(v);
    return classify_link(nb == neighbors.end() ? kNone : nb->second,
                         link == links.end() ? kNoEdges : link->second);
  }
};

std::vector<std::vector<Vertex>> boundary_cycles(const std::set<Triangle>& triangles,
                                                 const std::map<Vertex, std::set<Vertex>>& nbrs) {
  std::map<Edge, std::size_t> cover;
  for (const Triangle& t : triangles) {
    ++cover[Edge(t[0], t[1])];
    ++cover[Edge(t[1], t[2])];
    ++cover[Edge(t[0], t[2])];
  }
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& [v, nb] : nbrs) {
    for (Vertex w : nb) {
      if (v < w && cover[Edge(v, w)] < 2) {
        adj[v].insert(w);
        adj[w].insert(v);
      }
    }
  }
  std::vector<std::vector<Vertex>> out;
  std::set<Edge> used;
  for (const auto& [start, nb] : adj) {
    for (Vertex first : nb) {
      if (used.count(Edge(start, first))) continue;
      std::vector<Vertex> cycle{start};
      Vertex prev = start;
      Vertex cur = first;
      used.insert(Edge(start, first));
      while (cur != start) {
        cycle.push_back(cur);
        Vertex next = cur;
        for (Vertex w : adj[cur]) {
          if (w != prev && !used.count(Edge(cur, w))) {
            next = w;
            break;
          }
        }
        if (next == cur) break;  // not a cycle; verify_surface will object
        used.insert(Edge(cur, next));
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(cycle));
    }
  }
  return out;
}

bool induced_matches(const Graph& host, const VertexSet& vertices, const std::vector<Edge>& edges) {
  std::vector<Edge> induced_edges;
  vertices.for_each([&](Vertex v) {
    (host.neighbors(v) & vertices).for_each([&](Vertex w) {
      if (v < w) induced_edges.emplace_back(v, w);
    });
  });
  return induced_edges == edges;
}

Surface snapshot(const Graph& g, const Growth& growth) {
  Surface s;
  s.host = g;
  s.wheels = growth.wheels;
  s.triangles.assign(growth.triangles.begin(), growth.triangles.end());
  s.vertex_set = VertexSet(g.order());
  for (const auto& [v, nb] : growth.neighbors) {
    s.vertex_set.insert(v);
    for (Vertex w : nb) {
      if (v < w) s.edges.emplace_back(v, w);
    }
  }
  std::sort(s.edges.begin(), s.edges.end());
  s.boundary = boundary_cycles(growth.triangles, growth.neighbors);
  s.closed = !growth.neighbors.empty();
  for (const auto& entry : growth.neighbors) {
    s.closed = s.closed && growth.kind(entry.first) == SurfaceLinkKind::interior;
  }
  s.embedded = induced_matches(g, s.vertex_set, s.edges);
  return s;
}

/// Rims for a wheel at x compatible with the surface so far, best first.
std::vector<std::vector<Vertex>> candidate_rims(const Graph& g, const Growth& growth, Vertex x) {
  const Subgraph sphere = unit_sphere(g, x);
  const auto nb = growth.neighbors.find(x);
  const auto link = growth.links.find(x);
  std::vector<std::vector<Vertex>> out;
  for (auto& cycle : induced_cycles(sphere.graph, 4)) {
    for (Vertex& v : cycle) v = sphere.to_host[v];
    const VertexSet members = VertexSet::of(g.order(), cycle);
    bool ok = true;
    if (nb != growth.neighbors.end()) {
      for (Vertex w : nb->second) ok = ok && members.contains(w);
    }
    if (ok && link != growth.links.end()) {
      // Induced, so two members are consecutive iff they are adjacent.
      for (const Edge& e : link->second) ok = ok && g.adjacent(e.first, e.second);
    }
    if (ok) out.push_back(canonical_loop(cycle));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::optional<WheelEmbedding> best_wheel(const Graph& g, const Growth& growth, Vertex x) {
  for (const auto& rim : candidate_rims(g, growth, x)) {
    Growth trial = growth;
    WheelEmbedding w{x, rim};
    trial.add_wheel(w);
    bool ok = trial.kind(x) == SurfaceLinkKind::interior;
    for (Vertex v : rim) ok = ok && trial.kind(v) != SurfaceLinkKind::broken;
    if (ok) return w;
  }
  return std::nullopt;
}

Surface grow(const Graph& g, const std::vector<Vertex>& seed, Growth growth, bool close,
             const GrowOptions& options) {
  const std::size_t budget = options.max_wheels.value_or(4 * g.order());
  while (true) {
    std::vector<Vertex> centers;
    bool seed_pending = false;
    for (Vertex v : seed) {
      if (growth.kind(v) != SurfaceLinkKind::interior &&
          std::find(centers.begin(), centers.end(), v) == centers.end()) {
        centers.push_back(v);
        seed_pending = true;
      }
    }
    std::vector<Vertex> irregular;
    std::vector<Vertex> boundary;
    for (const auto& entry : growth.neighbors) {
      const SurfaceLinkKind k = growth.kind(entry.first);
      if (k == SurfaceLinkKind::irregular || k == SurfaceLinkKind::broken) {
        irregular.push_back(entry.first);
      } else if (k == SurfaceLinkKind::boundary) {
        boundary.push_back(entry.first);
      }
    }
    if (!seed_pending && irregular.empty() && (!close || boundary.empty())) break;

    // Tiers in order; later tiers are fallbacks when no earlier center fits.
    for (const auto* tier : {&irregular, &boundary}) {
      for (Vertex v : *tier) {
        if (std::find(centers.begin(), centers.end(), v) == centers.end()) centers.push_back(v);
      }
    }
    if (growth.wheels.size() >= budget) {
      throw GrowthError("surface growth exceeded the budget of " + std::to_string(budget) +
                            " wheels",
                        snapshot(g, growth));
    }
    std::optional<WheelEmbedding> wheel;
    for (Vertex x : centers) {
      if ((wheel = best_wheel(g, growth, x))) break;
    }
    if (!wheel) {
      throw GrowthError("no boundary vertex admits a wheel", snapshot(g, growth));
    }
    growth.add_wheel(*wheel);
  }
  return snapshot(g, growth);
}

}  // namespace

GeodesicArc geodesic_arc(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  const auto dist = distances_from(g, x);
  if (dist[y] == DistanceMatrix::kUnreachable) {
    throw InputError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                     " are not connected");
  }
  return GeodesicArc{trace_back(g, dist, y)};
}

void validate_arc(const Graph& g, const GeodesicArc& arc) {
  if (arc.vertices.empty()) throw InputError("empty arc");
  for (Vertex v : arc.vertices) check_vertex(g, v);
  for (std::size_t i = 0; i + 1 < arc.vertices.size(); ++i) {
    if (!g.adjacent(arc.vertices[i], arc.vertices[i + 1])) {
      throw InputError("arc steps along a non-edge");
    }
  }
  const auto dist = distances_from(g, arc.x());
  if (dist[arc.y()] != static_cast<int>(arc.length())) {
    throw InputError("arc is not a shortest path");
  }
}

std::vector<Vertex> complete_to_circle(const Graph& g, const GeodesicArc& arc) {
  validate_arc(g, arc);
  if (arc.length() == 0) throw InputError("circle completion needs two distinct endpoints");
  const std::size_t k = arc.length();
  VertexSet allowed = VertexSet::full(g.order());
  if (k == 1) {
    allowed -= g.neighbors(arc.x()) & g.neighbors(arc.y());
  } else {
    for (std::size_t i = 1; i < k; ++i) {
      allowed -= ball(g, arc.vertices[i], 1);
    }
    allowed.insert(arc.x());
    allowed.insert(arc.y());
  }
  // For a single edge the direct step is forbidden by blocking y from x.
  std::vector<int> dist;
  if (k == 1) {
    VertexSet first_step = allowed;
    first_step.erase(arc.y());
    dist = distances_within(g, arc.x(), first_step);
    int best = DistanceMatrix::kUnreachable;
    g.neighbors(arc.y()).for_each([&](Vertex w) {
      if (w != arc.x() && dist[w] != DistanceMatrix::kUnreachable &&
          (best == DistanceMatrix::kUnreachable || dist[w] + 1 < best)) {
        best = dist[w] + 1;
      }
    });
    dist[arc.y()] = best;
  } else {
    dist = distances_within(g, arc.x(), allowed);
  }
  if (dist[arc.y()] == DistanceMatrix::kUnreachable) {
    throw ConstructionError("completion failed: removing the arc neighborhood separates " +
                            std::to_string(arc.x()) + " from " + std::to_string(arc.y()));
  }
  std::vector<Vertex> back;
  if (k == 1) {
    // Trace from y's best neighbor, never through the edge itself.
    Vertex via = g.order();
    g.neighbors(arc.y()).for_each([&](Vertex w) {
      if (via == g.order() && w != arc.x() && dist[w] == dist[arc.y()] - 1) via = w;
    });
    back = trace_back(g, dist, via);
    back.push_back(arc.y());
  } else {
    back = trace_back(g, dist, arc.y());
  }
  std::vector<Vertex> cycle = arc.vertices;
  for (std::size_t i = back.size() - 2; i >= 1; --i) cycle.push_back(back[i]);
  if (cycle.size() < 4 || !is_induced_cycle(g, cycle)) {
    throw ConstructionError("completion failed: the closed curve is not an induced cycle");
  }
  return cycle;
}

Subgraph surface_graph(const Surface& s) {
  Subgraph out;
  out.to_host = s.vertex_set.members();
  std::vector<Vertex> index(s.host.order(), 0);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) index[out.to_host[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : s.edges) edges.emplace_back(index[e.first], index[e.second]);
  out.graph = Graph::from_edges(out.to_host.size(), edges);
  return out;
}

SurfaceLinkKind surface_link_kind(const Surface& s, Vertex v) {
  std::set<Vertex> nb;
  std::set<Edge> link;
  for (const Edge& e : s.edges) {
    if (e.first == v) nb.insert(e.second);
    if (e.second == v) nb.insert(e.first);
  }
  for (const Triangle& t : s.triangles) {
    if (t[0] == v) link.insert(Edge(t[1], t[2]));
    if (t[1] == v) link.insert(Edge(t[0], t[2]));
    if (t[2] == v) link.insert(Edge(t[0], t[1]));
  }
  return classify_link(nb, link);
}

bool verify_surface(const Surface& s) {
  const Graph& g = s.host;
  std::set<Edge> from_triangles;
  for (const Triangle& t : s.triangles) {
    if (t[2] >= g.order() || !g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) ||
        !g.adjacent(t[0], t[2])) {
      return false;
    }
    from_triangles.insert({Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])});
  }
  if (std::vector<Edge>(from_triangles.begin(), from_triangles.end()) != s.edges) return false;

  std::set<Triangle> from_wheels;
  for (const WheelEmbedding& w : s.wheels) {
    if (!is_induced_cycle(g, w.rim) || w.rim.size() < 4) return false;
    for (std::size_t i = 0; i < w.rim.size(); ++i) {
      if (!g.adjacent(w.center, w.rim[i])) return false;
      from_wheels.insert(make_triangle(w.center, w.rim[i], w.rim[(i + 1) % w.rim.size()]));
    }
  }
  if (std::vector<Triangle>(from_wheels.begin(), from_wheels.end()) != s.triangles) return false;

  VertexSet vertices(g.order());
  for (const Edge& e : s.edges) {
    vertices.insert(e.first);
    vertices.insert(e.second);
  }
  if (!(vertices == s.vertex_set) || !is_connected(g, vertices)) return false;
  if (!is_connected(surface_graph(s).graph)) return false;

  bool all_interior = true;
  std::set<Edge> boundary_edges;
  for (Vertex v : vertices.members()) {
    const SurfaceLinkKind k = surface_link_kind(s, v);
    if (k != SurfaceLinkKind::interior && k != SurfaceLinkKind::boundary) return false;
    all_interior = all_interior && k == SurfaceLinkKind::interior;
  }
  std::map<Edge, std::size_t> cover;
  for (const Triangle& t : s.triangles) {
    ++cover[Edge(t[0], t[1])];
    ++cover[Edge(t[1], t[2])];
    ++cover[Edge(t[0], t[2])];
  }
  for (const auto& [e, c] : cover) {
    if (c > 2) return false;
    if (c == 1) boundary_edges.insert(e);
  }
  std::set<Edge> listed;
  for (const auto& cycle : s.boundary) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!listed.insert(Edge(cycle[i], cycle[(i + 1) % cycle.size()])).second) return false;
    }
  }
  if (listed != boundary_edges) return false;
  if (s.closed != (all_interior && !s.vertex_set.empty())) return false;
  return s.embedded == induced_matches(g, s.vertex_set, s.edges);
}

Surface grow_surface(const Graph& g, const GeodesicArc& seed, const GrowOptions& options) {
  validate_arc(g, seed);
  Growth growth;
  growth.neighbors[seed.x()];
  for (std::size_t i = 0; i + 1 < seed.vertices.size(); ++i) {
    growth.add_edge(seed.vertices[i], seed.vertices[i + 1]);
  }
  return grow(g, seed.vertices, std::move(growth), options.close, options);
}

Surface grow_surface(const Graph& g, const Loop& seed, const GrowOptions& options) {
  validate_loop(g, seed);
  if (seed.size() < 3 || VertexSet::of(g.order(), seed).size() != seed.size()) {
    throw InputError("surface seed loop must be a cycle on distinct vertices");
  }
  Growth growth;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    growth.add_edge(seed[i], seed[(i + 1) % seed.size()]);
  }
  return grow(g, seed, std::move(growth), true, options);
}

bool is_geodesic_loop(const Graph& g, const Loop& loop) {
  const std::size_t n = loop.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (loop[i] >= g.order()) return false;
    if (!g.adjacent(loop[i], loop[(i + 1) % n])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = distances_from(g, loop[i]);
    for (std::size_t j = 1; 2 * j <= n; ++j) {
      if (dist[loop[(i + j) % n]] != static_cast<int>(j)) return false;
    }
  }
  return true;
}

Surface loop_to_sphere(const Graph& g, const Loop& loop, const GrowOptions& options) {
  validate_loop(g, loop);
  if (!is_geodesic_loop(g, loop)) throw PreconditionError("loop is not a geodesic loop");
  return grow_surface(g, loop, options);
}

const std::vector<Graph>& census_graphs() {
  static const std::vector<Graph> graphs = enumerate_2graphs(positive_census_spec()).graphs;
  return graphs;
}

std::optional<std::size_t> census_identity(const Graph& g) {
  const CanonicalForm form = canonical_form(g);
  const auto& graphs = census_graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() == g.order() && canonical_form(graphs[i]) == form) return i;
  }
  return std::nullopt;
}

DiameterReport diameter_bound_check(const Graph& g) {
  DiameterReport report;
  report.diameter = diameter(g);
  if (!report.diameter || *report.diameter == 0) return report;
  const DistanceMatrix dist(g);
  bool found = false;
  for (Vertex x = 0; x < g.order() && !found; ++x) {
    for (Vertex y = x + 1; y < g.order() && !found; ++y) {
      if (dist(x, y) == static_cast<int>(*report.diameter)) {
        report.x = x;
        report.y = y;
        found = true;
      }
    }
  }
  report.arc = geodesic_arc(g, report.x, report.y);
  try {
    GrowOptions options;
    options.close = true;
    report.surface = grow_surface(g, report.arc, options);
    const Graph s = surface_graph(*report.surface).graph;
    report.surface_identity = census_identity(s);
    report.surface_diameter = diameter(s);
  } catch (const ConstructionError& e) {
    report.growth_error = e.what();
  }
  return report;
}

}  // namespace dsphere
