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

#include "dsphere/named_graphs.h"

#include <algorithm>
#include <charconv>

#include "dsphere/curvature.h"
#include "dsphere/errors.h"

namespace dsphere {

namespace {

constexpr std::size_t kTorus = 5;

Vertex torus_vertex(long i, long j) {
  const long m = static_cast<long>(kTorus);
  return static_cast<Vertex>(((i % m + m) % m) * m + ((j % m + m) % m));
}

std::size_t parse_count(std::string_view text, std::string_view id) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("bad parameter in named graph id '" + std::string(id) + "'");
  }
  return value;
}

}  // namespace

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw InputError("cycle needs at least 3 vertices");
  GraphBuilder b(k);
  for (Vertex i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return b.build();
}

Graph path_graph(std::size_t k) {
  GraphBuilder b(k);
  for (Vertex i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return b.build();
}

Graph wheel_graph(std::size_t k) {
  if (k < 3) throw InputError("wheel needs a rim of at least 3 vertices");
  GraphBuilder b(cycle_graph(k));
  const Vertex center = b.add_vertex();
  for (Vertex i = 0; i < k; ++i) b.add_edge(i, center);
  return b.build();
}

Graph cross_polytope(int d) {
  if (d < -1) throw InputError("cross-polytope dimension must be >= -1");
  const std::size_t n = 2 * static_cast<std::size_t>(d + 1);
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if ((i ^ 1) != j) b.add_edge(i, j);
    }
  }
  return b.build();
}

Graph suspension(const Graph& g) {
  GraphBuilder b(g);
  const Vertex north = b.add_vertex();
  const Vertex south = b.add_vertex();
  for (Vertex v = 0; v < g.order(); ++v) {
    b.add_edge(v, north);
    b.add_edge(v, south);
  }
  return b.build();
}

Graph octahedron() { return cross_polytope(2); }

Graph icosahedron() {
  GraphBuilder b(12);
  for (Vertex i = 1; i <= 5; ++i) {
    const Vertex next = i % 5 + 1;
    b.add_edge(0, i);
    b.add_edge(i, next);
    b.add_edge(5 + i, 5 + next);
    b.add_edge(i, 5 + i);
    b.add_edge(i, 5 + next);
    b.add_edge(5 + i, 11);
  }
  return b.build();
}

Graph pentakis_dodecahedron() {
  const Graph ico = icosahedron();
  const auto triangles = cliques(ico, 3).lists[2];
  GraphBuilder b(ico.order() + triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const Vertex tv = ico.order() + t;
    for (Vertex corner : triangles[t]) b.add_edge(corner, tv);
    for (std::size_t u = t + 1; u < triangles.size(); ++u) {
      std::vector<Vertex> shared;
      std::set_intersection(triangles[t].begin(), triangles[t].end(), triangles[u].begin(),
                            triangles[u].end(), std::back_inserter(shared));
      if (shared.size() == 2) b.add_edge(tv, ico.order() + u);
    }
  }
  return b.build();
}

Graph flat_torus() {
  GraphBuilder b(kTorus * kTorus);
  for (long i = 0; i < static_cast<long>(kTorus); ++i) {
    for (long j = 0; j < static_cast<long>(kTorus); ++j) {
      const Vertex v = torus_vertex(i, j);
      b.add_edge(v, torus_vertex(i + 1, j));
      b.add_edge(v, torus_vertex(i, j + 1));
      b.add_edge(v, torus_vertex(i + 1, j - 1));
    }
  }
  return b.build();
}

Graph refined_icosahedron() { return edge_refine(icosahedron(), Edge(0, 1)); }

std::vector<Vertex> flat_torus_essential_loop() {
  std::vector<Vertex> loop;
  for (long i = 0; i < static_cast<long>(kTorus); ++i) loop.push_back(torus_vertex(i, 0));
  return loop;
}

Graph named_graph(std::string_view id) {
  constexpr std::string_view kSuspension = "suspension-of-";
  if (id.substr(0, kSuspension.size()) == kSuspension) {
    return suspension(named_graph(id.substr(kSuspension.size())));
  }
  if (id == "empty") return Graph();
  if (id == "octahedron") return octahedron();
  if (id == "icosahedron") return icosahedron();
  if (id == "pentakis-dodecahedron") return pentakis_dodecahedron();
  if (id == "flat-torus") return flat_torus();
  if (id == "refined-icosahedron") return refined_icosahedron();

  const auto dash = id.rfind('-');
  if (dash != std::string_view::npos) {
    const std::string_view family = id.substr(0, dash);
    const std::size_t k = parse_count(id.substr(dash + 1), id);
    if (family == "cycle") return cycle_graph(k);
    if (family == "path") return path_graph(k);
    if (family == "complete") return complete_graph(k);
    if (family == "wheel") return wheel_graph(k);
    if (family == "cross-polytope") return cross_polytope(static_cast<int>(k));
  }
  throw InputError("unknown named graph '" + std::string(id) + "'");
}

std::vector<std::string> named_graph_ids() {
  return {"empty",          "octahedron",     "icosahedron", "pentakis-dodecahedron",
          "flat-torus",     "refined-icosahedron", "cycle-<k>",   "path-<k>",
          "complete-<n>",   "wheel-<k>",      "cross-polytope-<d>", "suspension-of-<id>"};
}

}  // namespace dsphere
