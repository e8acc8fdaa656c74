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

#include "dsphere/curvature.h"

#include <algorithm>
#include <functional>

#include "dsphere/errors.h"
#include "dsphere/topology.h"

namespace dsphere {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational vertex_curvature(const Graph& g, Vertex x) {
  return Rational(1) - Rational(static_cast<long long>(g.degree(x)), 6);
}

Rational ricci_curvature(const Graph& g, const Edge& e) {
  if (!g.adjacent(e.first, e.second)) {
    throw InputError("(" + std::to_string(e.first) + "," + std::to_string(e.second) +
                     ") is not an edge");
  }
  const auto sum = static_cast<long long>(g.degree(e.first) + g.degree(e.second));
  return Rational(1) - Rational(sum, 12);
}

Rational triangle_curvature(const Graph& g, const Clique& f) {
  if (f.size() != 3 || !g.adjacent(f[0], f[1]) || !g.adjacent(f[1], f[2]) ||
      !g.adjacent(f[0], f[2])) {
    throw InputError("not a triangle of the graph");
  }
  const auto sum = static_cast<long long>(g.degree(f[0]) + g.degree(f[1]) + g.degree(f[2]));
  return Rational(1) - Rational(sum, 18);
}

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, std::size_t min_length) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  // `blocked` holds the path and the neighbors of its internal vertices.
  std::function<void(Vertex, const VertexSet&)> extend = [&](Vertex s, const VertexSet& blocked) {
    const Vertex tail = path.back();
    g.neighbors(tail).for_each([&](Vertex u) {
      if (u <= s || blocked.contains(u)) return;
      const bool closes = path.size() >= 2 && g.adjacent(u, s);
      if (closes && path.size() == 2) return;  // triangles are listed separately
      path.push_back(u);
      if (closes) {
        if (path.size() >= min_length && path[1] < path.back()) out.push_back(path);
      } else {
        VertexSet next = blocked;
        if (path.size() > 2) next |= g.neighbors(tail);
        next.insert(u);
        extend(s, next);
      }
      path.pop_back();
    });
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    VertexSet blocked(g.order());
    blocked.insert(s);
    extend(s, blocked);
    if (min_length <= 3) {
      // Triangles through s with both other vertices larger.
      g.neighbors(s).for_each([&](Vertex a) {
        if (a <= s) return;
        g.neighbors(s).for_each([&](Vertex b) {
          if (b > a && g.adjacent(a, b)) out.push_back({s, a, b});
        });
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WheelEmbedding> embedded_wheels(const Graph& g) {
  std::vector<WheelEmbedding> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    const Subgraph link = unit_sphere(g, x);
    for (const auto& cycle : induced_cycles(link.graph, 4)) {
      WheelEmbedding w;
      w.center = x;
      for (Vertex v : cycle) w.rim.push_back(link.to_host[v]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

CurvatureSign curvature_sign(const Graph& g) {
  const auto d = is_dgraph(g);
  if (!d) throw PreconditionError("curvature sign needs a d-graph");
  CurvatureSign sign;
  sign.dimension = *d;
  if (*d <= 1) return sign;

  for (const WheelEmbedding& w : embedded_wheels(g)) {
    const std::size_t k = w.rim.size();
    sign.wheel_rims.push_back(k);
    sign.wheel_positive = sign.wheel_positive && (k == 4 || k == 5);
    sign.wheel_negative = sign.wheel_negative && k >= 7;
  }
  sign.wheel_count = sign.wheel_rims.size();

  const auto complex = cliques(g, static_cast<std::size_t>(*d - 1));
  for (const Clique& c : complex.lists[static_cast<std::size_t>(*d - 2)]) {
    VertexSet common = g.all_vertices();
    for (Vertex v : c) common &= g.neighbors(v);
    const std::size_t k = common.size();
    sign.link_lengths.push_back(k);
    sign.link_positive = sign.link_positive && (k == 4 || k == 5);
    sign.link_negative = sign.link_negative && k >= 7;
  }
  sign.link_count = sign.link_lengths.size();

  for (auto* v : {&sign.wheel_rims, &sign.link_lengths}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return sign;
}

bool positive_curvature(const Graph& g) { return curvature_sign(g).link_positive; }

bool negative_curvature(const Graph& g) { return curvature_sign(g).link_negative; }

CurvatureReport curvature_report(const Graph& g) {
  CurvatureReport r;
  const auto complex = cliques(g, 3);
  r.f_vector = f_vector(g);
  r.chi = euler_characteristic(r.f_vector);
  r.dimension = is_dgraph(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    r.vertex_curvatures.push_back(vertex_curvature(g, x));
    r.vertex_sum += r.vertex_curvatures.back();
  }
  for (const Edge& e : g.edges()) {
    r.edge_curvatures.emplace_back(e, ricci_curvature(g, e));
    r.edge_sum += r.edge_curvatures.back().second;
  }
  if (complex.lists.size() > 2) {
    for (const Clique& f : complex.lists[2]) {
      r.triangle_curvatures.emplace_back(f, triangle_curvature(g, f));
      r.triangle_sum += r.triangle_curvatures.back().second;
    }
  }
  r.gauss_bonnet_ok = r.vertex_sum == Rational(r.chi);
  r.dehn_sommerville_ok = 2 * r.f_vector.edges() == 3 * r.f_vector.triangles();
  return r;
}

Graph edge_refine(const Graph& g, const Edge& e) {
  if (!g.adjacent(e.first, e.second)) {
    throw InputError("edge_refine: (" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + ") is not an edge");
  }
  const VertexSet common = g.neighbors(e.first) & g.neighbors(e.second);
  if (common.size() != 2) {
    throw InputError("edge_refine: endpoints have " + std::to_string(common.size()) +
                     " common neighbors, expected 2");
  }
  GraphBuilder b(g);
  b.remove_edge(e.first, e.second);
  const Vertex mid = b.add_vertex();
  b.add_edge(mid, e.first);
  b.add_edge(mid, e.second);
  common.for_each([&](Vertex c) { b.add_edge(mid, c); });
  return b.build();
}

}  // namespace dsphere
