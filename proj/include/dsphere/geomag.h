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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dsphere/curvature.h"
#include "dsphere/errors.h"
#include "dsphere/graph.h"
#include "dsphere/loops.h"

namespace dsphere {

/// A shortest path x = vertices.front(), ..., y = vertices.back().
struct GeodesicArc {
  std::vector<Vertex> vertices;

  Vertex x() const { return vertices.front(); }
  Vertex y() const { return vertices.back(); }
  std::size_t length() const { return vertices.size() - 1; }
};

/// Shortest path from x to y. Walking back from y, each step goes to the
/// smallest-index vertex one hop closer to x. Throws InputError on a bad
/// vertex or a disconnected pair.
GeodesicArc geodesic_arc(const Graph& g, Vertex x, Vertex y);
/// Throws InputError unless the arc is a path of host-distance length.
void validate_arc(const Graph& g, const GeodesicArc& arc);

/// Extends an arc of length >= 1 to an induced cycle of length >= 4 that
/// meets the arc only at x and y. The return path is a shortest path in G
/// minus the closed unit balls of the interior arc vertices; for a single
/// edge the edge and the common neighbors of its ends are removed instead.
/// Throws ConstructionError when x and y get separated.
std::vector<Vertex> complete_to_circle(const Graph& g, const GeodesicArc& arc);

using Triangle = std::array<Vertex, 3>;

/// A 2-graph with boundary grown inside a host, as a union of wheels.
struct Surface {
  Graph host;
  std::vector<WheelEmbedding> wheels;
  /// Sorted triangles (each sorted) covered by the wheels.
  std::vector<Triangle> triangles;
  /// Sorted surface edges: triangle edges plus seed edges not yet covered.
  std::vector<Edge> edges;
  VertexSet vertex_set;
  /// Boundary components as cycles; empty when the surface is closed.
  std::vector<std::vector<Vertex>> boundary;
  /// The host subgraph induced on vertex_set has exactly the surface edges.
  bool embedded = false;
  bool closed = false;
};

/// The surface as a graph on 0..k-1 (to_host maps back).
Subgraph surface_graph(const Surface& s);

enum class SurfaceLinkKind { interior, boundary, irregular, broken };
/// The link of v inside the surface: a cycle of length >= 4 (interior), a
/// path (boundary), a union of several paths or isolated points (irregular,
/// fixable by more wheels), or anything else (broken).
SurfaceLinkKind surface_link_kind(const Surface& s, Vertex v);

/// Re-checks a surface from its triangles alone: every triangle and edge is
/// in the host, wheels match the triangles, every link is interior or
/// boundary, the surface is connected, and the flags and boundary agree.
bool verify_surface(const Surface& s);

/// A ConstructionError that carries the surface grown so far.
class GrowthError : public ConstructionError {
 public:
  GrowthError(const std::string& what, Surface partial)
      : ConstructionError(what), partial_(std::move(partial)) {}
  const Surface& partial() const { return partial_; }

 private:
  Surface partial_;
};

struct GrowOptions {
  /// Keep adding wheels until no boundary is left, also for arc seeds.
  bool close = false;
  /// Wheel budget; 4n when unset.
  std::optional<std::size_t> max_wheels;
};

/// Adds wheels until every seed vertex is interior and no link is
/// irregular (and, with `close`, until the surface is closed).
///
/// Centers are taken from the first nonempty tier: seed vertices that are
/// not interior, in seed order; then irregular vertices; then boundary
/// vertices, by index. The rim at x is an induced cycle of S(x) of length
/// >= 4 carrying every surface neighbor of x and every surface link edge of
/// x, chosen shortest first and then lexicographically (least rotation),
/// skipping rims that would break some link. A center without any rim is
/// passed over for the next one. Throws GrowthError when no center admits a
/// rim or the budget runs out.
Surface grow_surface(const Graph& g, const GeodesicArc& seed, const GrowOptions& options = {});
/// Same, seeded with a closed loop (cyclic vertex list). The surface is
/// always grown until it closes.
Surface grow_surface(const Graph& g, const Loop& seed, const GrowOptions& options = {});

/// True iff every sub-path of at most half the loop length is geodesic.
bool is_geodesic_loop(const Graph& g, const Loop& loop);
/// Checks the loop is a geodesic loop (else PreconditionError) and grows a
/// closed surface containing it.
Surface loop_to_sphere(const Graph& g, const Loop& loop, const GrowOptions& options = {});

/// The six connected positive-curvature 2-graphs, computed once.
const std::vector<Graph>& census_graphs();
/// Position of g among census_graphs() up to isomorphism.
std::optional<std::size_t> census_identity(const Graph& g);

struct DiameterReport {
  std::optional<std::size_t> diameter;
  Vertex x = 0;
  Vertex y = 0;
  GeodesicArc arc;
  std::optional<Surface> surface;
  std::optional<std::size_t> surface_identity;
  std::optional<std::size_t> surface_diameter;
  /// Set when growth failed.
  std::string growth_error;
};

/// Diameter of g, plus a closed surface grown around a geodesic arc between
/// the smallest pair at maximal distance.
DiameterReport diameter_bound_check(const Graph& g);

}  // namespace dsphere
