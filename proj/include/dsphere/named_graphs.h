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

#include <string>
#include <string_view>
#include <vector>

#include "dsphere/graph.h"

namespace dsphere {

/// C_k on 0..k-1, i ~ i+1 mod k. Requires k >= 3.
Graph cycle_graph(std::size_t k);
/// Path on k vertices 0 - 1 - ... - (k-1).
Graph path_graph(std::size_t k);
Graph complete_graph(std::size_t n);
/// Rim 0..k-1 as C_k, center k. Requires k >= 3.
Graph wheel_graph(std::size_t k);

/// The d-dimensional cross-polytope: 2(d+1) vertices where 2i and 2i+1 are
/// the only non-adjacent pairs. d = -1 gives the empty graph, d = 0 two
/// isolated points.
Graph cross_polytope(int d);
/// Adds two non-adjacent apexes n and n+1 joined to every vertex of g.
Graph suspension(const Graph& g);

Graph octahedron();
/// 0 is the north pole, 1..5 the upper ring, 6..10 the lower ring, 11 the
/// south pole. Upper i touches lower 5+i and 5+(i mod 5)+1.
Graph icosahedron();
/// Vertices 0..11 are the icosahedron's (degree 5); 12..31 stand for its
/// triangles in lexicographic order (degree 6).
Graph pentakis_dodecahedron();
/// 6-regular torus on the 5x5 grid: (i,j) = 5i+j touches (i+-1,j), (i,j+-1),
/// (i+1,j-1) and (i-1,j+1), all mod 5.
Graph flat_torus();
/// The icosahedron refined once along edge (0,1).
Graph refined_icosahedron();

/// The essential loop (0,0),(1,0),...,(4,0) of flat_torus().
std::vector<Vertex> flat_torus_essential_loop();

/// Resolves ids such as "octahedron", "cycle-7", "wheel-5",
/// "cross-polytope-3", "suspension-of-icosahedron". Throws InputError on
/// unknown ids or bad parameters.
Graph named_graph(std::string_view id);
/// Short description of the id grammar, for help texts.
std::vector<std::string> named_graph_ids();

}  // namespace dsphere
