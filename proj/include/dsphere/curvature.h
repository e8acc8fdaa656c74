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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "dsphere/graph.h"

namespace dsphere {

using Rational = boost::rational<long long>;

/// Always "p/q", denominator included even when it is 1.
std::string to_string(const Rational& r);

/// 1 - deg(x)/6.
Rational vertex_curvature(const Graph& g, Vertex x);
/// 1 - (deg a + deg b)/12. Throws InputError when e is not an edge.
Rational ricci_curvature(const Graph& g, const Edge& e);
/// 1 - (deg a + deg b + deg c)/18. Throws InputError unless f is a triangle.
Rational triangle_curvature(const Graph& g, const Clique& f);

/// Chordless cycles of length >= min_length, each listed once: starting at
/// its smallest vertex, second vertex smaller than the last.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, std::size_t min_length = 3);

struct WheelEmbedding {
  Vertex center = 0;
  /// Host vertices in cyclic order, at least four of them.
  std::vector<Vertex> rim;
};

/// Every center x together with every chordless cycle of length >= 4 in S(x).
/// Such a cycle plus x always generates exactly the wheel.
std::vector<WheelEmbedding> embedded_wheels(const Graph& g);

/// Two readings of the curvature sign for a d-graph: the literal one over
/// embedded wheels, and the one over links of (d-1)-vertex cliques (cycles in
/// a d-graph). They coincide for d <= 2.
struct CurvatureSign {
  int dimension = 0;
  bool wheel_positive = true;
  bool wheel_negative = true;
  bool link_positive = true;
  bool link_negative = true;
  std::size_t wheel_count = 0;
  std::size_t link_count = 0;
  /// Rim lengths found among embedded wheels and among clique links.
  std::vector<std::size_t> wheel_rims;
  std::vector<std::size_t> link_lengths;
};

/// Throws PreconditionError unless g is a d-graph.
CurvatureSign curvature_sign(const Graph& g);
/// Decided by the clique-link reading; all links have length 4 or 5.
bool positive_curvature(const Graph& g);
/// Decided by the clique-link reading; all links have length >= 7.
bool negative_curvature(const Graph& g);

struct CurvatureReport {
  std::vector<Rational> vertex_curvatures;
  std::vector<std::pair<Edge, Rational>> edge_curvatures;
  std::vector<std::pair<Clique, Rational>> triangle_curvatures;
  FVector f_vector;
  long chi = 0;
  std::optional<int> dimension;
  Rational vertex_sum;
  Rational edge_sum;
  Rational triangle_sum;
  /// Sum of K(x) equals chi.
  bool gauss_bonnet_ok = false;
  /// 2e = 3f.
  bool dehn_sommerville_ok = false;
};

CurvatureReport curvature_report(const Graph& g);

/// Replaces edge (a,b) by a new vertex n joined to a, b and their two common
/// neighbors. Throws InputError when e is not an edge or its endpoints do not
/// have exactly two common neighbors.
Graph edge_refine(const Graph& g, const Edge& e);

}  // namespace dsphere
