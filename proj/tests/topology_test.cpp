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

#include "dsphere/topology.h"

#include <gtest/gtest.h>

#include "dsphere/errors.h"
#include "dsphere/named_graphs.h"
#include "test_util.h"

namespace dsphere {
namespace {

std::vector<std::pair<Graph, int>> spheres() {
  return {{Graph(), -1},
          {cross_polytope(0), 0},
          {cycle_graph(4), 1},
          {cycle_graph(9), 1},
          {octahedron(), 2},
          {icosahedron(), 2},
          {pentakis_dodecahedron(), 2},
          {refined_icosahedron(), 2},
          {cross_polytope(3), 3},
          {suspension(icosahedron()), 3},
          {cross_polytope(4), 4}};
}

TEST(Contractible, Examples) {
  EXPECT_TRUE(is_contractible(complete_graph(1)));
  EXPECT_FALSE(is_contractible(Graph()));
  EXPECT_FALSE(is_contractible(cycle_graph(4)));
  EXPECT_FALSE(is_contractible(octahedron()));
  EXPECT_TRUE(is_contractible(path_graph(6)));
  EXPECT_TRUE(is_contractible(wheel_graph(7)));
  EXPECT_TRUE(is_contractible(puncture(octahedron(), 0).graph));
  // The 3-cycle is a 2-simplex, hence contractible.
  EXPECT_TRUE(is_contractible(cycle_graph(3)));
}

TEST(Contractible, CompleteGraphsReplay) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const Graph k = complete_graph(n);
    const auto w = contraction_witness(k);
    ASSERT_TRUE(w.has_value()) << n;
    EXPECT_TRUE(replay_contraction(k, k.all_vertices(), *w));
  }
}

TEST(Contractible, WitnessTamperingIsCaught) {
  const Graph g = puncture(icosahedron(), 0).graph;
  auto w = contraction_witness(g);
  ASSERT_TRUE(w.has_value());
  ASSERT_TRUE(replay_contraction(g, g.all_vertices(), *w));
  auto broken = *w;
  std::swap(broken.steps.front().vertex, broken.steps.back().vertex);
  EXPECT_FALSE(replay_contraction(g, g.all_vertices(), broken));
  auto truncated = *w;
  truncated.steps.pop_back();
  EXPECT_FALSE(replay_contraction(g, g.all_vertices(), truncated));
}

TEST(Sphere, DefinitionExamples) {
  EXPECT_TRUE(is_sphere(Graph(), -1));
  EXPECT_TRUE(is_sphere(cycle_graph(5), 1));
  EXPECT_FALSE(is_sphere(cycle_graph(3), 1));
  EXPECT_TRUE(is_sphere(octahedron(), 2));
  EXPECT_FALSE(is_sphere(octahedron(), 1));
  EXPECT_FALSE(is_sphere(octahedron(), 3));
  EXPECT_FALSE(is_sphere(flat_torus(), 2));
  EXPECT_FALSE(is_sphere(complete_graph(1), 0));
  EXPECT_FALSE(is_sphere(Graph(), 0));
}

TEST(Sphere, CertificatesReplay) {
  for (const auto& [g, d] : spheres()) {
    const auto cert = sphere_certificate(g, d);
    ASSERT_TRUE(cert.has_value()) << "d=" << d << " n=" << g.order();
    EXPECT_TRUE(replay_sphere(g, *cert, d));
    EXPECT_FALSE(replay_sphere(g, *cert, d + 1));
  }
}

TEST(Sphere, CertificateTamperingIsCaught) {
  const Graph g = icosahedron();
  auto cert = *sphere_certificate(g, 2);
  auto bad_apex = cert;
  bad_apex.apex = (*cert.apex + 1) % g.order();
  EXPECT_FALSE(replay_sphere(g, bad_apex, 2));
  auto bad_link = cert;
  bad_link.links.pop_back();
  EXPECT_FALSE(replay_sphere(g, bad_link, 2));
  // A torus cannot be certified by borrowing a sphere's certificate.
  EXPECT_FALSE(replay_sphere(flat_torus(), cert, 2));
}

TEST(Sphere, EveryPunctureIsContractible) {
  for (const auto& [g, d] : spheres()) {
    for (Vertex x = 0; x < g.order(); ++x) {
      EXPECT_TRUE(is_contractible(puncture(g, x).graph)) << "d=" << d << " x=" << x;
    }
  }
}

TEST(DGraph, Examples) {
  EXPECT_EQ(is_dgraph(cycle_graph(4)), 1);
  EXPECT_EQ(is_dgraph(icosahedron()), 2);
  EXPECT_EQ(is_dgraph(suspension(icosahedron())), 3);
  EXPECT_EQ(is_dgraph(flat_torus()), 2);
  EXPECT_EQ(is_dgraph(Graph()), -1);
  EXPECT_EQ(is_dgraph(Graph::edgeless(3)), 0);
  EXPECT_FALSE(is_dgraph(complete_graph(3)).has_value());
  EXPECT_FALSE(is_dgraph(wheel_graph(5)).has_value());
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(is_dgraph(cross_polytope(d)), d);
}

TEST(Ball, Examples) {
  EXPECT_TRUE(is_ball(path_graph(3), 1));
  EXPECT_TRUE(is_ball(complete_graph(1), 0));
  EXPECT_TRUE(is_ball(puncture(octahedron(), 0).graph, 2));
  EXPECT_TRUE(is_ball(puncture(icosahedron(), 5).graph, 2));
  EXPECT_TRUE(is_ball(wheel_graph(5), 2));
  EXPECT_TRUE(is_ball(puncture(suspension(icosahedron()), 12).graph, 3));
  EXPECT_FALSE(is_ball(cycle_graph(4), 1));
  EXPECT_FALSE(is_ball(octahedron(), 2));
  EXPECT_FALSE(is_ball(complete_graph(4), 2));
  EXPECT_FALSE(is_ball(path_graph(3), 2));
  EXPECT_THROW(is_ball(path_graph(3), -1), PreconditionError);
}

TEST(Ball, BoundaryOfPuncturedIcosahedronIsTheLink) {
  const Subgraph p = puncture(icosahedron(), 0);
  const VertexSet boundary = ball_boundary(p.graph, 2);
  std::vector<Vertex> host;
  for (Vertex v : boundary.members()) host.push_back(p.to_host[v]);
  EXPECT_EQ(host, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(TwoBalls, Decompositions) {
  for (const Graph& g : {octahedron(), icosahedron(), refined_icosahedron()}) {
    const auto pair = two_ball_decomposition(g, 2);
    ASSERT_TRUE(pair.has_value());
    EXPECT_EQ((pair->first | pair->second), g.all_vertices());
  }
  EXPECT_FALSE(two_ball_decomposition(flat_torus(), 2).has_value());
  EXPECT_THROW(two_ball_decomposition(wheel_graph(5), 2), PreconditionError);
  EXPECT_THROW(two_ball_decomposition(octahedron(), 3), PreconditionError);
}

TEST(Classify, Descriptions) {
  EXPECT_EQ(describe(classify_topology(Graph())), "(-1)-sphere");
  EXPECT_EQ(describe(classify_topology(octahedron())), "2-sphere");
  EXPECT_EQ(describe(classify_topology(flat_torus())), "2-graph, not a sphere");
  EXPECT_EQ(describe(classify_topology(wheel_graph(6))), "2-ball");
  EXPECT_EQ(classify_topology(complete_graph(4)).kind, VerdictKind::contractible);
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  EXPECT_EQ(classify_topology(Graph::from_edges(4, two)).kind, VerdictKind::none);
}

void expect_cache_transparent(const Graph& g, VerdictCache& cache) {
  EXPECT_EQ(is_contractible(g, nullptr), is_contractible(g, &cache));
  const auto d = is_dgraph(g, nullptr);
  EXPECT_EQ(d, is_dgraph(g, &cache));
  for (int k = -1; k <= 3; ++k) EXPECT_EQ(is_sphere(g, k, nullptr), is_sphere(g, k, &cache));
}

TEST(Memo, TransparentOnAllGraphsUpToSixVertices) {
  VerdictCache cache;
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::size_t bits = n == 0 ? 0 : n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << bits); ++mask) {
      expect_cache_transparent(testing::graph_from_mask(n, mask), cache);
    }
  }
  EXPECT_GT(cache.size(), 0u);
}

TEST(Memo, TransparentOnAllUnlabeledGraphsUpToNineVertices) {
  // Class counts 1044, 12346 and 274668 are the known numbers of graphs on
  // 7, 8 and 9 vertices.
  const std::vector<std::size_t> expected{1044, 12346, 274668};
  VerdictCache cache;
  for (std::size_t n = 7; n <= 9; ++n) {
    const auto graphs = testing::all_unlabeled_graphs(n);
    ASSERT_EQ(graphs.size(), expected[n - 7]);
    for (const Graph& g : graphs) expect_cache_transparent(g, cache);
  }
}

TEST(Memo, TransparentOnRandomGraphsSevenToNine) {
  VerdictCache cache;
  std::mt19937 rng(9);
  for (std::size_t n = 7; n <= 9; ++n) {
    for (int t = 0; t < 300; ++t) {
      const double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
      expect_cache_transparent(testing::random_graph(n, p, rng), cache);
    }
  }
}

}  // namespace
}  // namespace dsphere
