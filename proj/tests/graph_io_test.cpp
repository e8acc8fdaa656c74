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

#include "dsphere/graph_io.h"

#include <gtest/gtest.h>

#include "dsphere/canonical.h"
#include "dsphere/errors.h"
#include "dsphere/named_graphs.h"
#include "test_util.h"

namespace dsphere {
namespace {

TEST(Graph6, KnownEncodings) {
  // Reference strings from the format description: K4 is "C~", the 5-cycle
  // 0-1-2-3-4-0 is "Dhc", the empty graph on 0 vertices is "?".
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(Graph()), "?");
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n"), cycle_graph(5));
}

TEST(Graph6, LargeOrderHeader) {
  const Graph g = path_graph(100);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s[0], 126);
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937 rng(17);
  for (std::size_t n = 0; n < 70; n += 3) {
    const Graph g = testing::random_graph(n, 0.3, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), InputError);
  EXPECT_THROW(parse_graph6("D"), InputError);
  EXPECT_THROW(parse_graph6("Dhcc"), InputError);
  EXPECT_THROW(parse_graph6("D\x01\x01"), InputError);
  EXPECT_THROW(parse_graph6("Bx"), InputError);  // padding bits set
}

TEST(Json, RoundTripAndOrdering) {
  const Graph ico = icosahedron();
  const nlohmann::json j = graph_to_json(ico);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["edges"].size(), 30u);
  for (std::size_t i = 0; i + 1 < j["edges"].size(); ++i) {
    EXPECT_LT(j["edges"][i][0], j["edges"][i][1]);
    const auto a = j["edges"][i].get<std::pair<std::size_t, std::size_t>>();
    const auto b = j["edges"][i + 1].get<std::pair<std::size_t, std::size_t>>();
    EXPECT_LT(a, b);
  }
  EXPECT_EQ(graph_from_json(j), ico);
  EXPECT_EQ(parse_graph(j.dump()), ico);
  EXPECT_TRUE(parse_graph(R"({"n": 0, "edges": []})").empty());
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(parse_graph(R"({"n": 3, "edges": [[0, 3]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "edges": [[1, 1]]})"), InputError);
  EXPECT_THROW(parse_graph(R"({"edges": []})"), InputError);
  EXPECT_THROW(parse_graph(R"({"n": 3, "edges": [[0]]})"), InputError);
  EXPECT_THROW(parse_graph("{nope"), InputError);
}

TEST(RoundTrip, PreservesIsomorphismClass) {
  std::mt19937 rng(4);
  for (const std::string id : {"octahedron", "icosahedron", "flat-torus",
                               "pentakis-dodecahedron", "suspension-of-icosahedron"}) {
    const Graph g = relabel(named_graph(id), testing::random_permutation(named_graph(id).order(), rng));
    EXPECT_EQ(canonical_form(parse_graph(to_graph6(g))), canonical_form(g));
    EXPECT_EQ(canonical_form(parse_graph(graph_to_json(g).dump())), canonical_form(g));
  }
}

TEST(Dot, HighlightsRequestedEdges) {
  DotStyle style;
  style.highlight_edges = {Edge(1, 0)};
  style.highlight_vertices = {2};
  const std::string dot = to_dot(cycle_graph(3), style);
  EXPECT_NE(dot.find("0 -- 1 [color=red"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
  EXPECT_NE(dot.find("2 [style=filled"), std::string::npos);
}

}  // namespace
}  // namespace dsphere
