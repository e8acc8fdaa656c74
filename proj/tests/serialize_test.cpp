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

#include "dsphere/serialize.h"

#include <gtest/gtest.h>

#include "dsphere/graph_io.h"
#include "dsphere/named_graphs.h"

namespace dsphere {
namespace {

using nlohmann::json;

TEST(Serialize, CertificateRoundTripReplays) {
  for (const Graph& g : {octahedron(), icosahedron(), cross_polytope(3)}) {
    const int d = *is_dgraph(g);
    const auto cert = sphere_certificate(g, d);
    ASSERT_TRUE(cert.has_value());
    const json j = to_json(*cert);
    const SphereCertificate back = sphere_certificate_from_json(json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(replay_sphere(g, back, d));
  }
}

TEST(Serialize, TamperedCertificateFailsReplay) {
  const Graph g = icosahedron();
  json j = to_json(*sphere_certificate(g, 2));
  // Point the apex at another vertex; the collapse no longer matches.
  j["apex"] = (j["apex"].get<Vertex>() + 1) % 12;
  EXPECT_FALSE(replay_sphere(g, sphere_certificate_from_json(j), 2));
}

TEST(Serialize, MalformedCertificate) {
  EXPECT_THROW(sphere_certificate_from_json(json::parse(R"({"apex": 0})")), InputError);
  EXPECT_THROW(sphere_certificate_from_json(json::parse(R"({"dimension": 1, "apex": 0,
      "collapse": {"steps": 3, "last": 0}, "links": []})")), InputError);
  EXPECT_THROW(contraction_witness_from_json(json::parse(R"({"steps": [], "last": "x"})")),
               InputError);
  const json empty = to_json(SphereCertificate{});
  EXPECT_EQ(empty, json::parse(R"({"dimension": -1})"));
}

TEST(Serialize, CurvatureReportUsesExactFractions) {
  const json j = to_json(curvature_report(octahedron()));
  EXPECT_EQ(j["vertex_curvatures"][0], "1/3");
  EXPECT_EQ(j["vertex_sum"], "2/1");
  EXPECT_EQ(j["chi"], 2);
  EXPECT_EQ(j["f_vector"], json::parse("[6, 12, 8]"));
  EXPECT_EQ(j["edge_curvatures"].size(), 12u);
  EXPECT_EQ(j["edge_curvatures"][0]["K"], "1/3");
  EXPECT_TRUE(j["gauss_bonnet_ok"].get<bool>());
}

TEST(Serialize, Verdicts) {
  const json j = to_json(classify_topology(flat_torus()));
  EXPECT_EQ(j["kind"], "dgraph");
  EXPECT_EQ(j["dgraph_dimension"], 2);
  EXPECT_EQ(j["description"], "2-graph, not a sphere");
  const json s = to_json(classify_topology(octahedron()));
  EXPECT_EQ(s["kind"], "sphere");
  EXPECT_TRUE(s.contains("certificate"));
  const json sign = to_json(curvature_sign(icosahedron()));
  EXPECT_TRUE(sign["link_positive"].get<bool>());
  EXPECT_EQ(sign["wheel_rims"], json::parse("[5]"));
}

TEST(Serialize, LoopContraction) {
  const json j = to_json(contract_loop(icosahedron(), Loop{1, 2, 3, 4, 5}));
  EXPECT_EQ(j["verdict"], "contractible");
  ASSERT_FALSE(j["moves"].empty());
  EXPECT_TRUE(j["moves"][0].contains("before"));
}

TEST(Serialize, SurfaceAndDot) {
  const Surface s = grow_surface(octahedron(), geodesic_arc(octahedron(), 0, 1));
  const json j = to_json(s);
  EXPECT_TRUE(j["closed"].get<bool>());
  EXPECT_TRUE(j["embedded"].get<bool>());
  EXPECT_EQ(j["census_identity"], 0);
  EXPECT_EQ(j["boundary"], json::array());
  EXPECT_TRUE(is_isomorphic(parse_graph6(j["graph6"].get<std::string>()), octahedron()));
  const std::string dot = surface_to_dot(s);
  EXPECT_NE(dot.find("graph surface"), std::string::npos);
  EXPECT_NE(dot.find("color=red"), std::string::npos);
}

TEST(Serialize, CensusAndDossiers) {
  const CensusResult r = enumerate_2graphs(positive_census_spec());
  const json j = to_json(r);
  EXPECT_EQ(j["graphs"].size(), 6u);
  EXPECT_EQ(j["per_v_counts"]["12"], 1);
  EXPECT_FALSE(j["per_v_counts"].contains("11"));
  const auto dossiers = classify_census(r);
  const json d = to_json(dossiers.back());
  EXPECT_EQ(d["v"], 12);
  EXPECT_EQ(d["diameter"], 3);
  EXPECT_EQ(d["degree_histogram"]["5"], 12);
  EXPECT_EQ(d["vertex_curvature_sum"], "2/1");
}

TEST(Serialize, DiameterReport) {
  const json j = to_json(diameter_bound_check(icosahedron()));
  EXPECT_EQ(j["diameter"], 3);
  EXPECT_EQ(j["arc"].size(), 4u);
  EXPECT_EQ(j["surface_identity"], 5);
}

}  // namespace
}  // namespace dsphere
