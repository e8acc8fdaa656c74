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

#include "dsphere/errors.h"
#include "dsphere/graph_io.h"

namespace dsphere {

using nlohmann::json;

namespace {

json rational(const Rational& r) { return to_string(r); }

json fvector(const FVector& f) { return f.counts; }

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::sphere:
      return "sphere";
    case VerdictKind::dgraph:
      return "dgraph";
    case VerdictKind::ball:
      return "ball";
    case VerdictKind::contractible:
      return "contractible";
    case VerdictKind::none:
      break;
  }
  return "none";
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("certificate JSON lacks \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate JSON field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json to_json(const ContractionWitness& w) {
  json steps = json::array();
  for (const ContractionStep& s : w.steps) {
    steps.push_back({{"vertex", s.vertex}, {"link", to_json(s.link)}});
  }
  return {{"steps", steps}, {"last", w.last}};
}

json to_json(const SphereCertificate& c) {
  json j{{"dimension", c.dimension}};
  if (c.dimension < 0) return j;
  j["apex"] = c.apex ? json(*c.apex) : json(nullptr);
  j["collapse"] = to_json(c.collapse);
  json links = json::array();
  for (const SphereCertificate& l : c.links) links.push_back(to_json(l));
  j["links"] = links;
  return j;
}

ContractionWitness contraction_witness_from_json(const json& j) {
  ContractionWitness w;
  w.last = field<Vertex>(j, "last");
  const json steps = field<json>(j, "steps");
  if (!steps.is_array()) throw InputError("certificate JSON: steps must be an array");
  for (const json& s : steps) {
    w.steps.push_back({field<Vertex>(s, "vertex"), contraction_witness_from_json(field<json>(s, "link"))});
  }
  return w;
}

SphereCertificate sphere_certificate_from_json(const json& j) {
  SphereCertificate c;
  c.dimension = field<int>(j, "dimension");
  if (c.dimension < 0) return c;
  const json apex = field<json>(j, "apex");
  if (!apex.is_null()) c.apex = field<Vertex>(j, "apex");
  c.collapse = contraction_witness_from_json(field<json>(j, "collapse"));
  const json links = field<json>(j, "links");
  if (!links.is_array()) throw InputError("certificate JSON: links must be an array");
  for (const json& l : links) c.links.push_back(sphere_certificate_from_json(l));
  return c;
}

json to_json(const TopologyVerdict& v) {
  json j{{"kind", kind_name(v.kind)},
         {"dimension", v.dimension},
         {"description", describe(v)},
         {"contractible", v.contractible}};
  j["dgraph_dimension"] = v.dgraph_dimension ? json(*v.dgraph_dimension) : json(nullptr);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  return j;
}

json to_json(const CurvatureSign& s) {
  return {{"dimension", s.dimension},
          {"wheel_positive", s.wheel_positive},
          {"wheel_negative", s.wheel_negative},
          {"link_positive", s.link_positive},
          {"link_negative", s.link_negative},
          {"wheel_count", s.wheel_count},
          {"link_count", s.link_count},
          {"wheel_rims", s.wheel_rims},
          {"link_lengths", s.link_lengths}};
}

json to_json(const CurvatureReport& r) {
  json vertices = json::array();
  for (const Rational& k : r.vertex_curvatures) vertices.push_back(rational(k));
  json edges = json::array();
  for (const auto& [e, k] : r.edge_curvatures) {
    edges.push_back({{"edge", {e.first, e.second}}, {"K", rational(k)}});
  }
  json triangles = json::array();
  for (const auto& [t, k] : r.triangle_curvatures) {
    triangles.push_back({{"triangle", t}, {"K", rational(k)}});
  }
  json j{{"vertex_curvatures", vertices},
         {"edge_curvatures", edges},
         {"triangle_curvatures", triangles},
         {"f_vector", fvector(r.f_vector)},
         {"chi", r.chi},
         {"vertex_sum", rational(r.vertex_sum)},
         {"edge_sum", rational(r.edge_sum)},
         {"triangle_sum", rational(r.triangle_sum)},
         {"gauss_bonnet_ok", r.gauss_bonnet_ok},
         {"dehn_sommerville_ok", r.dehn_sommerville_ok}};
  j["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
  return j;
}

json to_json(const LoopContraction& c) {
  json moves = json::array();
  for (const LoopMove& m : c.moves) {
    json move{{"kind", to_string(m.kind)}, {"position", m.position}, {"before", m.before},
              {"after", m.after}};
    if (m.kind == LoopMoveKind::expand) move["vertex"] = m.vertex;
    moves.push_back(move);
  }
  return {{"verdict", c.verdict == LoopVerdict::contractible ? "contractible" : "unknown"},
          {"states", c.states},
          {"budget_exhausted", c.budget_exhausted},
          {"moves", moves}};
}

json to_json(const Surface& s) {
  json wheels = json::array();
  for (const WheelEmbedding& w : s.wheels) wheels.push_back({{"center", w.center}, {"rim", w.rim}});
  json edges = json::array();
  for (const Edge& e : s.edges) edges.push_back({e.first, e.second});
  json j{{"wheels", wheels},
         {"vertices", s.vertex_set.members()},
         {"edges", edges},
         {"triangles", s.triangles},
         {"boundary", s.boundary},
         {"embedded", s.embedded},
         {"closed", s.closed}};
  if (s.closed) {
    const Graph g = surface_graph(s).graph;
    j["graph6"] = to_graph6(g);
    const auto id = census_identity(g);
    j["census_identity"] = id ? json(*id) : json(nullptr);
  }
  return j;
}

json to_json(const DiameterReport& r) {
  json j;
  j["diameter"] = r.diameter ? json(*r.diameter) : json(nullptr);
  j["pair"] = {r.x, r.y};
  j["arc"] = r.arc.vertices;
  if (r.surface) j["surface"] = to_json(*r.surface);
  j["surface_identity"] = r.surface_identity ? json(*r.surface_identity) : json(nullptr);
  j["surface_diameter"] = r.surface_diameter ? json(*r.surface_diameter) : json(nullptr);
  if (!r.growth_error.empty()) j["growth_error"] = r.growth_error;
  return j;
}

json to_json(const CensusResult& r) {
  json graphs = json::array();
  for (const Graph& g : r.graphs) graphs.push_back(to_graph6(g));
  json counts = json::object();
  for (const auto& [v, c] : r.per_v_counts) counts[std::to_string(v)] = c;
  return {{"graphs", graphs},
          {"per_v_counts", counts},
          {"nodes_explored", r.nodes_explored},
          {"candidates", r.candidates},
          {"rejected", r.rejected},
          {"skipped", r.skipped}};
}

json to_json(const CensusDossier& d) {
  json histogram = json::object();
  for (const auto& [deg, c] : d.degree_histogram) histogram[std::to_string(deg)] = c;
  json j{{"graph6", to_graph6(d.graph)},
         {"v", d.v},
         {"f_vector", fvector(d.f_vector)},
         {"degree_histogram", histogram},
         {"chi", d.curvature.chi},
         {"vertex_curvature_sum", rational(d.curvature.vertex_sum)},
         {"gauss_bonnet_ok", d.curvature.gauss_bonnet_ok},
         {"dehn_sommerville_ok", d.curvature.dehn_sommerville_ok},
         {"certificate_replays", d.certificate_replays},
         {"every_puncture_contractible", d.every_puncture_contractible},
         {"two_ball_decomposition_found", d.two_ball_decomposition_found},
         {"loops_checked", d.loops_checked},
         {"loops_contracted", d.loops_contracted}};
  j["diameter"] = d.diameter ? json(*d.diameter) : json(nullptr);
  if (d.certificate) j["certificate"] = to_json(*d.certificate);
  return j;
}

std::string surface_to_dot(const Surface& s, const std::string& name) {
  DotStyle style;
  style.name = name;
  style.highlight_edges = s.edges;
  style.highlight_vertices = s.vertex_set.members();
  return to_dot(s.host, style);
}

}  // namespace dsphere
