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

// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "dsphere/canonical.h"
#include "dsphere/census.h"
#include "dsphere/curvature.h"
#include "dsphere/geomag.h"
#include "dsphere/loops.h"
#include "dsphere/named_graphs.h"
#include "dsphere/topology.h"

namespace {

using namespace dsphere;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kCensusSeconds = 60.0;
constexpr double kGeomagSeconds = 120.0;
constexpr double kNegativeSeconds = 3600.0;
constexpr double kOracleSeconds = 600.0;
constexpr std::size_t kOracleMaxV = 8;
constexpr std::size_t kLoopMaxLength = 6;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "    failed: " << what << '\n';
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, Outcome& o) {
  std::cout << "criterion " << number << " (" << title << "): " << (o.pass ? "PASS" : "FAIL")
            << '\n'
            << o.detail.str() << std::flush;
  if (!o.pass) ++failures;
}

std::string counts_text(const std::map<std::size_t, std::size_t>& counts) {
  std::string out;
  for (const auto& [v, c] : counts) {
    out += (out.empty() ? "" : " ") + std::to_string(v) + ":" + std::to_string(c);
  }
  return "{" + out + "}";
}

/// Closed walks of the given length without immediate backtracking across
/// the closing point, deduplicated up to rotation and reversal.
std::set<Loop> closed_walks(const Graph& g, std::size_t length) {
  std::set<Loop> out;
  Loop walk;
  std::function<void()> extend = [&]() {
    if (walk.size() == length) {
      if (g.adjacent(walk.back(), walk.front())) out.insert(canonical_loop(walk));
      return;
    }
    g.neighbors(walk.back()).for_each([&](Vertex w) {
      walk.push_back(w);
      extend();
      walk.pop_back();
    });
  };
  for (Vertex x = 0; x < g.order(); ++x) {
    walk = {x};
    extend();
  }
  return out;
}

}  // namespace

int main() {
  std::cout << "acceptance run\n";

  // 1. Census.
  auto start = Clock::now();
  const CensusResult census = enumerate_2graphs(positive_census_spec());
  const double census_seconds = seconds_since(start);
  const std::vector<Graph>& graphs = census.graphs;
  {
    Outcome o;
    const std::map<std::size_t, std::size_t> expected{{6, 1}, {7, 1}, {8, 1}, {9, 1}, {10, 1}, {12, 1}};
    std::set<CanonicalForm> distinct;
    for (const Graph& g : graphs) distinct.insert(canonical_form(g));
    o.detail << "    " << graphs.size() << " graphs, per-v " << counts_text(census.per_v_counts)
             << ", " << census.nodes_explored << " nodes, " << census_seconds << " s\n";
    o.require(graphs.size() == 6, "exactly six graphs");
    o.require(distinct.size() == graphs.size(), "pairwise non-isomorphic");
    o.require(census.per_v_counts == expected, "vertex counts {6,7,8,9,10,12}");
    o.require(!census.per_v_counts.count(11), "none at v=11");
    o.require(census.rejected == 0, "search and re-check agree");
    o.require(census_seconds < kCensusSeconds, "under 60 s");
    report(1, "six-graph census", o);
  }

  // 2. Sphere theorem instance-wise.
  {
    Outcome o;
    for (const Graph& g : graphs) {
      const auto cert = sphere_certificate(g, 2);
      const std::string v = "v=" + std::to_string(g.order());
      o.require(is_sphere(g, 2), v + " is a 2-sphere");
      o.require(cert && replay_sphere(g, *cert, 2), v + " certificate replays");
      for (Vertex x = 0; x < g.order(); ++x) {
        o.require(is_contractible(puncture(g, x).graph),
                  v + " puncture at " + std::to_string(x) + " contractible");
      }
    }
    o.detail << "    " << graphs.size() << " certificates replayed, every puncture checked\n";
    report(2, "sphere theorem per instance", o);
  }

  // 3. Gauss-Bonnet and the counting identities.
  {
    Outcome o;
    for (const Graph& g : graphs) {
      const CurvatureReport r = curvature_report(g);
      const long v = static_cast<long>(g.order());
      const std::string tag = "v=" + std::to_string(v);
      o.require(r.vertex_sum == Rational(2), tag + " sum K(x) = 2");
      o.require(static_cast<long>(r.f_vector.edges()) == 3 * (v - 2), tag + " e = 3(v-2)");
      o.require(static_cast<long>(r.f_vector.triangles()) == 2 * (v - 2), tag + " f = 2(v-2)");
      o.detail << "    " << tag << ": sum K = " << to_string(r.vertex_sum) << ", f-vector ("
               << r.f_vector.vertices() << ", " << r.f_vector.edges() << ", "
               << r.f_vector.triangles() << ")\n";
    }
    report(3, "Gauss-Bonnet audit", o);
  }

  // 4. Diameter bound.
  {
    Outcome o;
    o.detail << "    diameters:";
    for (const Graph& g : graphs) {
      const auto d = diameter(g);
      o.detail << " v" << g.order() << "=" << (d ? std::to_string(*d) : "-");
      const bool three = g.order() == 10 || g.order() == 12;
      o.require(d && *d <= 3, "v=" + std::to_string(g.order()) + " diameter <= 3");
      o.require(d && (*d == 3) == three,
                "v=" + std::to_string(g.order()) + " diameter 3 exactly at v=10, 12");
    }
    o.detail << '\n';
    report(4, "diameter corollary", o);
  }

  // 5. Loops contract; the essential torus loop does not.
  {
    Outcome o;
    start = Clock::now();
    std::size_t loops = 0;
    for (const Graph& g : graphs) {
      for (std::size_t len = 3; len <= kLoopMaxLength; ++len) {
        for (const Loop& loop : closed_walks(g, len)) {
          ++loops;
          const LoopContraction c = contract_loop(g, loop);
          o.require(c.verdict == LoopVerdict::contractible && replay_loop_contraction(g, loop, c.moves),
                    "loop of length " + std::to_string(len) + " in v=" + std::to_string(g.order()));
        }
      }
    }
    const LoopContraction torus = contract_loop(flat_torus(), flat_torus_essential_loop());
    o.require(torus.verdict == LoopVerdict::unknown, "torus loop reported unknown");
    o.detail << "    " << loops << " closed walks of length 3.." << kLoopMaxLength
             << " contracted; torus loop: "
             << (torus.verdict == LoopVerdict::unknown ? "unknown" : "contractible") << " after "
             << torus.states << " states (budget " << LoopOptions{}.state_budget << "), "
             << seconds_since(start) << " s\n";
    report(5, "simply connected at desk scale", o);
  }

  // 6. Geomag.
  {
    Outcome o;
    start = Clock::now();
    std::vector<std::pair<std::string, Graph>> hosts;
    for (const Graph& g : graphs) hosts.emplace_back("census v=" + std::to_string(g.order()), g);
    hosts.emplace_back("suspension of icosahedron", suspension(icosahedron()));
    for (const auto& [name, g] : hosts) {
      std::size_t arcs = 0, grown = 0, closed = 0, in_census = 0, verified = 0;
      std::map<std::size_t, std::size_t> outside;  // max degree of closed misfits
      for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = 0; y < g.order(); ++y) {
          if (x == y) continue;
          ++arcs;
          try {
            const Surface s = grow_surface(g, geodesic_arc(g, x, y));
            ++grown;
            verified += verify_surface(s) ? 1 : 0;
            if (s.closed) {
              ++closed;
              const Graph sg = surface_graph(s).graph;
              if (census_identity(sg)) {
                ++in_census;
              } else {
                const auto deg = sg.degrees();
                ++outside[*std::max_element(deg.begin(), deg.end())];
              }
            }
          } catch (const ConstructionError&) {
          }
        }
      }
      o.detail << "    " << name << ": " << grown << "/" << arcs << " grown, " << verified
               << " verified, " << closed << " closed, " << in_census << " closed in census";
      for (const auto& [deg, c] : outside) {
        o.detail << ", " << c << " closed with max degree " << deg;
      }
      o.detail << '\n';
      o.require(grown == arcs, name + ": growth succeeds on every arc");
      o.require(verified == grown, name + ": every surface passes the link checks");
      o.require(in_census == closed, name + ": every closed surface is a census graph");
    }
    const double t = seconds_since(start);
    o.detail << "    " << t << " s\n";
    o.require(t < kGeomagSeconds, "under 120 s");
    report(6, "geomag constructive check", o);
  }

  // 7. Negative curvature search and positive higher-dimensional examples.
  {
    Outcome o;
    start = Clock::now();
    CensusSpec spec = negative_census_spec(2);
    spec.progress = [&](const CensusProgress& p) {
      o.detail << "    progress: v=" << p.v << " nodes=" << p.nodes << " found=" << p.found
               << (p.finished ? " done" : "") << '\n';
    };
    const CensusResult negative = enumerate_2graphs(spec);
    const double t = seconds_since(start);
    o.detail << "    genus 2: " << negative.graphs.size() << " graphs, " << negative.nodes_explored
             << " nodes, " << t << " s\n";
    o.require(negative.graphs.empty(), "no negatively curved genus-2 graph");
    o.require(t < kNegativeSeconds, "under 1 h");
    const std::vector<std::tuple<std::string, Graph, int>> examples{
        {"cross-polytope(3)", cross_polytope(3), 3},
        {"cross-polytope(4)", cross_polytope(4), 4},
        {"suspension of icosahedron", suspension(icosahedron()), 3}};
    for (const auto& [name, g, d] : examples) {
      const auto dim = is_dgraph(g);
      o.require(dim == d, name + " is a " + std::to_string(d) + "-graph");
      if (dim != d) continue;
      const CurvatureSign sign = curvature_sign(g);
      o.require(sign.link_positive, name + " has positive curvature");
      o.detail << "    " << name << ": " << d << "-graph, clique links {";
      for (std::size_t i = 0; i < sign.link_lengths.size(); ++i) {
        o.detail << (i ? "," : "") << sign.link_lengths[i];
      }
      o.detail << "}, embedded wheel rims {";
      for (std::size_t i = 0; i < sign.wheel_rims.size(); ++i) {
        o.detail << (i ? "," : "") << sign.wheel_rims[i];
      }
      o.detail << "}\n";
    }
    report(7, "negative-curvature search", o);
  }

  // 8. Ricci examples.
  {
    Outcome o;
    const Graph pentakis = pentakis_dodecahedron();
    std::size_t flat_edges = 0;
    for (const Edge& e : pentakis.edges()) {
      if (ricci_curvature(pentakis, e) == Rational(0)) ++flat_edges;
    }
    o.require(flat_edges >= 1, "pentakis dodecahedron has an edge with K(e) = 0");
    const Graph refined = refined_icosahedron();
    bool all_positive = true;
    for (const Edge& e : refined.edges()) {
      all_positive = all_positive && ricci_curvature(refined, e) > Rational(0);
    }
    std::size_t flat_vertices = 0;
    for (Vertex x = 0; x < refined.order(); ++x) {
      if (vertex_curvature(refined, x) == Rational(0)) ++flat_vertices;
    }
    o.require(all_positive, "refined icosahedron has K(e) > 0 everywhere");
    o.require(flat_vertices == 2, "refined icosahedron has exactly two flat vertices");
    o.detail << "    pentakis: " << flat_edges << " edges with K(e)=0; refined icosahedron: "
             << (all_positive ? "all" : "not all") << " K(e) > 0, " << flat_vertices
             << " vertices with K(x)=0\n";
    report(8, "Ricci examples", o);
  }

  // 9. Oracle equivalence.
  {
    Outcome o;
    start = Clock::now();
    std::vector<CensusSpec> specs;
    CensusSpec positive = positive_census_spec();
    positive.max_v = kOracleMaxV;
    specs.push_back(positive);
    CensusSpec wide;
    wide.min_v = 6;
    wide.max_v = kOracleMaxV;
    wide.allowed_degrees = {4, 5, 6};
    specs.push_back(wide);
    for (const CensusSpec& spec : specs) {
      const CensusResult search = enumerate_2graphs(spec);
      const CensusResult oracle = census_oracle(spec);
      std::vector<CanonicalForm> a;
      std::vector<CanonicalForm> b;
      for (const Graph& g : search.graphs) a.push_back(canonical_form(g));
      for (const Graph& g : oracle.graphs) b.push_back(canonical_form(g));
      std::string degrees;
      for (std::size_t d : spec.allowed_degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
      o.detail << "    degrees {" << degrees << "}, v <= " << kOracleMaxV << ": search "
               << counts_text(search.per_v_counts) << ", oracle " << counts_text(oracle.per_v_counts)
               << " from " << oracle.candidates << " connected candidates\n";
      o.require(a == b, "search equals oracle for degrees {" + degrees + "}");
    }
    const double t = seconds_since(start);
    o.detail << "    " << t << " s\n";
    o.require(t < kOracleSeconds, "under 10 min");
    report(9, "oracle equivalence", o);
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << '\n';
  return failures == 0 ? 0 : 1;
}
