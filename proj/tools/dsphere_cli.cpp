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

// Command-line front end: check, census, geomag, refine, named, report.
//
// Exit codes: 0 success, 1 usage or parse error, 2 precondition violated,
// 3 a constructive procedure failed, 4 internal error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dsphere/census.h"
#include "dsphere/curvature.h"
#include "dsphere/errors.h"
#include "dsphere/geomag.h"
#include "dsphere/graph_io.h"
#include "dsphere/named_graphs.h"
#include "dsphere/serialize.h"
#include "dsphere/topology.h"

namespace {

using namespace dsphere;
using nlohmann::json;

constexpr int kUsage = 1;
constexpr int kPrecondition = 2;
constexpr int kConstruction = 3;
constexpr int kInternal = 4;

struct Input {
  std::string source;
  std::string named;
  std::string graph6;

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", source, "Graph file (graph6 or JSON), '-' for stdin, or a named id");
    cmd->add_option("--named", named, "Named graph id (see 'dsphere named')");
    cmd->add_option("--graph6", graph6, "Graph given inline in graph6");
  }

  std::pair<Graph, std::string> load() const {
    const int given = !source.empty() + !named.empty() + !graph6.empty();
    if (given != 1) throw InputError("give exactly one of INPUT, --named, --graph6");
    if (!named.empty()) return {named_graph(named), named};
    if (!graph6.empty()) return {parse_graph6(graph6), graph6};
    if (source == "-") {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      return {parse_graph(buffer.str()), "stdin"};
    }
    if (std::filesystem::exists(source)) return {read_graph_file(source), source};
    return {named_graph(source), source};
  }
};

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw InputError(std::string("bad ") + what + " list: " + text);
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what + " list");
  return out;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t v : values) out += (out.empty() ? "" : ", ") + std::to_string(v);
  return out;
}

void row(const std::string& key, const std::string& value) {
  std::cout << key << std::string(key.size() < 14 ? 14 - key.size() : 1, ' ') << value << '\n';
}

std::string fvector_text(const FVector& f) {
  return "(" + join(f.counts) + ")";
}

/// "positive curvature", "curvature 0" and so on, for d-graphs with d >= 2.
std::string curvature_phrase(const Graph& g, std::optional<int> d) {
  if (!d || *d < 2) return "";
  const CurvatureSign sign = curvature_sign(g);
  if (sign.link_positive) return "positive curvature";
  if (sign.link_negative) return "negative curvature";
  if (*d == 2) {
    bool flat = true;
    for (Vertex x = 0; x < g.order(); ++x) flat = flat && g.degree(x) == 6;
    if (flat) return "curvature 0";
  }
  return "mixed curvature";
}

std::string summary(const Graph& g, const TopologyVerdict& v) {
  std::string out = describe(v);
  const std::string phrase = curvature_phrase(g, v.dgraph_dimension);
  if (!phrase.empty()) out += ", " + phrase;
  if (g.order() > 0) {
    const auto diam = diameter(g);
    out += diam ? ", diameter " + std::to_string(*diam) : ", disconnected";
  }
  out += ", χ=" + std::to_string(euler_characteristic(g));
  return out;
}

json check_json(const Graph& g, const TopologyVerdict& v) {
  json j{{"graph", graph_to_json(g)},
         {"graph6", to_graph6(g)},
         {"summary", summary(g, v)},
         {"verdict", to_json(v)},
         {"curvature", to_json(curvature_report(g))}};
  if (v.certificate) j["certificate_replays"] = replay_sphere(g, *v.certificate, v.dimension);
  if (v.dgraph_dimension) j["sign"] = to_json(curvature_sign(g));
  const auto diam = diameter(g);
  j["diameter"] = diam ? json(*diam) : json(nullptr);
  return j;
}

void check_table(const std::string& name, const Graph& g, const TopologyVerdict& v) {
  row("graph", name + " (n=" + std::to_string(g.order()) + ", m=" +
                   std::to_string(g.edge_count()) + ")");
  row("summary", summary(g, v));
  const CurvatureReport report = curvature_report(g);
  row("f-vector", fvector_text(report.f_vector));
  if (v.certificate) {
    const SphereCertificate& c = *v.certificate;
    std::string text = c.apex ? "apex " + std::to_string(*c.apex) + ", collapse " +
                                    std::to_string(c.collapse.steps.size()) + " steps, "
                              : "";
    text += replay_sphere(g, c, v.dimension) ? "replay ok" : "REPLAY FAILED";
    row("certificate", text);
  }
  if (v.dgraph_dimension && *v.dgraph_dimension == 2) {
    row("gauss-bonnet", "sum K(x) = " + to_string(report.vertex_sum) +
                            (report.gauss_bonnet_ok ? " = χ" : " != χ"));
    row("dehn-somm.", std::string("2e = 3f ") + (report.dehn_sommerville_ok ? "holds" : "fails"));
  }
  if (!report.edge_curvatures.empty()) {
    Rational lo = report.edge_curvatures.front().second;
    Rational hi = lo;
    for (const auto& [e, k] : report.edge_curvatures) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    row("ricci", "K(e) in [" + to_string(lo) + ", " + to_string(hi) + "]");
  }
  if (v.dgraph_dimension && *v.dgraph_dimension >= 2) {
    const CurvatureSign sign = curvature_sign(g);
    row("links", "clique link lengths {" + join(sign.link_lengths) + "}, wheel rims {" +
                     join(sign.wheel_rims) + "}");
  }
}

int cmd_check(const Input& input, bool as_json) {
  const auto [g, name] = input.load();
  const TopologyVerdict v = classify_topology(g);
  if (as_json) {
    std::cout << check_json(g, v).dump(2) << '\n';
  } else {
    check_table(name, g, v);
  }
  return 0;
}

struct CensusFlags {
  bool positive = false;
  bool negative = false;
  int genus = 2;
  std::string degrees;
  std::optional<std::size_t> min_v;
  std::optional<std::size_t> max_v;
  std::optional<long> chi;
  unsigned threads = 1;
  bool classify = false;
  bool oracle = false;
  bool progress = false;
};

int cmd_census(const CensusFlags& f, bool as_json) {
  if (f.positive && f.negative) throw InputError("choose one of --positive, --negative");
  CensusSpec spec;
  if (f.positive) {
    spec = positive_census_spec();
  } else if (f.negative) {
    spec = negative_census_spec(f.genus);
  } else {
    spec.curvature = CurvatureFilter::any;
  }
  if (!f.degrees.empty()) spec.allowed_degrees = parse_list(f.degrees, "degree");
  if (f.min_v) spec.min_v = *f.min_v;
  if (f.max_v) spec.max_v = *f.max_v;
  if (f.chi) spec.target_chi = *f.chi;
  spec.threads = f.threads;
  if (f.progress || f.negative) {
    spec.progress = [](const CensusProgress& p) {
      std::cerr << "census: v=" << p.v << " nodes=" << p.nodes << " found=" << p.found
                << (p.finished ? " done" : "") << '\n';
    };
  }
  const CensusResult result = enumerate_2graphs(spec);
  for (const std::string& reason : result.skipped) std::cerr << "census: skipped " << reason << '\n';
  std::cerr << "census: " << result.graphs.size() << " graphs, " << result.nodes_explored
            << " nodes, " << result.rejected << " rejected by the re-check\n";

  int status = 0;
  json oracle_json;
  if (f.oracle) {
    CensusSpec small = spec;
    small.max_v = std::min<std::size_t>(spec.max_v, 8);
    small.progress = nullptr;
    if (small.min_v <= small.max_v) {
      const CensusResult oracle = census_oracle(small);
      std::vector<CanonicalForm> a;
      std::vector<CanonicalForm> b;
      for (const Graph& g : result.graphs) {
        if (g.order() <= small.max_v) a.push_back(canonical_form(g));
      }
      for (const Graph& g : oracle.graphs) b.push_back(canonical_form(g));
      const bool match = a == b;
      std::cerr << "oracle: v <= " << small.max_v << ": " << oracle.graphs.size() << " graphs, "
                << (match ? "match" : "MISMATCH") << '\n';
      oracle_json = {{"max_v", small.max_v}, {"graphs", oracle.graphs.size()}, {"match", match}};
      if (!match) status = kConstruction;
    }
  }

  if (as_json) {
    json j = to_json(result);
    if (!oracle_json.is_null()) j["oracle"] = oracle_json;
    if (f.classify) {
      json dossiers = json::array();
      for (const CensusDossier& d : classify_census(result)) dossiers.push_back(to_json(d));
      j["dossiers"] = dossiers;
    }
    std::cout << j.dump(2) << '\n';
    return status;
  }
  for (const Graph& g : result.graphs) std::cout << to_graph6(g) << '\n';
  if (f.classify) {
    std::cout << "#  v  f-vector        degrees          diam  sphere  punctures  two-ball  loops\n";
    for (const CensusDossier& d : classify_census(result)) {
      std::string degrees;
      for (const auto& [deg, c] : d.degree_histogram) {
        degrees += (degrees.empty() ? "" : ",") + std::to_string(deg) + "x" + std::to_string(c);
      }
      char line[200];
      std::snprintf(line, sizeof line, "# %2zu  %-14s  %-15s  %4s  %-6s  %-9s  %-8s  %zu/%zu\n",
                    d.v, fvector_text(d.f_vector).c_str(), degrees.c_str(),
                    d.diameter ? std::to_string(*d.diameter).c_str() : "-",
                    d.certificate_replays ? "yes" : "no",
                    d.every_puncture_contractible ? "contract" : "no",
                    d.two_ball_decomposition_found ? "yes" : "no", d.loops_contracted,
                    d.loops_checked);
      std::cout << line;
    }
  }
  return status;
}

void surface_table(const Surface& s) {
  row("wheels", std::to_string(s.wheels.size()));
  for (const WheelEmbedding& w : s.wheels) {
    row("  center " + std::to_string(w.center), "rim " + join(w.rim));
  }
  row("vertices", join(s.vertex_set.members()));
  row("f-vector", "(" + std::to_string(s.vertex_set.size()) + ", " +
                      std::to_string(s.edges.size()) + ", " + std::to_string(s.triangles.size()) +
                      ")");
  row("closed", s.closed ? "yes" : "no");
  row("embedded", s.embedded ? "yes" : "no (immersed)");
  for (const auto& cycle : s.boundary) row("boundary", join(cycle));
  if (s.closed) {
    const Graph g = surface_graph(s).graph;
    const auto id = census_identity(g);
    row("census", id ? "graph " + std::to_string(*id) + " of 6 (v=" +
                           std::to_string(g.order()) + ")"
                     : "not a positive-curvature 2-graph");
  }
}

struct GeomagFlags {
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::string loop;
  bool close = false;
  bool dot = false;
};

int cmd_geomag(const Input& input, const GeomagFlags& f, bool as_json) {
  const auto [g, name] = input.load();
  const bool arc_mode = f.from || f.to;
  if (arc_mode == !f.loop.empty()) throw InputError("give either --from/--to or --loop");
  if (arc_mode && !(f.from && f.to)) throw InputError("--from and --to go together");
  GrowOptions options;
  options.close = f.close;

  auto emit = [&](const Surface& s) {
    if (f.dot) {
      std::cout << surface_to_dot(s);
    } else if (as_json) {
      std::cout << to_json(s).dump(2) << '\n';
    } else {
      surface_table(s);
    }
  };
  try {
    Surface s;
    if (arc_mode) {
      const GeodesicArc arc = geodesic_arc(g, *f.from, *f.to);
      if (!as_json && !f.dot) row("arc", join(arc.vertices));
      s = grow_surface(g, arc, options);
    } else {
      const Loop loop = parse_list(f.loop, "vertex");
      s = loop_to_sphere(g, loop, options);
    }
    emit(s);
    return 0;
  } catch (const GrowthError& e) {
    std::cerr << "geomag: " << e.what() << "; partial surface follows\n";
    emit(e.partial());
    return kConstruction;
  }
}

int cmd_refine(const Input& input, const std::string& edge, bool as_json) {
  const auto [g, name] = input.load();
  const auto ends = parse_list(edge, "edge");
  if (ends.size() != 2) throw InputError("--edge takes two vertices a,b");
  for (std::size_t v : ends) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  const Graph refined = edge_refine(g, Edge(ends[0], ends[1]));
  if (as_json) {
    std::cout << json{{"graph", graph_to_json(refined)},
                      {"graph6", to_graph6(refined)},
                      {"new_vertex", refined.order() - 1},
                      {"curvature", to_json(curvature_report(refined))}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << to_graph6(refined) << '\n';
  }
  return 0;
}

int cmd_named(const std::string& id, bool as_json, bool dot) {
  if (id.empty()) {
    for (const std::string& name : named_graph_ids()) std::cout << name << '\n';
    return 0;
  }
  const Graph g = named_graph(id);
  if (dot) {
    DotStyle style;
    style.name = "named";
    std::cout << to_dot(g, style);
  } else if (as_json) {
    std::cout << graph_to_json(g).dump() << '\n';
  } else {
    std::cout << to_graph6(g) << '\n';
  }
  return 0;
}

int cmd_report(const Input& input, bool as_json) {
  const auto [g, name] = input.load();
  const TopologyVerdict v = classify_topology(g);
  std::optional<DiameterReport> diam;
  std::optional<BallPair> balls;
  if (v.dgraph_dimension && *v.dgraph_dimension >= 2 && diameter(g)) {
    diam = diameter_bound_check(g);
  }
  if (v.dgraph_dimension && *v.dgraph_dimension >= 1) {
    balls = two_ball_decomposition(g, *v.dgraph_dimension);
  }
  if (as_json) {
    json j = check_json(g, v);
    if (diam) j["diameter_bound"] = to_json(*diam);
    if (v.dgraph_dimension && *v.dgraph_dimension >= 1) {
      j["two_ball_decomposition"] =
          balls ? json{{"center", balls->center},
                       {"first", balls->first.members()},
                       {"second", balls->second.members()}}
                : json(nullptr);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  check_table(name, g, v);
  if (diam) {
    std::string text = "pair " + std::to_string(diam->x) + "-" + std::to_string(diam->y) +
                       ", arc " + join(diam->arc.vertices);
    if (diam->surface) {
      text += diam->surface_identity
                  ? ", surface is census graph " + std::to_string(*diam->surface_identity)
                  : ", surface outside the census";
      if (diam->surface_diameter) text += " of diameter " + std::to_string(*diam->surface_diameter);
    } else {
      text += ", growth failed: " + diam->growth_error;
    }
    row("diameter", text);
  }
  if (v.dgraph_dimension && *v.dgraph_dimension >= 1) {
    row("two balls", balls ? "center " + std::to_string(balls->center) + ": {" +
                                 join(balls->first.members()) + "} and {" +
                                 join(balls->second.members()) + "}"
                           : "none found");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete spheres: recognition, curvature, census and geodesic surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON on standard output");

  Input input;
  auto* check = app.add_subcommand("check", "Classify a graph and audit its curvature");
  input.add_to(check);
  check->add_flag("--json", as_json, "JSON output");

  CensusFlags census_flags;
  auto* census = app.add_subcommand("census", "Enumerate connected 2-graphs");
  census->add_flag("--positive", census_flags.positive, "Positive curvature, degrees 4 and 5");
  census->add_flag("--negative", census_flags.negative, "Negative curvature of a given genus");
  census->add_option("--genus", census_flags.genus, "Genus for --negative")->capture_default_str();
  census->add_option("--degrees", census_flags.degrees, "Allowed degrees, e.g. 4,5,6");
  census->add_option("--min-v", census_flags.min_v, "Smallest vertex count");
  census->add_option("--max-v", census_flags.max_v, "Largest vertex count");
  census->add_option("--chi", census_flags.chi, "Required Euler characteristic");
  census->add_option("--threads", census_flags.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  census->add_flag("--classify", census_flags.classify, "Append a dossier per graph");
  census->add_flag("--oracle", census_flags.oracle, "Cross-check v <= 8 by brute force");
  census->add_flag("--progress", census_flags.progress, "Progress on standard error");
  census->add_flag("--json", as_json, "JSON output");

  Input geomag_input;
  GeomagFlags geomag_flags;
  auto* geomag = app.add_subcommand("geomag", "Grow a surface around a geodesic arc or loop");
  geomag_input.add_to(geomag);
  geomag->add_option("--from", geomag_flags.from, "Arc start");
  geomag->add_option("--to", geomag_flags.to, "Arc end");
  geomag->add_option("--loop", geomag_flags.loop, "Geodesic loop v1,v2,...");
  geomag->add_flag("--close", geomag_flags.close, "Grow arc surfaces until closed");
  geomag->add_flag("--dot", geomag_flags.dot, "DOT output with the surface highlighted");
  geomag->add_flag("--json", as_json, "JSON output");

  Input refine_input;
  std::string edge;
  auto* refine = app.add_subcommand("refine", "Refine an edge with two common neighbors");
  refine_input.add_to(refine);
  refine->add_option("--edge", edge, "Edge a,b")->required();
  refine->add_flag("--json", as_json, "JSON output");

  std::string named_id;
  bool named_dot = false;
  auto* named = app.add_subcommand("named", "List named graphs or print one");
  named->add_option("id", named_id, "Named graph id");
  named->add_flag("--dot", named_dot, "DOT output");
  named->add_flag("--json", as_json, "JSON output");

  Input report_input;
  auto* report = app.add_subcommand("report", "Full report: check plus diameter and two balls");
  report_input.add_to(report);
  report->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(input, as_json);
    if (census->parsed()) return cmd_census(census_flags, as_json);
    if (geomag->parsed()) return cmd_geomag(geomag_input, geomag_flags, as_json);
    if (refine->parsed()) return cmd_refine(refine_input, edge, as_json);
    if (named->parsed()) return cmd_named(named_id, as_json, named_dot);
    if (report->parsed()) return cmd_report(report_input, as_json);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kConstruction;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
