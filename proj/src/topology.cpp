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

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "dsphere/canonical.h"
#include "dsphere/errors.h"

namespace dsphere {

namespace {

// Below this size the canonical form costs more than recomputing.
constexpr std::size_t kCacheMinOrder = 5;

VertexSet without(VertexSet w, Vertex x) {
  w.erase(x);
  return w;
}

long sphere_euler_characteristic(int d) { return d % 2 == 0 ? 2 : 0; }

std::size_t clique_number(const Graph& g) { return f_vector(g).counts.size(); }

}  // namespace

// ---------------------------------------------------------------------------
// VerdictCache

std::optional<bool> VerdictCache::lookup(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::store(const std::string& key, bool verdict) {
  std::unique_lock lock(mutex_);
  map_.emplace(key, verdict);
}

std::size_t VerdictCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void VerdictCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

VerdictCache& shared_verdict_cache() {
  static VerdictCache cache;
  return cache;
}

// ---------------------------------------------------------------------------
// Recognizer

Recognizer::Recognizer(const Graph& host, VerdictCache* cache) : host_(host), cache_(cache) {}

VertexSet Recognizer::link(const VertexSet& w, Vertex x) const {
  return host_.neighbors(x) & w;
}

std::vector<Vertex> Recognizer::by_degree(const VertexSet& w) const {
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  w.for_each([&](Vertex x) { keyed.emplace_back(host_.neighbors(x).intersection_size(w), x); });
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> out;
  out.reserve(keyed.size());
  for (const auto& [deg, x] : keyed) out.push_back(x);
  return out;
}

std::optional<bool> Recognizer::cached(char kind, int d, const VertexSet& w,
                                       std::string& key) const {
  if (cache_ == nullptr || w.size() < kCacheMinOrder) return std::nullopt;
  const CanonicalForm form = canonical_form(induced(host_, w).graph);
  key.assign(1, kind);
  key += std::to_string(d);
  key += ':';
  key.append(form.bytes.begin(), form.bytes.end());
  return cache_->lookup(key);
}

bool Recognizer::contractible(const VertexSet& w) { return decide_contractible(w); }

bool Recognizer::decide_contractible(const VertexSet& w) {
  const std::size_t size = w.size();
  if (size == 0) return false;
  if (size == 1) return true;
  if (auto it = contractible_memo_.find(w); it != contractible_memo_.end()) return it->second;

  std::string key;
  std::optional<bool> verdict = cached('c', 0, w, key);
  if (!verdict) {
    bool result = false;
    if (is_connected(host_, w) && euler_characteristic(host_, w) == 1) {
      const std::vector<Vertex> order = by_degree(w);
      if (host_.neighbors(order.back()).intersection_size(w) == size - 1) {
        result = true;  // a cone
      } else {
        for (Vertex x : order) {
          if (decide_contractible(link(w, x)) && decide_contractible(without(w, x))) {
            result = true;
            break;
          }
        }
      }
    }
    if (!key.empty()) cache_->store(key, result);
    verdict = result;
  }
  contractible_memo_.emplace(w, *verdict);
  return *verdict;
}

bool Recognizer::sphere(const VertexSet& w, int d) { return decide_sphere(w, d); }

bool Recognizer::dgraph(const VertexSet& w, int d) {
  bool ok = true;
  w.for_each([&](Vertex x) { ok = ok && decide_sphere(link(w, x), d - 1); });
  return ok;
}

bool Recognizer::decide_sphere(const VertexSet& w, int d) {
  if (d < -1) return false;
  if (d == -1) return w.empty();
  const std::size_t size = w.size();
  if (size < 2 * static_cast<std::size_t>(d + 1)) return false;
  if (d == 0) {
    return size == 2 && !host_.adjacent(w.first(), w.next(w.first()));
  }
  auto memo_key = std::make_pair(w, d);
  if (auto it = sphere_memo_.find(memo_key); it != sphere_memo_.end()) return it->second;

  std::string key;
  std::optional<bool> verdict = cached('s', d, w, key);
  if (!verdict) {
    bool result = is_connected(host_, w) &&
                  euler_characteristic(host_, w) == sphere_euler_characteristic(d) &&
                  dgraph(w, d);
    if (result) {
      result = false;
      for (Vertex x : by_degree(w)) {
        if (decide_contractible(without(w, x))) {
          result = true;
          break;
        }
      }
    }
    if (!key.empty()) cache_->store(key, result);
    verdict = result;
  }
  sphere_memo_.emplace(std::move(memo_key), *verdict);
  return *verdict;
}

ContractionWitness Recognizer::contraction_witness(const VertexSet& w) {
  if (!decide_contractible(w)) throw std::logic_error("contraction_witness: not contractible");
  ContractionWitness out;
  VertexSet current = w;
  while (current.size() > 1) {
    bool advanced = false;
    for (Vertex x : by_degree(current)) {
      const VertexSet l = link(current, x);
      if (decide_contractible(l) && decide_contractible(without(current, x))) {
        out.steps.push_back({x, contraction_witness(l)});
        current.erase(x);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("contraction_witness: inconsistent verdicts");
  }
  out.last = current.first();
  return out;
}

SphereCertificate Recognizer::sphere_certificate(const VertexSet& w, int d) {
  if (!decide_sphere(w, d)) throw std::logic_error("sphere_certificate: not a sphere");
  SphereCertificate cert;
  cert.dimension = d;
  if (d == -1) return cert;
  w.for_each([&](Vertex x) { cert.links.push_back(sphere_certificate(link(w, x), d - 1)); });
  for (Vertex x : by_degree(w)) {
    const VertexSet rest = without(w, x);
    if (decide_contractible(rest)) {
      cert.apex = x;
      cert.collapse = contraction_witness(rest);
      return cert;
    }
  }
  throw std::logic_error("sphere_certificate: inconsistent verdicts");
}

// ---------------------------------------------------------------------------
// Whole-graph entry points

bool is_contractible(const Graph& g, VerdictCache* cache) {
  return Recognizer(g, cache).contractible(g.all_vertices());
}

std::optional<ContractionWitness> contraction_witness(const Graph& g, VerdictCache* cache) {
  Recognizer r(g, cache);
  if (!r.contractible(g.all_vertices())) return std::nullopt;
  return r.contraction_witness(g.all_vertices());
}

bool is_sphere(const Graph& g, int d, VerdictCache* cache) {
  return Recognizer(g, cache).sphere(g.all_vertices(), d);
}

std::optional<SphereCertificate> sphere_certificate(const Graph& g, int d, VerdictCache* cache) {
  Recognizer r(g, cache);
  if (!r.sphere(g.all_vertices(), d)) return std::nullopt;
  return r.sphere_certificate(g.all_vertices(), d);
}

std::optional<int> is_dgraph(const Graph& g, VerdictCache* cache) {
  if (g.empty()) return -1;
  const int d = static_cast<int>(clique_number(g)) - 1;
  if (Recognizer(g, cache).dgraph(g.all_vertices(), d)) return d;
  return std::nullopt;
}

VertexSet ball_boundary(const Graph& g, int d, VerdictCache* cache) {
  Recognizer r(g, cache);
  const VertexSet all = g.all_vertices();
  VertexSet boundary(g.order());
  all.for_each([&](Vertex x) {
    if (!r.sphere(r.link(all, x), d - 1)) boundary.insert(x);
  });
  return boundary;
}

bool is_ball(const Graph& g, int d, VerdictCache* cache) {
  if (d < 0) throw PreconditionError("is_ball: dimension must be >= 0");
  if (g.empty()) return false;
  Recognizer r(g, cache);
  const VertexSet boundary = ball_boundary(g, d, cache);
  if (!r.sphere(boundary, d - 1)) return false;
  bool links_ok = true;
  boundary.for_each([&](Vertex x) {
    links_ok = links_ok && is_ball(unit_sphere(g, x).graph, d - 1, cache);
  });
  if (!links_ok) return false;
  GraphBuilder cone(g);
  const Vertex apex = cone.add_vertex();
  boundary.for_each([&](Vertex x) { cone.add_edge(x, apex); });
  return is_sphere(cone.build(), d, cache);
}

std::optional<BallPair> two_ball_decomposition(const Graph& g, int d, VerdictCache* cache) {
  if (is_dgraph(g, cache) != d) {
    throw PreconditionError("two_ball_decomposition: not a " + std::to_string(d) + "-graph");
  }
  const VertexSet all = g.all_vertices();
  for (Vertex x = 0; x < g.order(); ++x) {
    BallPair pair;
    pair.center = x;
    pair.first = ball(g, x, 2);
    if (pair.first == all) {
      const std::vector<int> dist = distances_from(g, x);
      const Vertex z = static_cast<Vertex>(
          std::max_element(dist.begin(), dist.end()) - dist.begin());
      pair.first.erase(z);
      pair.second = ball(g, z, 1);
    } else {
      const VertexSet rest = all - pair.first;
      pair.second = rest;
      rest.for_each([&](Vertex v) { pair.second |= g.neighbors(v); });
    }
    if (is_ball(induced(g, pair.first).graph, d, cache) &&
        is_ball(induced(g, pair.second).graph, d, cache)) {
      return pair;
    }
  }
  return std::nullopt;
}

TopologyVerdict classify_topology(const Graph& g, VerdictCache* cache) {
  TopologyVerdict v;
  v.dgraph_dimension = is_dgraph(g, cache);
  v.contractible = is_contractible(g, cache);
  if (v.dgraph_dimension) {
    v.dimension = *v.dgraph_dimension;
    v.certificate = sphere_certificate(g, v.dimension, cache);
    v.kind = v.certificate ? VerdictKind::sphere : VerdictKind::dgraph;
    return v;
  }
  const int d = static_cast<int>(clique_number(g)) - 1;
  if (is_ball(g, d, cache)) {
    v.kind = VerdictKind::ball;
    v.dimension = d;
  } else if (v.contractible) {
    v.kind = VerdictKind::contractible;
  }
  return v;
}

std::string describe(const TopologyVerdict& v) {
  const std::string d =
      v.dimension < 0 ? "(" + std::to_string(v.dimension) + ")" : std::to_string(v.dimension);
  switch (v.kind) {
    case VerdictKind::sphere:
      return d + "-sphere";
    case VerdictKind::dgraph:
      return d + "-graph, not a sphere";
    case VerdictKind::ball:
      return d + "-ball";
    case VerdictKind::contractible:
      return "contractible";
    case VerdictKind::none:
      break;
  }
  return "none of sphere, d-graph, ball, contractible";
}

// ---------------------------------------------------------------------------
// Replay

bool replay_contraction(const Graph& g, const VertexSet& w, const ContractionWitness& witness) {
  if (w.universe() != g.order()) return false;
  VertexSet current = w;
  for (const ContractionStep& step : witness.steps) {
    if (!current.contains(step.vertex)) return false;
    if (!replay_contraction(g, g.neighbors(step.vertex) & current, step.link)) return false;
    current.erase(step.vertex);
  }
  return current.size() == 1 && current.contains(witness.last);
}

bool replay_sphere(const Graph& g, const VertexSet& w, const SphereCertificate& cert, int d) {
  if (cert.dimension != d || w.universe() != g.order()) return false;
  if (d == -1) return w.empty();
  if (!cert.apex || !w.contains(*cert.apex)) return false;
  const std::vector<Vertex> members = w.members();
  if (cert.links.size() != members.size()) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!replay_sphere(g, g.neighbors(members[i]) & w, cert.links[i], d - 1)) return false;
  }
  VertexSet rest = w;
  rest.erase(*cert.apex);
  return replay_contraction(g, rest, cert.collapse);
}

bool replay_sphere(const Graph& g, const SphereCertificate& cert, int d) {
  return replay_sphere(g, g.all_vertices(), cert, d);
}

}  // namespace dsphere
