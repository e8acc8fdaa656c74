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

#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsphere/graph.h"

namespace dsphere {

struct ContractionStep;

/// Witness that a vertex set W is contractible: remove steps[i].vertex in
/// order, each time from the current set, until only `last` remains. Every
/// removed vertex carries a witness that its unit sphere in the current set
/// is itself contractible. All vertices are host-graph indices.
struct ContractionWitness {
  std::vector<ContractionStep> steps;
  Vertex last = 0;
};

struct ContractionStep {
  Vertex vertex = 0;
  ContractionWitness link;
};

/// Witness that a vertex set W is a d-sphere. For d = -1 the set is empty
/// and nothing else is stored. Otherwise `links[i]` certifies that the unit
/// sphere of the i-th smallest member of W is a (d-1)-sphere, and `collapse`
/// certifies that W minus `apex` is contractible.
struct SphereCertificate {
  int dimension = -1;
  std::optional<Vertex> apex;
  ContractionWitness collapse;
  std::vector<SphereCertificate> links;
};

/// Thread-safe memo of verdicts keyed by isomorphism class. Shared by every
/// recognizer that is handed a pointer to it.
class VerdictCache {
 public:
  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool verdict);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> map_;
};

/// Process-wide cache used by the free functions below.
VerdictCache& shared_verdict_cache();

/// Recognition over vertex subsets of a fixed host graph. Results are memoized
/// per subset and, when a cache is supplied, per isomorphism class. Not
/// thread-safe itself; use one recognizer per thread and share the cache.
class Recognizer {
 public:
  explicit Recognizer(const Graph& host, VerdictCache* cache = &shared_verdict_cache());

  const Graph& host() const { return host_; }

  bool contractible(const VertexSet& w);
  bool sphere(const VertexSet& w, int d);
  /// Every unit sphere within w is a (d-1)-sphere.
  bool dgraph(const VertexSet& w, int d);

  /// Witnesses; throw std::logic_error when the verdict is negative.
  ContractionWitness contraction_witness(const VertexSet& w);
  SphereCertificate sphere_certificate(const VertexSet& w, int d);

  /// Unit sphere of x within w.
  VertexSet link(const VertexSet& w, Vertex x) const;

 private:
  struct SetIntHash {
    std::size_t operator()(const std::pair<VertexSet, int>& k) const {
      return k.first.hash() * 31 + static_cast<std::size_t>(k.second + 7);
    }
  };

  std::optional<bool> cached(char kind, int d, const VertexSet& w, std::string& key) const;
  std::vector<Vertex> by_degree(const VertexSet& w) const;
  bool decide_contractible(const VertexSet& w);
  bool decide_sphere(const VertexSet& w, int d);

  const Graph& host_;
  VerdictCache* cache_;
  std::unordered_map<VertexSet, bool, VertexSetHash> contractible_memo_;
  std::unordered_map<std::pair<VertexSet, int>, bool, SetIntHash> sphere_memo_;
};

/// 1-point graph yes; empty graph no.
bool is_contractible(const Graph& g, VerdictCache* cache = &shared_verdict_cache());
std::optional<ContractionWitness> contraction_witness(
    const Graph& g, VerdictCache* cache = &shared_verdict_cache());

bool is_sphere(const Graph& g, int d, VerdictCache* cache = &shared_verdict_cache());
std::optional<SphereCertificate> sphere_certificate(
    const Graph& g, int d, VerdictCache* cache = &shared_verdict_cache());

/// The d with every unit sphere a (d-1)-sphere, if any. The empty graph is
/// reported as dimension -1.
std::optional<int> is_dgraph(const Graph& g, VerdictCache* cache = &shared_verdict_cache());

/// Boundary of a would-be d-ball: the vertices whose unit sphere is not a
/// (d-1)-sphere.
VertexSet ball_boundary(const Graph& g, int d, VerdictCache* cache = &shared_verdict_cache());
/// g is a d-ball iff coning a new vertex over its boundary gives a d-sphere.
bool is_ball(const Graph& g, int d, VerdictCache* cache = &shared_verdict_cache());

struct BallPair {
  Vertex center = 0;
  VertexSet first;
  VertexSet second;
};

/// Looks for a center x such that B2(x) and the closed neighborhood of its
/// complement are both d-balls. When B2(x) is everything, the first ball is
/// G - z for the farthest vertex z from x and the second is B1(z). Throws
/// PreconditionError if g is not a d-graph.
std::optional<BallPair> two_ball_decomposition(
    const Graph& g, int d, VerdictCache* cache = &shared_verdict_cache());

enum class VerdictKind { sphere, dgraph, ball, contractible, none };

struct TopologyVerdict {
  VerdictKind kind = VerdictKind::none;
  /// Dimension of the sphere, d-graph or ball; -1 otherwise.
  int dimension = -1;
  std::optional<int> dgraph_dimension;
  bool contractible = false;
  std::optional<SphereCertificate> certificate;
};

TopologyVerdict classify_topology(const Graph& g, VerdictCache* cache = &shared_verdict_cache());
std::string describe(const TopologyVerdict& v);

/// Mechanical checks that share no code with the recognizer.
bool replay_contraction(const Graph& g, const VertexSet& w, const ContractionWitness& witness);
bool replay_sphere(const Graph& g, const VertexSet& w, const SphereCertificate& cert, int d);
bool replay_sphere(const Graph& g, const SphereCertificate& cert, int d);

}  // namespace dsphere
