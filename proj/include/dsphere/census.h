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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsphere/canonical.h"
#include "dsphere/curvature.h"
#include "dsphere/graph.h"
#include "dsphere/loops.h"
#include "dsphere/topology.h"

namespace dsphere {

enum class CurvatureFilter { any, positive, negative };

struct CensusProgress {
  std::size_t v = 0;
  std::uint64_t nodes = 0;
  std::size_t found = 0;
  bool finished = false;
};

struct CensusSpec {
  std::size_t min_v = 6;
  std::size_t max_v = 12;
  /// Allowed vertex degrees. With require_2graph every entry must be >= 4.
  std::vector<std::size_t> allowed_degrees{4, 5};
  bool require_2graph = true;
  std::optional<long> target_chi;
  CurvatureFilter curvature = CurvatureFilter::any;
  unsigned threads = 1;
  /// Called from worker threads, serialized by the census.
  std::function<void(const CensusProgress&)> progress;
  /// Nodes between progress reports.
  std::uint64_t progress_interval = 1'000'000;
};

/// Throws InputError on an invalid spec (empty ranges, degrees below 4 with
/// require_2graph, v above 64).
void validate(const CensusSpec& spec);

struct DegreeMultiset {
  long chi = 0;
  /// (degree, count) pairs with count > 0, by increasing degree.
  std::vector<std::pair<std::size_t, std::size_t>> counts;
};

/// Integer solutions of sum c_d = v and sum d c_d = 6 (v - chi) over the
/// allowed degrees. Without a target, every chi <= 2 is tried (a closed
/// connected surface never exceeds 2).
std::vector<DegreeMultiset> degree_sequence_preprocessing(const CensusSpec& spec, std::size_t v);

struct CensusResult {
  /// Canonical representatives ordered by vertex count, then canonical form.
  std::vector<Graph> graphs;
  std::map<std::size_t, std::size_t> per_v_counts;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};
  /// Distinct leaves of the search before the independent re-check.
  std::size_t candidates = 0;
  /// Leaves rejected by the re-check. Nonzero would mean the search pruning
  /// and the predicates disagree.
  std::size_t rejected = 0;
  /// Vertex counts skipped by the degree preprocessing, with reasons.
  std::vector<std::string> skipped;
};

/// Exhaustive isomorphism-free enumeration of connected 2-graphs whose vertex
/// links are induced cycles with lengths in the allowed degrees.
///
/// Vertices are closed one at a time: vertex 0 gets the smallest degree and
/// the link 1..k, then the smallest open vertex with a neighbor has its
/// partial link (a union of induced paths) completed to an induced cycle in
/// every admissible way. Fresh vertices are interchangeable, so only the
/// smallest unused one is ever offered. Complete graphs are deduplicated by
/// canonical form and re-verified with the topology and curvature modules.
CensusResult enumerate_2graphs(const CensusSpec& spec);

/// Brute force for small v: every labeled graph with all degrees allowed,
/// filtered by is_dgraph == 2, connectivity and the curvature filter, then
/// deduplicated. Shares nothing with the search beyond the predicates.
CensusResult census_oracle(const CensusSpec& spec);

struct CensusDossier {
  Graph graph;
  std::size_t v = 0;
  FVector f_vector;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::optional<std::size_t> diameter;
  CurvatureReport curvature;
  std::optional<SphereCertificate> certificate;
  bool certificate_replays = false;
  bool every_puncture_contractible = false;
  bool two_ball_decomposition_found = false;
  /// contract_loop over every chordless cycle of length >= 4.
  std::size_t loops_checked = 0;
  std::size_t loops_contracted = 0;
};

std::vector<CensusDossier> classify_census(const CensusResult& result);

/// The positive-curvature census: degrees {4,5}, v in [6,12].
CensusSpec positive_census_spec();
/// Genus-g negative search: chi = 2 - 2g, degrees >= 7, v up to 6|chi|.
CensusSpec negative_census_spec(int genus);

}  // namespace dsphere
