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

#include <algorithm>
#include <map>

#include "dsphere/census.h"

namespace dsphere {

namespace {

class EdgeBacktracker {
 public:
  EdgeBacktracker(std::size_t v, const CensusSpec& spec,
                  std::map<CanonicalForm, Graph>& found, CensusResult& result)
      : v_(v), spec_(spec), found_(found), result_(result), degree_(v, 0) {
    lo_ = *std::min_element(spec.allowed_degrees.begin(), spec.allowed_degrees.end());
    hi_ = *std::max_element(spec.allowed_degrees.begin(), spec.allowed_degrees.end());
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) pairs_.emplace_back(i, j);
    }
  }

  void run() { step(0); }

 private:
  bool allowed(std::size_t d) const {
    return std::find(spec_.allowed_degrees.begin(), spec_.allowed_degrees.end(), d) !=
           spec_.allowed_degrees.end();
  }

  // Pairs are visited row by row, so vertex i is final once its row ends.
  bool row_done(std::size_t k) const {
    return k + 1 == pairs_.size() || pairs_[k + 1].first != pairs_[k].first;
  }

  void step(std::size_t k) {
    ++result_.nodes_explored;
    if (k == pairs_.size()) {
      leaf();
      return;
    }
    const auto [a, b] = pairs_[k];
    // Remaining undecided pairs touching a, after this one.
    const std::size_t a_left = v_ - 1 - b;
    for (int take = 1; take >= 0; --take) {
      if (take) {
        if (degree_[a] >= hi_ || degree_[b] >= hi_) continue;
        ++degree_[a];
        ++degree_[b];
        edges_.emplace_back(a, b);
      }
      const bool ok = degree_[a] + a_left >= lo_ && (!row_done(k) || allowed(degree_[a]));
      if (ok) step(k + 1);
      if (take) {
        --degree_[a];
        --degree_[b];
        edges_.pop_back();
      }
    }
  }

  void leaf() {
    for (std::size_t d : degree_) {
      if (!allowed(d)) return;
    }
    Graph g = Graph::from_edges(v_, edges_);
    if (!is_connected(g)) return;
    ++result_.candidates;
    if (spec_.require_2graph && is_dgraph(g, nullptr) != 2) return;
    if (spec_.target_chi && euler_characteristic(g) != *spec_.target_chi) return;
    if (spec_.curvature != CurvatureFilter::any) {
      if (is_dgraph(g, nullptr) != 2) return;
      if (spec_.curvature == CurvatureFilter::positive && !positive_curvature(g)) return;
      if (spec_.curvature == CurvatureFilter::negative && !negative_curvature(g)) return;
    }
    CanonicalLabeling lab = canonical_labeling(g);
    if (!found_.count(lab.form)) found_.emplace(lab.form, relabel(g, lab.order));
  }

  std::size_t v_;
  const CensusSpec& spec_;
  std::map<CanonicalForm, Graph>& found_;
  CensusResult& result_;
  std::vector<std::size_t> degree_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<Edge> edges_;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
};

}  // namespace

CensusResult census_oracle(const CensusSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  CensusResult result;
  std::map<CanonicalForm, Graph> found;
  for (std::size_t v = spec.min_v; v <= spec.max_v; ++v) {
    EdgeBacktracker(v, spec, found, result).run();
  }
  for (auto& [form, g] : found) {
    ++result.per_v_counts[g.order()];
    result.graphs.push_back(std::move(g));
  }
  std::stable_sort(result.graphs.begin(), result.graphs.end(),
                   [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace dsphere
