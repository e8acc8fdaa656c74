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

#include "dsphere/canonical.h"

#include <algorithm>
#include <numeric>

namespace dsphere {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Bits = std::vector<std::uint8_t>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(Vertex a, Vertex b) { parent_[find(a)] = find(b); }

 private:
  std::vector<Vertex> parent_;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ > 0) {
      Partition root{Cell(n_)};
      std::iota(root[0].begin(), root[0].end(), Vertex{0});
      std::vector<Vertex> prefix;
      search(std::move(root), prefix);
    }
    out.order = best_order_;
    out.leaves = leaves_;
    out.form.bytes.reserve(4 + best_.size());
    for (int shift = 24; shift >= 0; shift -= 8) {
      out.form.bytes.push_back(static_cast<std::uint8_t>((n_ >> shift) & 0xff));
    }
    out.form.bytes.insert(out.form.bytes.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  // Equitable refinement: split every cell by neighbor counts into every
  // other cell until nothing changes. Depends only on the ordered partition,
  // never on vertex labels.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size(); ++s) {
        const VertexSet splitter = VertexSet::of(n_, p[s]);
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() == 1) continue;
          std::vector<std::pair<std::size_t, Vertex>> keyed;
          keyed.reserve(p[c].size());
          for (Vertex v : p[c]) {
            keyed.emplace_back(g_.neighbors(v).intersection_size(splitter), v);
          }
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          Partition pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          p.erase(p.begin() + static_cast<long>(c));
          p.insert(p.begin() + static_cast<long>(c), pieces.begin(), pieces.end());
          c += pieces.size() - 1;
          changed = true;
        }
      }
    }
  }

  Bits leaf_bits(const std::vector<Vertex>& order) const {
    Bits bits((n_ * (n_ - 1) / 2 + 7) / 8, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const VertexSet& row = g_.neighbors(order[i]);
      for (std::size_t j = i + 1; j < n_; ++j, ++k) {
        if (row.contains(order[j])) {
          bits[k >> 3] |= static_cast<std::uint8_t>(0x80u >> (k & 7));
        }
      }
    }
    return bits;
  }

  void record_automorphism(const std::vector<Vertex>& from,
                           const std::vector<Vertex>& to) {
    std::vector<Vertex> perm(n_);
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) {
      perm[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(perm));
  }

  void leaf(const Partition& p) {
    ++leaves_;
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const Cell& c : p) order.push_back(c.front());
    Bits bits = leaf_bits(order);
    if (!have_best_) {
      have_best_ = true;
      best_ = first_ = bits;
      best_order_ = first_order_ = order;
      return;
    }
    if (bits == first_) record_automorphism(first_order_, order);
    if (bits > best_) {
      best_ = std::move(bits);
      best_order_ = std::move(order);
    } else if (bits == best_) {
      record_automorphism(best_order_, order);
    }
  }

  // Two candidates are interchangeable when some discovered automorphism
  // fixing the individualized prefix maps one onto the other.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried,
                           const std::vector<Vertex>& prefix) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (Vertex p : prefix) {
        if (gen[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (Vertex i = 0; i < n_; ++i) uf.unite(i, gen[i]);
    }
    if (!any) return false;
    const Vertex root = uf.find(v);
    for (Vertex u : tried) {
      if (uf.find(u) == root) return true;
    }
    return false;
  }

  void search(Partition p, std::vector<Vertex>& prefix) {
    refine(p);
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == p.size()) {
      leaf(p);
      return;
    }
    Cell cell = p[target];
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (!tried.empty() && equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      Partition child = p;
      Cell rest;
      for (Vertex u : p[target]) {
        if (u != v) rest.push_back(u);
      }
      child[target] = Cell{v};
      child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  bool have_best_ = false;
  Bits best_;
  Bits first_;
  std::vector<Vertex> best_order_;
  std::vector<Vertex> first_order_;
  std::vector<std::vector<Vertex>> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint8_t b : f.bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  return relabel(g, lab.order);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dsphere
