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

#include "dsphere/census.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "dsphere/errors.h"

namespace dsphere {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxOrder = 64;

Mask bit(std::size_t i) { return Mask{1} << i; }
std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }
std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

struct State {
  std::array<Mask, kMaxOrder> adj{};
  Mask closed = 0;
  /// Vertices 0..used-1 have been placed; the rest are fresh.
  std::size_t used = 0;
};

Graph to_graph(const State& s) {
  GraphBuilder b(s.used);
  for (std::size_t i = 0; i < s.used; ++i) {
    for (Mask m = s.adj[i] & ~(bit(i + 1) - 1); m != 0; m &= m - 1) b.add_edge(i, lowest(m));
  }
  return b.build();
}

/// Number of connected components of the subgraph induced by `within`.
std::size_t components(const State& s, Mask within) {
  std::size_t count = 0;
  while (within != 0) {
    Mask reached = within & (~within + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= s.adj[lowest(f)];
      next &= within & ~reached;
      reached |= next;
      frontier = next;
    }
    within &= ~reached;
    ++count;
  }
  return count;
}

struct Completion {
  std::vector<std::size_t> cycle;
  Mask placed = 0;
  std::uint32_t remaining = 0;
};

class LinkClosingSearch {
 public:
  using Sink = std::function<void(const State&)>;

  LinkClosingSearch(std::size_t v, Mask allowed, Sink sink, const std::function<void()>& tick)
      : v_(v), allowed_(allowed), max_degree_(63 - static_cast<std::size_t>(std::countl_zero(allowed))),
        sink_(std::move(sink)), tick_(tick) {}

  std::uint64_t nodes() const { return nodes_; }

  /// Root states: vertex 0 of degree k with link 1..k in cycle order.
  std::optional<State> root(std::size_t k) {
    if (k + 1 > v_ || !(allowed_ & bit(k))) return std::nullopt;
    min_degree_ = k;
    State s;
    s.used = k + 1;
    for (std::size_t i = 1; i <= k; ++i) {
      add_edge(s, 0, i);
      add_edge(s, i, i % k + 1);
    }
    s.closed = bit(0);
    if (!propagate(s)) return std::nullopt;
    return s;
  }

  void set_min_degree(std::size_t k) { min_degree_ = k; }

  /// Runs the search below `s`, or collects the children of `s` when `out`
  /// is given.
  void search(const State& s, std::vector<State>* out = nullptr) {
    ++nodes_;
    if (tick_ && (nodes_ & 0xfff) == 0) tick_();
    const Mask open = (bit(s.used) - 1) & ~s.closed;
    if (open == 0) {
      if (s.used == v_) sink_(s);
      return;
    }
    const std::size_t x = lowest(open);
    close_vertex(s, x, out);
  }

 private:
  static void add_edge(State& s, std::size_t a, std::size_t b) {
    s.adj[a] |= bit(b);
    s.adj[b] |= bit(a);
  }

  bool try_edge(State& s, std::size_t a, std::size_t b) const {
    if (s.adj[a] & bit(b)) return true;
    if ((s.closed & (bit(a) | bit(b))) != 0) return false;
    // A common closed neighbor would gain a chord in its link.
    if ((s.adj[a] & s.adj[b] & s.closed) != 0) return false;
    if (popcount(s.adj[a]) >= max_degree_ || popcount(s.adj[b]) >= max_degree_) return false;
    add_edge(s, a, b);
    return true;
  }

  bool length_ok(std::size_t len) const {
    return len >= min_degree_ && len < 64 && (allowed_ & bit(len)) != 0;
  }

  /// Closes every open vertex whose partial link has become a cycle, and
  /// fails when some partial link can no longer grow into an induced cycle.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask open = (bit(s.used) - 1) & ~s.closed; open != 0; open &= open - 1) {
        const std::size_t y = lowest(open);
        const Mask link = s.adj[y];
        const std::size_t size = popcount(link);
        if (size > max_degree_) return false;
        std::size_t degree_sum = 0;
        bool all_two = true;
        for (Mask m = link; m != 0; m &= m - 1) {
          const std::size_t d = popcount(s.adj[lowest(m)] & link);
          if (d > 2) return false;
          degree_sum += d;
          all_two = all_two && d == 2;
        }
        const std::size_t comps = components(s, link);
        if (all_two) {
          if (comps != 1 || !length_ok(size)) return false;
          s.closed |= bit(y);
          changed = true;
        } else if (degree_sum / 2 > size - comps) {
          return false;  // a cycle inside a link that is not all cycle
        }
      }
    }
    return true;
  }

  void close_vertex(const State& s, std::size_t x, std::vector<State>* out) {
    const Mask link = s.adj[x];
    // Split the partial link into induced paths, each listed end to end.
    std::vector<std::vector<std::size_t>> paths;
    Mask interior = 0;
    Mask left = link;
    while (left != 0) {
      std::size_t start = lowest(left);
      // Find an end of start's component.
      std::size_t prev = kMaxOrder;
      std::size_t cur = start;
      while (true) {
        const Mask nb = s.adj[cur] & link & ~(prev < kMaxOrder ? bit(prev) : 0);
        if (nb == 0) break;
        prev = cur;
        cur = lowest(nb);
      }
      std::vector<std::size_t> path{cur};
      prev = kMaxOrder;
      while (true) {
        const Mask nb = s.adj[path.back()] & link & ~(prev < kMaxOrder ? bit(prev) : 0);
        if (nb == 0) break;
        prev = path.back();
        path.push_back(lowest(nb));
      }
      for (std::size_t i = 1; i + 1 < path.size(); ++i) interior |= bit(path[i]);
      for (std::size_t u : path) left &= ~bit(u);
      paths.push_back(std::move(path));
    }
    paths_ = &paths;
    interior_ = interior;
    base_used_ = s.used;
    x_ = x;
    out_ = out;
    link_size_ = popcount(link);

    max_length_ = 0;
    for (std::size_t len = link_size_; len <= max_degree_; ++len) {
      if (length_ok(len)) max_length_ = len;
    }
    if (max_length_ == 0) return;

    const std::uint32_t all = (std::uint32_t{1} << paths.size()) - 1;
    const auto& first = paths[0];
    Completion c;
    c.cycle = first;
    for (std::size_t u : first) c.placed |= bit(u);
    c.remaining = all & ~std::uint32_t{1};
    extend(s, c);
  }

  std::size_t remaining_vertices(std::uint32_t remaining) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < paths_->size(); ++i) {
      if (remaining & (std::uint32_t{1} << i)) total += (*paths_)[i].size();
    }
    return total;
  }

  void extend(const State& w, const Completion& c) {
    const std::size_t tail = c.cycle.back();
    const std::size_t start = c.cycle.front();
    const std::size_t len = c.cycle.size();
    const std::size_t pending = remaining_vertices(c.remaining);
    if (len + pending > max_length_) return;

    if (c.remaining == 0 && length_ok(len) && len >= 3) {
      State next = w;
      if (try_edge(next, tail, start)) finish(next, c);
    }
    for (std::size_t i = 0; i < paths_->size(); ++i) {
      if (!(c.remaining & (std::uint32_t{1} << i))) continue;
      const auto& path = (*paths_)[i];
      for (int orientation = 0; orientation < (path.size() > 1 ? 2 : 1); ++orientation) {
        State next = w;
        const std::size_t head = orientation == 0 ? path.front() : path.back();
        if (!try_edge(next, tail, head)) continue;
        Completion d = c;
        if (orientation == 0) {
          d.cycle.insert(d.cycle.end(), path.begin(), path.end());
        } else {
          d.cycle.insert(d.cycle.end(), path.rbegin(), path.rend());
        }
        for (std::size_t u : path) d.placed |= bit(u);
        d.remaining &= ~(std::uint32_t{1} << i);
        extend(next, d);
      }
    }
    if (len + pending + 1 > max_length_) return;
    // Connectors: open placed vertices outside the link, or the next fresh one.
    Mask candidates = (bit(base_used_) - 1) & ~w.closed & ~w.adj[x_] & ~bit(x_) & ~c.placed;
    if (w.used < v_) candidates |= bit(w.used);
    for (; candidates != 0; candidates &= candidates - 1) {
      const std::size_t u = lowest(candidates);
      if (w.adj[u] & interior_) continue;
      if (w.adj[u] & c.placed & ~bit(tail) & ~bit(start)) continue;
      State next = w;
      if (u == next.used) ++next.used;
      if (!try_edge(next, x_, u) || !try_edge(next, tail, u)) continue;
      Completion d = c;
      d.cycle.push_back(u);
      d.placed |= bit(u);
      extend(next, d);
    }
  }

  void finish(State& w, const Completion& c) {
    const std::size_t n = c.cycle.size();
    if (w.adj[x_] != c.placed) return;
    for (std::size_t i = 0; i < n; ++i) {
      const Mask expect = bit(c.cycle[(i + n - 1) % n]) | bit(c.cycle[(i + 1) % n]);
      if ((w.adj[c.cycle[i]] & c.placed) != expect) return;
    }
    w.closed |= bit(x_);
    if (!propagate(w)) return;
    // The recursion below clobbers the per-closing fields; save them.
    const auto* paths = paths_;
    const Mask interior = interior_;
    const std::size_t base_used = base_used_;
    const std::size_t x = x_;
    const std::size_t link_size = link_size_;
    const std::size_t max_length = max_length_;
    auto* out = out_;
    if (out != nullptr) {
      out->push_back(w);
    } else {
      search(w);
    }
    paths_ = paths;
    interior_ = interior;
    base_used_ = base_used;
    x_ = x;
    link_size_ = link_size;
    max_length_ = max_length;
    out_ = out;
  }

  std::size_t v_;
  Mask allowed_;
  std::size_t max_degree_;
  std::size_t min_degree_ = 0;
  Sink sink_;
  const std::function<void()>& tick_;
  std::uint64_t nodes_ = 0;

  const std::vector<std::vector<std::size_t>>* paths_ = nullptr;
  Mask interior_ = 0;
  std::size_t base_used_ = 0;
  std::size_t x_ = 0;
  std::size_t link_size_ = 0;
  std::size_t max_length_ = 0;
  std::vector<State>* out_ = nullptr;
};

Mask allowed_mask(const CensusSpec& spec) {
  Mask m = 0;
  for (std::size_t d : spec.allowed_degrees) m |= bit(d);
  return m;
}

bool passes_filters(const Graph& g, const CensusSpec& spec) {
  if (!is_connected(g)) return false;
  for (std::size_t d : g.degrees()) {
    if (std::find(spec.allowed_degrees.begin(), spec.allowed_degrees.end(), d) ==
        spec.allowed_degrees.end()) {
      return false;
    }
  }
  if (spec.require_2graph && is_dgraph(g, nullptr) != 2) return false;
  if (spec.target_chi && euler_characteristic(g) != *spec.target_chi) return false;
  if (spec.curvature == CurvatureFilter::positive && !positive_curvature(g)) return false;
  if (spec.curvature == CurvatureFilter::negative && !negative_curvature(g)) return false;
  return true;
}

void finalize(CensusResult& result, std::map<CanonicalForm, Graph>& found) {
  for (auto& [form, g] : found) {
    ++result.per_v_counts[g.order()];
    result.graphs.push_back(std::move(g));
  }
  std::stable_sort(result.graphs.begin(), result.graphs.end(),
                   [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
}

}  // namespace

void validate(const CensusSpec& spec) {
  if (spec.min_v > spec.max_v) throw InputError("census: empty vertex range");
  if (spec.max_v > kMaxOrder - 1) throw InputError("census: at most 63 vertices supported");
  if (spec.allowed_degrees.empty()) throw InputError("census: no allowed degrees");
  for (std::size_t d : spec.allowed_degrees) {
    if (d >= 63) throw InputError("census: degree too large");
    if (spec.require_2graph && d < 4) {
      throw InputError("census: 2-graph links are cycles with at least 4 vertices");
    }
  }
}

std::vector<DegreeMultiset> degree_sequence_preprocessing(const CensusSpec& spec, std::size_t v) {
  std::vector<std::size_t> degrees = spec.allowed_degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  // A simple graph on v vertices has no degree above v - 1.
  while (!degrees.empty() && degrees.back() + 1 > v) degrees.pop_back();
  std::vector<DegreeMultiset> out;
  if (degrees.empty() || v == 0) return out;
  // sum d c_d = 6(v - chi) must lie between v*min and v*max.
  const long lo = static_cast<long>(v * degrees.front());
  const long hi = static_cast<long>(v * degrees.back());
  std::vector<long> chis;
  if (spec.target_chi) {
    chis.push_back(*spec.target_chi);
  } else {
    for (long chi = 2; 6 * (static_cast<long>(v) - chi) <= hi; --chi) chis.push_back(chi);
  }
  for (long chi : chis) {
    const long total = 6 * (static_cast<long>(v) - chi);
    if (total < lo || total > hi) continue;
    std::vector<std::size_t> counts(degrees.size(), 0);
    std::function<void(std::size_t, std::size_t, long)> place = [&](std::size_t i, std::size_t left,
                                                                    long need) {
      if (i + 1 == degrees.size()) {
        if (need == static_cast<long>(left * degrees[i])) {
          counts[i] = left;
          DegreeMultiset m;
          m.chi = chi;
          for (std::size_t j = 0; j < degrees.size(); ++j) {
            if (counts[j] > 0) m.counts.emplace_back(degrees[j], counts[j]);
          }
          out.push_back(std::move(m));
        }
        return;
      }
      for (std::size_t c = 0; c <= left; ++c) {
        counts[i] = c;
        place(i + 1, left - c, need - static_cast<long>(c * degrees[i]));
      }
    };
    place(0, v, total);
  }
  return out;
}

CensusResult enumerate_2graphs(const CensusSpec& spec) {
  validate(spec);
  if (!spec.require_2graph) {
    throw InputError("census: the link-closing search only enumerates 2-graphs");
  }
  const auto start_time = std::chrono::steady_clock::now();
  CensusResult result;
  std::map<CanonicalForm, Graph> accepted;
  std::mutex mutex;
  const Mask allowed = allowed_mask(spec);

  for (std::size_t v = spec.min_v; v <= spec.max_v; ++v) {
    if (degree_sequence_preprocessing(spec, v).empty()) {
      result.skipped.push_back("v=" + std::to_string(v) +
                               ": no degree multiset satisfies Gauss-Bonnet and the handshake");
      continue;
    }
    std::map<CanonicalForm, Graph> leaves;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> last_report{0};
    auto report = [&](bool finished) {
      if (!spec.progress) return;
      std::lock_guard lock(mutex);
      spec.progress({v, nodes.load(), leaves.size(), finished});
    };
    auto sink = [&](const State& s) {
      Graph g = to_graph(s);
      CanonicalLabeling lab = canonical_labeling(g);
      std::lock_guard lock(mutex);
      if (!leaves.count(lab.form)) leaves.emplace(lab.form, relabel(g, lab.order));
    };

    // Work units: the children of the first closing below each root.
    std::vector<std::pair<std::size_t, State>> units;
    std::function<void()> no_tick;
    for (std::size_t k : spec.allowed_degrees) {
      LinkClosingSearch seed(v, allowed, sink, no_tick);
      auto root = seed.root(k);
      if (!root) continue;
      std::vector<State> children;
      seed.search(*root, &children);
      nodes += seed.nodes();
      for (State& c : children) units.emplace_back(k, std::move(c));
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      std::uint64_t local = 0;
      std::function<void()> tick = [&]() {
        nodes += 0x1000;
        local += 0x1000;
        const std::uint64_t now = nodes.load();
        std::uint64_t prev = last_report.load();
        if (now - prev >= spec.progress_interval &&
            last_report.compare_exchange_strong(prev, now)) {
          report(false);
        }
      };
      for (std::size_t i = next++; i < units.size(); i = next++) {
        LinkClosingSearch search(v, allowed, sink, tick);
        search.set_min_degree(units[i].first);
        search.search(units[i].second);
        nodes += search.nodes() & 0xfff;
      }
    };
    const unsigned threads = std::max(1u, spec.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    result.nodes_explored += nodes.load();
    report(true);

    result.candidates += leaves.size();
    for (auto& [form, g] : leaves) {
      if (passes_filters(g, spec)) {
        accepted.emplace(form, std::move(g));
      } else {
        ++result.rejected;
      }
    }
  }
  finalize(result, accepted);
  result.wall_time = std::chrono::steady_clock::now() - start_time;
  return result;
}

std::vector<CensusDossier> classify_census(const CensusResult& result) {
  std::vector<CensusDossier> out;
  for (const Graph& g : result.graphs) {
    CensusDossier d;
    d.graph = g;
    d.v = g.order();
    d.f_vector = f_vector(g);
    for (std::size_t deg : g.degrees()) ++d.degree_histogram[deg];
    d.diameter = diameter(g);
    d.curvature = curvature_report(g);
    d.certificate = sphere_certificate(g, 2);
    d.certificate_replays = d.certificate && replay_sphere(g, *d.certificate, 2);
    d.every_puncture_contractible = true;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (!is_contractible(puncture(g, x).graph)) d.every_puncture_contractible = false;
    }
    d.two_ball_decomposition_found = two_ball_decomposition(g, 2).has_value();
    for (const auto& cycle : induced_cycles(g, 4)) {
      ++d.loops_checked;
      if (contract_loop(g, cycle).verdict == LoopVerdict::contractible) ++d.loops_contracted;
    }
    out.push_back(std::move(d));
  }
  return out;
}

CensusSpec positive_census_spec() {
  CensusSpec spec;
  spec.min_v = 6;
  spec.max_v = 12;
  spec.allowed_degrees = {4, 5};
  spec.curvature = CurvatureFilter::positive;
  return spec;
}

CensusSpec negative_census_spec(int genus) {
  if (genus < 2) throw InputError("negative census: genus must be at least 2");
  const long chi = 2 - 2 * static_cast<long>(genus);
  CensusSpec spec;
  spec.max_v = static_cast<std::size_t>(-6 * chi);
  spec.min_v = 8;
  spec.allowed_degrees.clear();
  for (std::size_t d = 7; d < spec.max_v; ++d) spec.allowed_degrees.push_back(d);
  spec.target_chi = chi;
  spec.curvature = CurvatureFilter::negative;
  return spec;
}

}  // namespace dsphere
