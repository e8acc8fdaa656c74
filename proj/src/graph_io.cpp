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

#include "dsphere/graph_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dsphere/errors.h"

namespace dsphere {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw InputError(std::string("graph6: byte out of range: '") + c + "'");
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw InputError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw InputError("graph6: truncated size field");
    std::size_t value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      value = (value << 6) | static_cast<std::size_t>(sextet(text[pos++]));
    }
    return value;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }

  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw InputError("graph6: expected " + std::to_string(need) +
                     " adjacency bytes, got " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (std::size_t r = bits; r < need * 6; ++r) {
    if ((sextet(text[pos + r / 6]) >> (5 - r % 6)) & 1) {
      throw InputError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, 126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("json graph: expected an object with integer \"n\"");
  }
  const auto n_signed = j["n"].get<long long>();
  if (n_signed < 0) throw InputError("json graph: negative \"n\"");
  const auto n = static_cast<std::size_t>(n_signed);
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("json graph: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned()) {
        throw InputError("json graph: each edge must be a pair of vertex indices");
      }
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::vector<Edge> hot = style.highlight_edges;
  std::sort(hot.begin(), hot.end());
  std::vector<Vertex> hot_v = style.highlight_vertices;
  std::sort(hot_v.begin(), hot_v.end());

  std::ostringstream out;
  out << "graph " << style.name << " {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (std::binary_search(hot_v.begin(), hot_v.end(), v)) {
      out << " [style=filled, fillcolor=lightblue]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (std::binary_search(hot.begin(), hot.end(), e)) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw InputError("empty graph input");
  if (body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("json graph: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_graph6(body.substr(0, body.find('\n')));
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace dsphere
