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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsphere/graph.h"

namespace dsphere {

/// graph6, header-less. A leading ">>graph6<<" is tolerated on input.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// {"n": int, "edges": [[i, j], ...]} with i < j, edges sorted.
nlohmann::json graph_to_json(const Graph& g);
/// Accepts edges in either orientation; rejects loops and bad indices.
Graph graph_from_json(const nlohmann::json& j);

struct DotStyle {
  std::string name = "G";
  /// Drawn bold and colored.
  std::vector<Edge> highlight_edges;
  std::vector<Vertex> highlight_vertices;
};
std::string to_dot(const Graph& g, const DotStyle& style = {});

/// Reads a graph from text: JSON when the first non-blank character is '{',
/// otherwise the first non-blank line as graph6.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace dsphere
