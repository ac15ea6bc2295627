#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "braidhom/graph.hpp"

namespace braidhom::cli {

/// JSON interchange form of a graph:
///
///   {"name": "theta4", "vertices": ["a", "b"], "edges": [["a", "b"], ...],
///    "marks": {"edge": 0, "vertex_sets": {"W": ["a"]}}}
///
/// Only "vertices" and "edges" are required. The marked edge is an index
/// into "edges".
struct GraphDocument {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<int> marked_edge;
  std::map<std::string, std::vector<std::string>> vertex_sets;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws MalformedInputError with "line L, column C: ..." diagnostics.
GraphDocument parse_document(std::string_view text);
Graph to_graph(const GraphDocument& doc);
Graph parse_graph(std::string_view text);

GraphDocument document_from_graph(const Graph& g, std::string name = {});

nlohmann::json to_json(const GraphDocument& doc);
/// Serialization in declaration order.
std::string serialize(const GraphDocument& doc);
/// Vertices sorted, each edge written with its smaller endpoint first and
/// edges sorted by endpoint pair; the marked edge index follows its edge.
GraphDocument canonical(const GraphDocument& doc);
/// Text hashed by the cache: canonical vertices and edges only.
std::string canonical_graph_text(const GraphDocument& doc);

GraphDocument read_document_file(const std::string& path);

}  // namespace braidhom::cli
