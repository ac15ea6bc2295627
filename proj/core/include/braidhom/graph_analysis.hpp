#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "braidhom/graph.hpp"

namespace braidhom {

/// Smallest simplicial graph homeomorphic to `g`: smooth every bivalent
/// vertex, put one vertex on each self-loop, then one on all but one edge of
/// each class of parallel edges. A circle component becomes a triangle.
/// The correspondence maps model vertices to the vertices of `g` they came
/// from (kNone for added ones) and model edges to the edge of `g` they run
/// along.
DerivedGraph minimal_simplicial_model(const Graph& g);

/// |E| - |V| + number of components.
int first_betti(const Graph& g);

/// Vertex connectivity of the minimal model, capped at 3. A single vertex
/// counts as 1-connected and a disconnected graph as 0-connected.
int connectivity(const Graph& g);

/// Closure of one component of the model minus the cut vertices.
struct CutComponent {
  std::vector<VertexId> vertices;  ///< model ids, including the cut vertices it touches
  std::vector<EdgeId> edges;       ///< model ids
  std::vector<VertexId> boundary;  ///< cut vertices in the closure
  /// The component as a standalone graph; correspondence points into the model.
  DerivedGraph subgraph;
};

struct Cut {
  std::vector<VertexId> vertices;  ///< model ids, increasing
  std::vector<CutComponent> components;
};

struct CutReport {
  int k = 0;
  DerivedGraph model;
  std::vector<Cut> cuts;
  /// One plus the number of 1-cuts of the model.
  int n1 = 1;
};

/// All k-cuts (k = 1 or 2) of the minimal model: vertex sets S whose open
/// star has a disconnected complement.
CutReport find_cuts(const Graph& g, int k);

/// Cut vertices of `g` itself (no model), i.e. vertices whose open star has a
/// complement with more components than the graph.
std::vector<VertexId> cut_vertices(const Graph& g);

/// `component` with a fresh edge joining x and y appended.
Graph completion(const Graph& component, VertexId x, VertexId y);

bool is_planar(const Graph& g);

/// An embedded circle, traversed in the direction of its least half-edge.
/// `half_edges[j]` leaves `vertices[j]`; its opposite arrives at
/// `vertices[j + 1]` (cyclically).
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<HalfEdgeId> half_edges;
  std::vector<EdgeId> edges;  ///< sorted

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Builds the canonical orientation of the circle through `edges`; throws
/// PreconditionError if they do not form one.
Cycle make_cycle(const Graph& g, std::vector<EdgeId> edges);

std::vector<Cycle> enumerate_cycles(const Graph& g);

/// Walk from one vertex to another; `half_edges[j]` leaves the j-th vertex.
using Path = std::vector<HalfEdgeId>;

/// Simple paths from x to y (x != y) that only use edges with `allowed[e]`
/// set (all edges when empty). Stops after `limit` paths.
std::vector<Path> simple_paths(const Graph& g, VertexId x, VertexId y,
                               const std::vector<char>& allowed = {},
                               std::size_t limit = SIZE_MAX);

std::vector<EdgeId> path_edges(const Path& p);
/// Interior vertices of a path, in order.
std::vector<VertexId> path_interior(const Graph& g, const Path& p);

/// Map of a graph H into a host graph sending each edge of H to a path.
/// Edge e of H runs along `edge_paths[e]`, starting at the image of the
/// endpoint of half-edge 2e. Images of vertices are distinct, paths meet
/// only at their ends and never pass through the image of a vertex.
struct GraphEmbedding {
  std::vector<VertexId> vertex;
  std::vector<Path> edge_paths;
};

/// Checks the conditions listed on GraphEmbedding; throws PreconditionError.
void validate_embedding(const Graph& source, const Graph& host, const GraphEmbedding& emb);

/// Embedding given by the correspondence of an edge subgraph or of any
/// derived graph whose elements all descend injectively from the host.
GraphEmbedding embedding_from_correspondence(const Graph& source, const Graph& host,
                                             const GraphCorrespondence& c);

/// A subdivided theta graph with four arcs inside a host.
struct ThetaEmbedding {
  VertexId x = kNone;
  VertexId y = kNone;
  std::array<Path, 4> paths;  ///< each from x to y, sorted by first half-edge

  GraphEmbedding as_embedding() const;  ///< from theta_graph(4)
  std::vector<EdgeId> edges() const;
  friend bool operator==(const ThetaEmbedding&, const ThetaEmbedding&) = default;
};

std::vector<ThetaEmbedding> enumerate_theta_embeddings(const Graph& g);

/// Replacement of a connected subgraph by one edge.
struct SurgeryDescriptor {
  Graph host;
  std::vector<EdgeId> delta_edges;       ///< sorted host ids
  std::vector<VertexId> delta_vertices;  ///< sorted host ids
  VertexId x = kNone;
  VertexId y = kNone;
  /// Host minus the interior of the subgraph, plus the new edge (last id).
  Graph result;
  /// result -> host; the new edge and its half-edges map to kNone.
  GraphCorrespondence correspondence;
  EdgeId new_edge = kNone;

  /// Sections: the result mapped back into the host, sending the new edge
  /// along an x-y path inside the subgraph.
  std::vector<GraphEmbedding> sections() const;
  bool in_delta_edge(EdgeId e) const;
  bool in_delta_vertex(VertexId v) const;
};

/// Surgery on `host` along the subgraph spanned by `delta_edges` (plus
/// `extra_vertices`). Interior vertices of the subgraph must have all their
/// edges inside it.
SurgeryDescriptor surgery(const Graph& host, std::vector<EdgeId> delta_edges, VertexId x, VertexId y,
                          std::vector<VertexId> extra_vertices = {});

}  // namespace braidhom
