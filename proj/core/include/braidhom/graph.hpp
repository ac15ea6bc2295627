#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidhom {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;

inline constexpr int kNone = -1;

/// Finite graph in half-edge form. Self-loops and multiple edges are allowed.
///
/// Edge `e` owns the half-edges `2e` and `2e + 1`; the first is attached to
/// the edge's first endpoint. Vertices, edges and half-edges are numbered
/// densely from zero and these numbers are the ids used everywhere else in
/// the library. Graphs are immutable values: every construction returns a
/// new graph.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<std::pair<VertexId, VertexId>> edges,
        std::vector<std::string> vertex_names = {}, std::vector<std::string> edge_names = {});

  int num_vertices() const { return static_cast<int>(incident_.size()); }
  int num_edges() const { return static_cast<int>(half_vertex_.size() / 2); }
  int num_half_edges() const { return static_cast<int>(half_vertex_.size()); }

  static constexpr EdgeId edge_of(HalfEdgeId h) { return h / 2; }
  static constexpr HalfEdgeId opposite(HalfEdgeId h) { return h ^ 1; }
  static constexpr HalfEdgeId half_edge(EdgeId e, int end) { return 2 * e + end; }

  VertexId vertex_of(HalfEdgeId h) const { return half_vertex_[h]; }
  VertexId other_end(HalfEdgeId h) const { return half_vertex_[opposite(h)]; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return {half_vertex_[2 * e], half_vertex_[2 * e + 1]};
  }
  bool is_self_loop(EdgeId e) const { return half_vertex_[2 * e] == half_vertex_[2 * e + 1]; }

  /// H(v), in increasing id order.
  const std::vector<HalfEdgeId>& half_edges_at(VertexId v) const { return incident_[v]; }
  int valence(VertexId v) const { return static_cast<int>(incident_[v].size()); }
  bool is_essential(VertexId v) const { return valence(v) >= 3; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  /// "v:e", with the end ("v:e/0", "v:e/1") added on self-loops.
  std::string half_edge_name(HalfEdgeId h) const;
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  /// Connected component index of every vertex; components numbered by least vertex.
  std::vector<int> component_of_vertex() const;
  int num_components() const;
  bool has_isolated_vertices() const;
  bool is_connected() const { return num_components() <= 1; }

  /// Compact text encoding of the incidence structure (names excluded).
  std::string incidence_key() const;

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;
  void check_half_edge(HalfEdgeId h) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> half_vertex_;
  std::vector<std::vector<HalfEdgeId>> incident_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
};

/// Records where the elements of a derived (target) graph came from.
///
/// Each vector is indexed by target ids and holds the source id the element
/// descends from, or kNone for freshly created elements.
struct GraphCorrespondence {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
  std::vector<HalfEdgeId> half_edge;

  static GraphCorrespondence identity(const Graph& g);
};

/// Correspondence of `second` after `first` (source of `first` to target of `second`).
GraphCorrespondence compose(const GraphCorrespondence& first, const GraphCorrespondence& second);

struct DerivedGraph {
  Graph graph;
  GraphCorrespondence correspondence;
};

/// Graph on the declared vertices; throws MalformedInputError on an undeclared endpoint.
Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

enum class Family { star, theta, cycle, complete_bipartite, complete, lollipop, handcuffs, wheel, path };

/// Canonical labeled members of the standard families.
///   star {n}: center "c", leaves "l1".."ln".
///   theta {n}: vertices "v1", "v2"; edge j joins v1 to v2.
///   cycle {n}: n vertices around a circle (n = 1 is a single self-loop).
///   complete_bipartite {m, n}: "a1".."am", "b1".."bn".
///   complete {n}, path {n vertices}, wheel {n spokes; hub "h"}.
///   lollipop {}: vertex "u" with a self-loop e' (edge 0) and a stick e (edge 1) to leaf "l".
///   handcuffs {}: self-loops at "a" and "b" joined through a bivalent middle vertex "m".
/// Throws DomainError for invalid parameters.
Graph standard_family(Family kind, const std::vector<int>& params = {});

Graph star_graph(int n);
Graph theta_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph complete_graph(int n);
Graph lollipop_graph();
Graph handcuffs_graph();
Graph wheel_graph(int spokes);
Graph path_graph(int num_vertices);

/// Adds a bivalent vertex in the middle of `e`. Edge `e` keeps its first
/// endpoint and now ends at the new vertex; a new last edge continues to the
/// old second endpoint.
DerivedGraph subdivide(const Graph& g, EdgeId e);

/// Inverse of subdivide: removes bivalent `v` and merges its two edges into
/// the one with the smaller id.
DerivedGraph smooth(const Graph& g, VertexId v);

/// Explodes every vertex of `w`: each v in w is replaced by one univalent
/// vertex per half-edge of H(v). Edge and half-edge ids are preserved, so the
/// new vertex for h is `vertex_of(h)` in the result. Surviving vertices keep
/// their relative order, new vertices follow in half-edge order.
DerivedGraph explode(const Graph& g, std::span<const VertexId> w);
DerivedGraph explode(const Graph& g, VertexId v);

/// Subgraph made of the given edges, their endpoints and the extra vertices.
DerivedGraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges,
                           std::span<const VertexId> extra_vertices = {});

/// Deletes the open edges listed (vertices are kept).
DerivedGraph remove_edges(const Graph& g, std::span<const EdgeId> edges);

/// Appends a new edge joining u and v.
Graph add_edge(const Graph& g, VertexId u, VertexId v, std::string name = {});

Graph disjoint_union(const Graph& a, const Graph& b);

/// Homeomorphism test through minimal simplicial models.
bool is_homeomorphic(const Graph& a, const Graph& b);

/// Combinatorial isomorphism of simple graphs (multi-edges and loops counted).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace braidhom
