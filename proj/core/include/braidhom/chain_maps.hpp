#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidhom/chain.hpp"
#include "braidhom/graph.hpp"
#include "braidhom/graph_analysis.hpp"

namespace braidhom {

/// Linear map between Swiatkowski complexes, given on monomials. The map
/// shifts bidegrees by (degree_shift, weight_shift).
class ChainMap {
 public:
  using Action = std::function<Chain(const Monomial&)>;

  ChainMap(Graph source, Graph target, Action action, std::string name = {}, int degree_shift = 0,
           int weight_shift = 0);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::string& name() const { return name_; }
  int degree_shift() const { return degree_shift_; }
  int weight_shift() const { return weight_shift_; }

  Chain operator()(const Monomial& m) const { return action_(m); }
  Chain operator()(const Chain& c) const;

  /// Matrix on the unreduced bases of bidegree (degree, weight) and its image bidegree.
  IntMatrix matrix(int degree, int weight) const;

  /// Checks  d f = sign * f d  on every unreduced basis monomial of bidegree (degree, weight).
  bool commutes_with_boundary(int degree, int weight, int sign = 1) const;

  /// this after first.
  ChainMap after(const ChainMap& first) const;

 private:
  Graph source_, target_;
  Action action_;
  std::string name_;
  int degree_shift_;
  int weight_shift_;
};

/// Images of the generators of the source complex: the occupied state of
/// every vertex, every half-edge and every edge.
struct GeneratorImages {
  std::vector<Chain> occupied;
  std::vector<Chain> half_edge;
  std::vector<Chain> edge;
};

/// Multiplicative extension of generator images (products taken in vertex order).
ChainMap make_multiplicative_map(const Graph& source, const Graph& target, GeneratorImages images,
                                 std::string name = {});

ChainMap identity_map(const Graph& g);

/// Multiplication by the edge e (bidegree (0, 1)).
ChainMap edge_stabilization_map(const Graph& g, EdgeId e);

/// Map S(source) -> S(host) induced by a topological embedding: edge e goes
/// to the first edge of its path, the end-0 half-edge to the first half-edge
/// of the path, and the far half-edge to the last half-edge of the path
/// corrected by the sum of (outgoing - incoming) half-edges at the interior
/// vertices, so that boundaries agree. With EdgeAnchor::last the edge goes
/// to the last edge of its path and the correction moves to the near end.
enum class EdgeAnchor { first, last };
ChainMap embedding_map(const Graph& source, const Graph& host, const GraphEmbedding& embedding,
                       EdgeAnchor anchor = EdgeAnchor::first);

/// Inclusion map of a subgraph recorded by a correspondence.
ChainMap inclusion_map(const DerivedGraph& sub, const Graph& host);

/// Maps of the vertex explosion sequence at v (reduced complexes).
struct ExplosionMaps {
  Graph graph;
  VertexId vertex = kNone;
  HalfEdgeId privileged = kNone;      ///< h0, the least half-edge at v
  DerivedGraph exploded;              ///< Gamma_v
  std::vector<HalfEdgeId> summands;   ///< H(v) minus h0, increasing

  /// Induced by the inclusion of Gamma_v: new vertex n_h becomes edge e(h).
  ChainMap iota() const;
  /// psi: one component per summand (in summand order), bidegree shift (-1, -1).
  /// The argument must lie in the reduced subcomplex of S(graph); the output
  /// chains are unreduced expansions on Gamma_v. Anticommutes with d.
  /// `modulus` > 0 reads c as a chain over F_p.
  std::vector<Chain> psi(const Chain& c, int modulus = 0) const;
  /// delta on the summand of h: multiplication by e(h) - e(h0).
  ChainMap delta(int summand) const;
  /// Sum of delta over components.
  Chain delta(const std::vector<Chain>& components) const;
};

/// Throws PreconditionError unless h0 is the least half-edge at v.
ExplosionMaps explosion_maps(const Graph& g, VertexId v, HalfEdgeId h0 = kNone);

/// Map S(host) -> S(result) of an edge surgery collapsing Delta onto the new edge e_xy.
ChainMap surgery_map(const SurgeryDescriptor& sd);

}  // namespace braidhom
