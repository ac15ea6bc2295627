#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidhom/abelian_group.hpp"
#include "braidhom/chain.hpp"
#include "braidhom/chain_maps.hpp"
#include "braidhom/graph_analysis.hpp"

namespace braidhom {

enum class ClassKind { loop, star, theta, external_product, stabilized };
const char* kind_name(ClassKind k);

/// A cycle of one of the standard families together with its closed support.
struct GeneratorClass {
  ClassKind kind = ClassKind::loop;
  Chain chain;
  int degree = 0;
  int weight = 0;
  std::vector<VertexId> support_vertices;  ///< sorted
  std::vector<EdgeId> support_edges;       ///< sorted
  bool rigid = false;                      ///< stars only
  std::string provenance;
};

/// Loop cycle of an embedded circle: the sum over its vertices of the
/// outgoing minus the incoming half-edge.
GeneratorClass loop_cycle(const Graph& g, const Cycle& cycle);

/// Star cycle e3 (h1 - h2) + e2 (h3 - h1) + e1 (h2 - h3) at a common vertex.
GeneratorClass star_cycle(const Graph& g, HalfEdgeId h1, HalfEdgeId h2, HalfEdgeId h3);

/// Whether h1, h2, h3 reach at least two components of the graph exploded at their vertex.
bool is_rigid_star(const Graph& g, HalfEdgeId h1, HalfEdgeId h2, HalfEdgeId h3);

/// The element sum_sigma sgn(sigma) (e1 - e_sigma(3)) (h_{1,sigma(1)} - h_{1,1}) (h_{2,sigma(2)} - h_{2,1})
/// on theta_graph(4), with h_{i,j} the half-edge of edge j at vertex i.
Chain a2_chain();

/// A2 transported along the embedding by embedding_map; the anchor picks
/// which path edge carries the stabilizers.
GeneratorClass theta_cycle(const Graph& host, const ThetaEmbedding& emb, EdgeAnchor anchor = EdgeAnchor::first);

/// Product of cycles with disjoint closed supports (PreconditionError otherwise).
GeneratorClass external_product(const GeneratorClass& a, const GeneratorClass& b);

/// Multiplication by the edge monomial with the given exponents.
GeneratorClass stabilize(const Graph& g, const GeneratorClass& c, const std::vector<int>& exponents);

std::vector<GeneratorClass> all_loop_cycles(const Graph& g);
/// One star cycle per 3-subset of H(v) (increasing), for every essential v.
std::vector<GeneratorClass> all_star_cycles(const Graph& g);
std::vector<GeneratorClass> all_theta_cycles(const Graph& g);

/// Weight-k cycles lying in M(g) that span it in H_2(B_k(g)): every theta
/// class and every product of disjoint loop/star cycles, stabilized by
/// monomials filling the weight. Redundant stabilizations of classes already
/// spanned at lower weight are pruned.
std::vector<GeneratorClass> m_generators(const Graph& g, int k);

/// M(g) in weight k as a subgroup of homology(g, 2, k)->group().
Subgroup m_submodule(const Graph& g, int k);

/// Subdivision of e and explosion of the new vertex w, with the labels used
/// by the standard-cycle properties.
struct PeskySetup {
  Graph graph;
  EdgeId edge = kNone;
  DerivedGraph subdivided;   ///< g with e subdivided
  VertexId subdivision_vertex = kNone;
  ExplosionMaps maps;        ///< explosion of the subdivision vertex
  VertexId w = kNone;        ///< end of e in the exploded graph
  VertexId w_prime = kNone;  ///< end of e'
  EdgeId e = kNone;
  EdgeId e_prime = kNone;

  const Graph& exploded() const { return maps.exploded.graph; }
};

/// Throws PreconditionError if e is a self-loop or g is disconnected.
PeskySetup pesky_setup(const Graph& g, EdgeId e);

/// One summand p * a of a standard cycle; `multiplier` is a polynomial in the edges.
struct StandardSummand {
  GeneratorClass cycle;  ///< loop or star cycle on the exploded graph
  Chain multiplier;      ///< edge monomials only
};

Chain standard_cycle_chain(const PeskySetup& s, const std::vector<StandardSummand>& summands);

struct StandardCycleFlags {
  bool P = false;
  bool E = false;
  bool S = false;
  bool K = false;
  std::optional<Path> path_witness;        ///< w-w' path missing a support (P fails)
  std::optional<EdgeId> edge_witness;      ///< multiplier edge off its support (E fails)
  std::optional<VertexId> cut_witness;     ///< separating 1-cut inside the support (S fails)

  bool pesky() const { return P && E && S && K; }
};

StandardCycleFlags standard_cycle_flags(const PeskySetup& s, const std::vector<StandardSummand>& summands);

}  // namespace braidhom
