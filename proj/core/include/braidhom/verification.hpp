#pragma once

#include <string>
#include <vector>

#include "braidhom/classes.hpp"
#include "braidhom/homology.hpp"

namespace braidhom {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string witness;  ///< filled for failed checks (and for informative passes)
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  double seconds = 0;
  bool exploratory = false;  ///< run outside the hypotheses of the statement checked

  bool passed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

/// Exactness of the vertex explosion sequence
///   H_i(B_k(G_v)) -> H_i(B_k(G)) -> (+)_{h != h0} H_{i-1}(B_{k-1}(G_v)) -> H_{i-1}(B_k(G_v))
/// at every node with i <= i_max, k <= k_max, plus the alternating rank sum
/// of each full weight-k sequence. `modulus` selects Z (0) or F_p.
VerificationReport check_les_exactness(const Graph& g, VertexId v, HalfEdgeId h0, int i_max, int k_max,
                                       int modulus = 0);

/// M(g) = H_2(B_k(g)) for every k <= k_max. Nonplanar inputs are labeled exploratory.
VerificationReport check_main_theorem(const Graph& g, int k_max);

struct PeskyResult {
  VerificationReport report;
  PeskySetup setup;
  /// ker(delta) / psi(M) with generators as cycles of bidegree (1, k-1) on the exploded graph.
  Subgroup::Invariants quotient;
  std::vector<Chain> witnesses;
  /// Coordinates of ker(delta), psi(H_2) and psi(M) live in this group.
  std::shared_ptr<const HomologyGroup> target;
  std::vector<Element> kernel_generators;
  std::vector<Element> psi_m_generators;

  /// Whether the class of a cycle on the exploded graph survives in the quotient.
  bool nonzero_in_quotient(const Chain& cycle) const;
};

/// Subdivides e (not a self-loop), explodes the new vertex and compares
/// ker(delta) in H_1(B_{k-1}) with psi(M) for M = M(g) in weight k >= 1.
PeskyResult find_pesky(const Graph& g, EdgeId e, int k);

/// sigma_* iota_* = id on H_i(B_k(result)) for every section, i <= i_max,
/// k <= k_max, and sigma(e x) = e_xy sigma(x) on homology generators.
VerificationReport check_surgery_retraction(const SurgeryDescriptor& sd, int i_max, int k_max);

/// K_{3,3} with a star on three pairwise non-adjacent vertices.
struct NonplanarExample {
  Graph graph;
  EdgeId edge = kNone;    ///< star edge to subdivide
  Cycle red_loop;         ///< a2 b2 a3 b3, in the exploded graph's ids
};
NonplanarExample nonplanar_example();

VerificationReport nonplanar_demo(int k = 2);

}  // namespace braidhom
