#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "braidhom/abelian_group.hpp"
#include "braidhom/chain.hpp"
#include "braidhom/chain_maps.hpp"

namespace braidhom {

/// Bumped whenever a change to the reduction could alter the reported
/// presentation (for persisted caches).
inline constexpr const char* kEngineVersion = "braidhom-homology-1";

struct HomologyStats {
  std::uint64_t dim_above = 0;  ///< dim C_{i+1}
  std::uint64_t dim_chain = 0;  ///< dim C_i
  std::uint64_t dim_below = 0;  ///< dim C_{i-1}
  std::size_t pivots = 0;       ///< sparse eliminations
  std::size_t dense_rows = 0;   ///< size of the dense remainder
  std::size_t dense_cols = 0;
  bool big_integers = false;    ///< fell back from 64-bit arithmetic
  double seconds = 0;
};

/// H_i(B_k(graph)) over Z (modulus 0) or F_p (modulus p prime), with explicit
/// cycle coordinates and representatives. Coordinates follow the layout of
/// group(): torsion components first, in divisibility order, then free ones.
class HomologyGroup {
 public:
  struct Data;

  const Graph& graph() const;
  int degree() const;
  int weight() const;
  ComplexVariant variant() const;
  int modulus() const;

  const AbelianGroup& group() const;
  int rank() const { return group().rank(); }
  std::vector<Integer> torsion() const { return group().torsion(); }
  std::string to_string() const { return group().to_string(); }
  const HomologyStats& stats() const;

  /// Coordinates of a cycle of bidegree (degree, weight). Throws
  /// PreconditionError if the chain is not a cycle (mod p over F_p) or, for
  /// the reduced variant, not in the reduced subcomplex.
  Element coordinates(const Chain& cycle) const;
  bool is_cycle(const Chain& c) const;
  /// Cycle bounding in the chosen complex.
  bool is_boundary(const Chain& cycle) const { return group().is_zero(coordinates(cycle)); }

  /// Cycle representing basis element j of group(), as an unreduced chain.
  Chain representative(int j) const;
  std::vector<Chain> representatives() const;

  explicit HomologyGroup(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

 private:
  std::shared_ptr<const Data> d_;
};

/// Memoized homology computation (thread safe; keyed by the incidence
/// structure, bidegree, variant and modulus).
std::shared_ptr<const HomologyGroup> homology(const Graph& g, int degree, int weight,
                                              ComplexVariant variant = ComplexVariant::automatic,
                                              int modulus = 0);

/// Computation bypassing the memo.
HomologyGroup compute_homology(const Graph& g, int degree, int weight,
                               ComplexVariant variant = ComplexVariant::automatic, int modulus = 0);

void clear_homology_cache();
std::size_t homology_cache_size();

/// Map induced on homology by a chain-level map sending cycles of `source`
/// to cycles of `target`.
Homomorphism induced_map(const std::function<Chain(const Chain&)>& f, const HomologyGroup& source,
                         const HomologyGroup& target);
Homomorphism induced_map(const ChainMap& f, const HomologyGroup& source, const HomologyGroup& target);

/// Poincare series data: ranks of H_i(B_k) for i <= max_degree.
std::vector<int> betti_numbers(const Graph& g, int weight, int modulus = 0);

}  // namespace braidhom
