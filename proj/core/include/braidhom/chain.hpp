#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidhom/graph.hpp"
#include "braidhom/integer.hpp"
#include "braidhom/matrix.hpp"

namespace braidhom {

/// Vertex states of a monomial besides half-edge ids.
inline constexpr int kEmpty = -2;
inline constexpr int kOccupied = -1;

/// One basis element of the Swiatkowski complex: a state per vertex and an
/// exponent per edge. Half-edge factors are ordered by increasing vertex id;
/// that order fixes every sign in the library.
struct Monomial {
  std::vector<int> state;
  std::vector<int> exponent;

  static Monomial unit(const Graph& g);
  int degree() const;
  int weight() const;
  /// Number of half-edge states at vertices below v.
  int degree_before(VertexId v) const;
  std::string to_string(const Graph& g) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Finite integer combination of monomials of one graph.
class Chain {
 public:
  using Terms = std::map<Monomial, Integer>;

  Chain() = default;
  Chain(const Monomial& m, Integer c = 1) { add(m, std::move(c)); }

  void add(const Monomial& m, const Integer& c);
  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Integer& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Chain a, const Integer& c) { return a *= c; }
  Chain operator-() const { return Chain(*this) *= -1; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;
  /// Coefficients reduced to [0, p).
  Chain reduced_mod(int p) const;
  /// All terms share this bidegree (throws on mixed or empty chains).
  std::pair<int, int> bidegree() const;
  bool is_homogeneous(int degree, int weight) const;
  std::string to_string(const Graph& g) const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Terms terms_;
};

enum class ComplexVariant { automatic, unreduced, reduced };

/// The variant actually used: reduced unless the graph has isolated vertices.
ComplexVariant resolve_variant(const Graph& g, ComplexVariant v);
const char* variant_name(ComplexVariant v);

/// Least half-edge at every vertex (kNone at isolated vertices).
std::vector<HalfEdgeId> privileged_half_edges(const Graph& g);

/// Basis monomials of bidegree (degree, weight), sorted. For the reduced
/// variant each element (h1 - h0(v1))...(hd - h0(vd)) e^a is listed by its
/// leading monomial h1...hd e^a.
std::vector<Monomial> basis(const Graph& g, int degree, int weight,
                            ComplexVariant variant = ComplexVariant::unreduced);

/// Number of monomials of bidegree (degree, weight), computed without enumeration.
std::uint64_t basis_size(const Graph& g, int degree, int weight, ComplexVariant variant);

/// Sorted basis with a reverse lookup.
class BasisIndex {
 public:
  BasisIndex() = default;
  explicit BasisIndex(std::vector<Monomial> monomials);
  int size() const { return static_cast<int>(monomials_.size()); }
  const Monomial& operator[](int i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Index of m, or -1.
  int find(const Monomial& m) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

/// Differential of the unreduced complex.
Chain boundary(const Graph& g, const Monomial& m);
Chain boundary(const Graph& g, const Chain& c);

/// Differential of the reduced complex on leading-monomial coordinates.
Chain reduced_boundary(const Graph& g, const Monomial& leading);

/// Sparse column-major integer matrix.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;  ///< sorted by row

  IntMatrix to_dense() const;
  std::size_t nonzeros() const;
};

/// Matrix of the differential from bidegree (degree, weight) to (degree - 1, weight).
SparseMatrix boundary_matrix(const Graph& g, int degree, int weight,
                             ComplexVariant variant = ComplexVariant::unreduced);
SparseMatrix boundary_matrix(const Graph& g, const BasisIndex& source, const BasisIndex& target,
                             ComplexVariant variant);

/// Product of monomials with disjoint vertex supports (zero otherwise).
Chain multiply(const Monomial& a, const Monomial& b);
Chain multiply(const Chain& a, const Chain& b);

/// Edge monomial e_1^{a_1} ... (all vertices empty).
Monomial edge_monomial(const Graph& g, const std::vector<int>& exponents);
Monomial edge_monomial(const Graph& g, EdgeId e);
/// Single half-edge state h.
Monomial half_edge_monomial(const Graph& g, HalfEdgeId h);
Monomial occupied_monomial(const Graph& g, VertexId v);

/// Expands leading-monomial coordinates into an unreduced chain.
Chain expand_reduced(const Graph& g, const Chain& leading_coordinates);
/// Leading-monomial coordinates of a chain in the reduced subcomplex;
/// throws PreconditionError for chains outside it. With a modulus p the
/// membership test is made mod p.
Chain restrict_to_reduced(const Graph& g, const Chain& c, int modulus = 0);
bool in_reduced_subcomplex(const Graph& g, const Chain& c, int modulus = 0);

/// All exponent vectors over `num_edges` edges with total `total`, sorted lexicographically.
std::vector<std::vector<int>> exponent_vectors(int num_edges, int total);

}  // namespace braidhom
