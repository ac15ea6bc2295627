#pragma once

#include <string>
#include <vector>

#include "braidhom/integer.hpp"
#include "braidhom/matrix.hpp"

namespace braidhom {

using Element = std::vector<Integer>;

/// Z^n modulo the diagonal relations m_j e_j. Each modulus is 0 (a free
/// coordinate) or at least 2. Homology groups use the layout with torsion
/// coordinates first, in divisibility order, followed by the free ones.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<Integer> moduli);
  static AbelianGroup free(int rank);
  /// Z^rank + sum Z/t with the torsion coordinates first.
  static AbelianGroup from_invariants(int rank, const std::vector<Integer>& torsion);

  int dimension() const { return static_cast<int>(moduli_.size()); }
  const std::vector<Integer>& moduli() const { return moduli_; }
  int rank() const;
  /// Invariant factors of the torsion part (a divisibility chain).
  std::vector<Integer> torsion() const;
  bool is_trivial() const;

  Element zero() const { return Element(moduli_.size()); }
  Element basis_element(int j) const;
  Element normalize(Element x) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Integer& c) const;
  bool is_zero(const Element& x) const;
  void check(const Element& x) const;

  /// "Z^r + Z/d1 + ..." or "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> moduli_;
};

/// Renders Z^rank + Z/t1 + ... ("0" for the trivial group).
std::string render_group(int rank, const std::vector<Integer>& torsion);

/// Subgroup of an AbelianGroup, kept as an echelon basis of its preimage
/// lattice in Z^n (which always contains the relation lattice).
class Subgroup {
 public:
  explicit Subgroup(AbelianGroup parent);
  Subgroup(AbelianGroup parent, const std::vector<Element>& generators);
  static Subgroup whole(AbelianGroup parent);

  const AbelianGroup& parent() const { return parent_; }
  void add(const Element& x);
  bool contains(const Element& x) const;
  bool contains(const Subgroup& other) const;
  bool equals(const Subgroup& other) const { return contains(other) && other.contains(*this); }
  bool is_whole() const;
  bool is_zero() const;

  /// Generators as elements of the parent (nonzero echelon rows).
  std::vector<Element> generators() const;

  /// Invariants of the subgroup itself and of parent / subgroup.
  struct Invariants {
    int rank = 0;
    std::vector<Integer> torsion;
    std::string to_string() const { return render_group(rank, torsion); }
    bool trivial() const { return rank == 0 && torsion.empty(); }
  };
  Invariants structure() const;
  Invariants quotient() const;

  /// this / smaller (smaller must be contained in this), with a generator
  /// for each nontrivial cyclic factor, in the order of the invariants.
  struct Quotient {
    Invariants invariants;
    std::vector<Element> generators;
    std::vector<Integer> orders;  ///< 0 for infinite order
  };
  Quotient quotient_by(const Subgroup& smaller) const;

 private:
  AbelianGroup parent_;
  std::vector<Element> rows_;  ///< rows_[j] has pivot j or is empty
};

/// Homomorphism given by a matrix on the coordinates (targets x sources).
class Homomorphism {
 public:
  Homomorphism(AbelianGroup source, AbelianGroup target, IntMatrix matrix);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Element operator()(const Element& x) const;
  Subgroup image() const;
  Subgroup image_of(const Subgroup& s) const;
  Subgroup kernel() const;
  /// Elements mapping into `s`.
  Subgroup preimage(const Subgroup& s) const;
  Homomorphism compose_after(const Homomorphism& first) const;  ///< this o first
  bool is_identity() const;
  bool is_zero() const;

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  IntMatrix matrix_;
};

}  // namespace braidhom
