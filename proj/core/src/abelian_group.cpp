#include "braidhom/abelian_group.hpp"

#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

AbelianGroup::AbelianGroup(std::vector<Integer> moduli) : moduli_(std::move(moduli)) {
  for (const auto& m : moduli_)
    if (m < 0 || m == 1) throw DomainError("group modulus must be 0 or at least 2");
}

AbelianGroup AbelianGroup::free(int rank) { return AbelianGroup(std::vector<Integer>(rank)); }

AbelianGroup AbelianGroup::from_invariants(int rank, const std::vector<Integer>& torsion) {
  std::vector<Integer> m = torsion;
  m.resize(torsion.size() + rank);
  return AbelianGroup(std::move(m));
}

int AbelianGroup::rank() const {
  int r = 0;
  for (const auto& m : moduli_) r += m == 0;
  return r;
}

std::vector<Integer> AbelianGroup::torsion() const {
  std::vector<Integer> t;
  for (const auto& m : moduli_)
    if (m != 0) t.push_back(m);
  bool chain = true;
  for (std::size_t i = 1; i < t.size(); ++i) chain = chain && t[i] % t[i - 1] == 0;
  if (chain) return t;
  // General moduli: take the Smith form of the diagonal.
  IntMatrix d(static_cast<int>(t.size()), static_cast<int>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) d(i, i) = t[i];
  std::vector<Integer> out;
  for (auto& f : smith_normal_form(d, kNoTransforms).invariant_factors())
    if (f != 1) out.push_back(f);
  return out;
}

bool AbelianGroup::is_trivial() const { return rank() == 0 && torsion().empty(); }

Element AbelianGroup::basis_element(int j) const {
  if (j < 0 || j >= dimension()) throw LookupError("basis index out of range");
  Element e = zero();
  e[j] = 1;
  return normalize(std::move(e));
}

Element AbelianGroup::normalize(Element x) const {
  check(x);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (moduli_[j] != 0) x[j] = mod_floor(x[j], moduli_[j]);
  return x;
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
  return normalize(std::move(s));
}

Element AbelianGroup::scale(const Element& a, const Integer& c) const {
  check(a);
  Element s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] * c;
  return normalize(std::move(s));
}

bool AbelianGroup::is_zero(const Element& x) const {
  check(x);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (moduli_[j] == 0 ? x[j] != 0 : x[j] % moduli_[j] != 0) return false;
  }
  return true;
}

void AbelianGroup::check(const Element& x) const {
  if (x.size() != moduli_.size()) throw DomainError("element has the wrong dimension");
}

std::string AbelianGroup::to_string() const { return render_group(rank(), torsion()); }

std::string render_group(int rank, const std::vector<Integer>& torsion) {
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(AbelianGroup parent) : parent_(std::move(parent)), rows_(parent_.dimension()) {
  const int n = parent_.dimension();
  for (int j = 0; j < n; ++j) {
    if (parent_.moduli()[j] == 0) continue;
    Element r(n);
    r[j] = parent_.moduli()[j];
    rows_[j] = std::move(r);
  }
}

Subgroup::Subgroup(AbelianGroup parent, const std::vector<Element>& generators) : Subgroup(std::move(parent)) {
  for (const auto& g : generators) add(g);
}

Subgroup Subgroup::whole(AbelianGroup parent) {
  Subgroup s(std::move(parent));
  for (int j = 0; j < s.parent_.dimension(); ++j) s.add(s.parent_.basis_element(j));
  return s;
}

namespace {

// v -= q * r
void sub_multiple(Element& v, const Element& r, const Integer& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (r[k] != 0) v[k] -= q * r[k];
}

}  // namespace

void Subgroup::add(const Element& x) {
  parent_.check(x);
  const int n = parent_.dimension();
  const auto& mod = parent_.moduli();
  Element v = x;
  auto reduce_tail = [&](Element& w, int from) {
    for (int k = from; k < n; ++k)
      if (mod[k] != 0) w[k] = mod_floor(w[k], mod[k]);
  };
  reduce_tail(v, 0);
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    if (rows_[j].empty()) {
      if (v[j] < 0)
        for (auto& c : v) c = -c;
      reduce_tail(v, j + 1);
      rows_[j] = std::move(v);
      return;
    }
    Element& r = rows_[j];
    if (v[j] % r[j] == 0) {
      sub_multiple(v, r, v[j] / r[j]);
      reduce_tail(v, j + 1);
      continue;
    }
    auto [g, s, t] = extended_gcd(r[j], v[j]);
    Element nr(n), nv(n);
    const Integer a = r[j] / g, b = v[j] / g;
    for (int k = 0; k < n; ++k) {
      nr[k] = s * r[k] + t * v[k];
      nv[k] = a * v[k] - b * r[k];
    }
    if (nr[j] < 0)
      for (auto& c : nr) c = -c;
    reduce_tail(nr, j + 1);
    reduce_tail(nv, j + 1);
    r = std::move(nr);
    v = std::move(nv);
  }
}

bool Subgroup::contains(const Element& x) const {
  parent_.check(x);
  Element v = x;
  const int n = parent_.dimension();
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    if (rows_[j].empty() || v[j] % rows_[j][j] != 0) return false;
    sub_multiple(v, rows_[j], v[j] / rows_[j][j]);
  }
  return true;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (!(other.parent_ == parent_)) throw DomainError("subgroups of different groups");
  for (const auto& r : other.rows_)
    if (!r.empty() && !contains(r)) return false;
  return true;
}

bool Subgroup::is_whole() const {
  for (int j = 0; j < parent_.dimension(); ++j)
    if (rows_[j].empty() || rows_[j][j] != 1) return false;
  return true;
}

bool Subgroup::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty() && !parent_.is_zero(r)) return false;
  return true;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  for (const auto& r : rows_) {
    if (r.empty() || parent_.is_zero(r)) continue;
    out.push_back(parent_.normalize(r));
  }
  return out;
}

namespace {

// Coordinates of a lattice vector in an echelon basis (rows_ indexed by pivot).
std::vector<Integer> echelon_coordinates(const std::vector<Element>& rows, const std::vector<int>& pivots,
                                         Element v) {
  std::vector<Integer> c(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const int j = pivots[i];
    if (v[j] == 0) continue;
    if (v[j] % rows[j][j] != 0) throw DomainError("vector outside the lattice");
    c[i] = v[j] / rows[j][j];
    sub_multiple(v, rows[j], c[i]);
  }
  for (const auto& x : v)
    if (x != 0) throw DomainError("vector outside the lattice");
  return c;
}

std::vector<int> pivot_list(const std::vector<Element>& rows) {
  std::vector<int> p;
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (!rows[j].empty()) p.push_back(static_cast<int>(j));
  return p;
}

Subgroup::Invariants invariants_of(const IntMatrix& relations, int generators) {
  Subgroup::Invariants inv;
  auto f = smith_normal_form(relations, kNoTransforms);
  inv.rank = generators - f.rank;
  for (auto& d : f.invariant_factors())
    if (d != 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace

Subgroup::Invariants Subgroup::structure() const {
  auto piv = pivot_list(rows_);
  const int n = parent_.dimension();
  std::vector<std::vector<Integer>> rel;
  for (int j = 0; j < n; ++j) {
    if (parent_.moduli()[j] == 0) continue;
    Element r(n);
    r[j] = parent_.moduli()[j];
    rel.push_back(echelon_coordinates(rows_, piv, r));
  }
  IntMatrix c(static_cast<int>(rel.size()), static_cast<int>(piv.size()));
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < piv.size(); ++j) c(i, j) = rel[i][j];
  return invariants_of(c, static_cast<int>(piv.size()));
}

Subgroup::Invariants Subgroup::quotient() const {
  auto piv = pivot_list(rows_);
  const int n = parent_.dimension();
  IntMatrix b(static_cast<int>(piv.size()), n);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int k = 0; k < n; ++k) b(i, k) = rows_[piv[i]][k];
  return invariants_of(b, n);
}

Subgroup::Quotient Subgroup::quotient_by(const Subgroup& smaller) const {
  if (!contains(smaller)) throw PreconditionError("quotient by a subgroup that is not contained");
  auto piv = pivot_list(rows_);
  auto spiv = pivot_list(smaller.rows_);
  const int l = static_cast<int>(piv.size());
  IntMatrix c(static_cast<int>(spiv.size()), l);
  for (std::size_t i = 0; i < spiv.size(); ++i) {
    auto coords = echelon_coordinates(rows_, piv, smaller.rows_[spiv[i]]);
    for (int j = 0; j < l; ++j) c(i, j) = coords[j];
  }
  auto f = smith_normal_form(c, kRightInverse);
  Quotient q;
  const int n = parent_.dimension();
  for (int j = 0; j < l; ++j) {
    Integer d = j < f.rank ? f.D(j, j) : Integer(0);
    if (d == 1) continue;
    Element g(n);
    for (int i = 0; i < l; ++i) {
      if (f.V_inv(j, i) == 0) continue;
      for (int k = 0; k < n; ++k) g[k] += f.V_inv(j, i) * rows_[piv[i]][k];
    }
    q.generators.push_back(parent_.normalize(std::move(g)));
    q.orders.push_back(d);
    if (d == 0)
      ++q.invariants.rank;
    else
      q.invariants.torsion.push_back(d);
  }
  return q;
}

// ------------------------------------------------------------ Homomorphism

Homomorphism::Homomorphism(AbelianGroup source, AbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension())
    throw DomainError("homomorphism matrix has the wrong shape");
  for (int j = 0; j < source_.dimension(); ++j) {
    const Integer& m = source_.moduli()[j];
    if (m == 0) continue;
    Element img(target_.dimension());
    for (int i = 0; i < target_.dimension(); ++i) img[i] = matrix_(i, j) * m;
    if (!target_.is_zero(img)) throw DomainError("matrix does not respect the torsion relations");
  }
}

Element Homomorphism::operator()(const Element& x) const {
  source_.check(x);
  return target_.normalize(matrix_.apply(x));
}

Subgroup Homomorphism::image() const {
  std::vector<Element> gens;
  for (int j = 0; j < source_.dimension(); ++j) {
    Element c(target_.dimension());
    for (int i = 0; i < target_.dimension(); ++i) c[i] = matrix_(i, j);
    gens.push_back(std::move(c));
  }
  return Subgroup(target_, gens);
}

Subgroup Homomorphism::image_of(const Subgroup& s) const {
  if (!(s.parent() == source_)) throw DomainError("subgroup of a different group");
  std::vector<Element> gens;
  for (const auto& g : s.generators()) gens.push_back(matrix_.apply(g));
  return Subgroup(target_, gens);
}

Subgroup Homomorphism::kernel() const { return preimage(Subgroup(target_)); }

Subgroup Homomorphism::preimage(const Subgroup& s) const {
  if (!(s.parent() == target_)) throw DomainError("subgroup of a different group");
  // x with F x in the lattice of s: kernel of [F | -B^T].
  std::vector<Element> basis;
  for (const auto& g : s.generators()) basis.push_back(g);
  for (int j = 0; j < target_.dimension(); ++j) {
    if (target_.moduli()[j] == 0) continue;
    Element r(target_.dimension());
    r[j] = target_.moduli()[j];
    basis.push_back(std::move(r));
  }
  const int ns = source_.dimension(), nt = target_.dimension(), l = static_cast<int>(basis.size());
  IntMatrix m(nt, ns + l);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < ns; ++j) m(i, j) = matrix_(i, j);
    for (int j = 0; j < l; ++j) m(i, ns + j) = -basis[j][i];
  }
  IntMatrix k = integer_kernel(m);
  std::vector<Element> gens;
  for (int c = 0; c < k.cols(); ++c) {
    Element x(ns);
    for (int i = 0; i < ns; ++i) x[i] = k(i, c);
    gens.push_back(std::move(x));
  }
  return Subgroup(source_, gens);
}

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
  if (!(first.target_ == source_)) throw DomainError("homomorphisms do not compose");
  return Homomorphism(first.source_, target_, matrix_ * first.matrix_);
}

bool Homomorphism::is_identity() const {
  if (!(source_ == target_)) return false;
  for (int j = 0; j < source_.dimension(); ++j) {
    Element d(target_.dimension());
    for (int i = 0; i < target_.dimension(); ++i) d[i] = matrix_(i, j) - (i == j ? 1 : 0);
    if (!target_.is_zero(d)) return false;
  }
  return true;
}

bool Homomorphism::is_zero() const {
  for (int j = 0; j < source_.dimension(); ++j) {
    Element d(target_.dimension());
    for (int i = 0; i < target_.dimension(); ++i) d[i] = matrix_(i, j);
    if (!target_.is_zero(d)) return false;
  }
  return true;
}

}  // namespace braidhom
