#include "braidhom/homology.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <tuple>

#include "braidhom/errors.hpp"
#include "sparse_reduction.hpp"

namespace braidhom {

struct HomologyGroup::Data {
  Graph graph;
  int degree = 0;
  int weight = 0;
  ComplexVariant variant = ComplexVariant::unreduced;
  int modulus = 0;

  BasisIndex basis;
  detail::Reduction red;
  std::vector<int> survivor_pos;  // C_i id -> position in red.survivors, or -1

  // Dense stage (integers only).
  std::vector<int> active;  // survivor positions with a nonzero remaining boundary
  std::vector<int> zero;    // survivor positions with zero boundary
  IntMatrix V, V_inv;
  int r = 0;
  bool has_p = false;
  IntMatrix P, P_inv;
  std::vector<int> kept;  // kernel coordinates that survive (invariant factor != 1)

  AbelianGroup group;
  HomologyStats stats;

  Integer reduce(const Integer& x) const { return modulus ? mod_floor(x, modulus) : x; }
  int kernel_dim() const { return static_cast<int>(active.size()) - r + static_cast<int>(zero.size()); }

  // Survivor coordinates -> kernel coordinates.
  std::vector<Integer> kappa(const std::vector<Integer>& zs) const {
    std::vector<Integer> out(kernel_dim());
    const int na = static_cast<int>(active.size());
    for (int i = r; i < na; ++i) {
      Integer s = 0;
      for (int j = 0; j < na; ++j)
        if (V_inv(i, j) != 0 && zs[active[j]] != 0) s += V_inv(i, j) * zs[active[j]];
      out[i - r] = s;
    }
    for (std::size_t j = 0; j < zero.size(); ++j) out[na - r + j] = zs[zero[j]];
    return out;
  }
};

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <class Ring>
detail::Reduction reduce_window(const Ring& ring, const SparseMatrix& a, const SparseMatrix& b) {
  detail::WindowReducer<Ring> w(ring, a, b);
  return w.run();
}

void dense_stage(HomologyGroup::Data& d) {
  const auto& red = d.red;
  for (int s = 0; s < static_cast<int>(red.survivors.size()); ++s)
    (red.b_columns[s].empty() ? d.zero : d.active).push_back(s);
  const int na = static_cast<int>(d.active.size());
  std::map<int, int> row_index;
  for (int s : d.active)
    for (const auto& [row, x] : red.b_columns[s]) row_index.emplace(row, 0);
  int next = 0;
  for (auto& [row, idx] : row_index) idx = next++;
  IntMatrix bd(next, na);
  for (int j = 0; j < na; ++j)
    for (const auto& [row, x] : red.b_columns[d.active[j]]) bd(row_index[row], j) = x;
  if (na > 0) {
    auto f = smith_normal_form(bd, kRight | kRightInverse);
    d.V = std::move(f.V);
    d.V_inv = std::move(f.V_inv);
    d.r = f.rank;
  }
  d.stats.dense_rows = next;
  d.stats.dense_cols = na;

  const int m = d.kernel_dim();
  std::vector<std::vector<Integer>> xcols;
  for (const auto& col : red.a_columns) {
    std::vector<Integer> zs(red.survivors.size());
    for (const auto& [row, x] : col) {
      const int pos = d.survivor_pos[row];
      if (pos < 0) throw std::logic_error("remaining boundary has an eliminated row");
      zs[pos] = x;
    }
    auto k = d.kappa(zs);
    bool nz = false;
    for (const auto& x : k) nz = nz || x != 0;
    if (nz) xcols.push_back(std::move(k));
  }
  std::vector<Integer> factors(m, 0);
  if (!xcols.empty()) {
    IntMatrix x(m, static_cast<int>(xcols.size()));
    for (std::size_t j = 0; j < xcols.size(); ++j)
      for (int i = 0; i < m; ++i) x(i, static_cast<int>(j)) = xcols[j][i];
    auto f = smith_normal_form(x, kLeft | kLeftInverse);
    d.has_p = true;
    d.P = std::move(f.U);
    d.P_inv = std::move(f.U_inv);
    for (int j = 0; j < f.rank; ++j) factors[j] = f.D(j, j);
    d.stats.dense_rows = std::max<std::size_t>(d.stats.dense_rows, m);
    d.stats.dense_cols = std::max<std::size_t>(d.stats.dense_cols, xcols.size());
  }
  std::vector<Integer> moduli;
  for (int j = 0; j < m; ++j) {
    if (factors[j] == 1) continue;
    d.kept.push_back(j);
    moduli.push_back(factors[j]);
  }
  d.group = AbelianGroup(std::move(moduli));
}

}  // namespace

HomologyGroup compute_homology(const Graph& g, int degree, int weight, ComplexVariant variant, int modulus) {
  if (degree < 0 || weight < 0) throw DomainError("degree and weight must be non-negative");
  if (modulus != 0 && !is_prime(modulus)) throw DomainError("coefficient modulus must be 0 or a prime");
  const auto start = std::chrono::steady_clock::now();
  auto d = std::make_shared<HomologyGroup::Data>();
  d->graph = g;
  d->degree = degree;
  d->weight = weight;
  d->variant = resolve_variant(g, variant);
  d->modulus = modulus;

  BasisIndex above(basis(g, degree + 1, weight, d->variant));
  d->basis = BasisIndex(basis(g, degree, weight, d->variant));
  BasisIndex below(basis(g, degree - 1, weight, d->variant));
  SparseMatrix a = boundary_matrix(g, above, d->basis, d->variant);
  SparseMatrix b = boundary_matrix(g, d->basis, below, d->variant);
  d->stats.dim_above = above.size();
  d->stats.dim_chain = d->basis.size();
  d->stats.dim_below = below.size();

  if (modulus) {
    d->red = reduce_window(detail::ModPRing{modulus}, a, b);
  } else {
    try {
      d->red = reduce_window(detail::CheckedInt64Ring{}, a, b);
    } catch (const detail::Overflow&) {
      d->stats.big_integers = true;
      d->red = reduce_window(detail::BigIntRing{}, a, b);
    }
  }
  d->stats.pivots = d->red.steps.size();
  d->survivor_pos.assign(d->basis.size(), -1);
  for (int s = 0; s < static_cast<int>(d->red.survivors.size()); ++s) d->survivor_pos[d->red.survivors[s]] = s;

  if (modulus) {
    for (const auto& c : d->red.b_columns)
      if (!c.empty()) throw std::logic_error("field reduction left a nonzero boundary");
    if (!d->red.a_columns.empty()) throw std::logic_error("field reduction left a nonzero boundary");
    const int n = static_cast<int>(d->red.survivors.size());
    for (int s = 0; s < n; ++s) d->zero.push_back(s);
    for (int j = 0; j < n; ++j) d->kept.push_back(j);
    d->group = AbelianGroup(std::vector<Integer>(n, modulus));
  } else {
    dense_stage(*d);
  }
  d->stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return HomologyGroup(std::move(d));
}

const Graph& HomologyGroup::graph() const { return d_->graph; }
int HomologyGroup::degree() const { return d_->degree; }
int HomologyGroup::weight() const { return d_->weight; }
ComplexVariant HomologyGroup::variant() const { return d_->variant; }
int HomologyGroup::modulus() const { return d_->modulus; }
const AbelianGroup& HomologyGroup::group() const { return d_->group; }
const HomologyStats& HomologyGroup::stats() const { return d_->stats; }

bool HomologyGroup::is_cycle(const Chain& c) const {
  if (!c.is_homogeneous(d_->degree, d_->weight)) return false;
  Chain bd = boundary(d_->graph, c);
  if (d_->modulus) bd = bd.reduced_mod(d_->modulus);
  return bd.is_zero();
}

Element HomologyGroup::coordinates(const Chain& cycle) const {
  const Data& d = *d_;
  Chain c = d.modulus ? cycle.reduced_mod(d.modulus) : cycle;
  for (const auto& [m, x] : c.terms())
    if (m.state.size() != static_cast<std::size_t>(d.graph.num_vertices()) ||
        m.exponent.size() != static_cast<std::size_t>(d.graph.num_edges()))
      throw DomainError("chain belongs to a different graph");
  if (!c.is_homogeneous(d.degree, d.weight)) throw PreconditionError("chain has the wrong bidegree");
  if (!is_cycle(c)) throw PreconditionError("chain is not a cycle");
  if (d.variant == ComplexVariant::reduced) c = restrict_to_reduced(d.graph, c, d.modulus);

  std::vector<Integer> z(d.basis.size());
  for (const auto& [m, x] : c.terms()) {
    const int i = d.basis.find(m);
    if (i < 0) throw PreconditionError("chain has a term outside the complex");
    z[i] = x;
  }
  for (const auto& s : d.red.steps) {
    if (s.in_b) {
      z[s.a] = 0;
      continue;
    }
    if (z[s.a] == 0) continue;
    const Integer f = z[s.a] * s.pivot_inverse;
    for (const auto& [row, v] : s.snapshot) z[row] = d.reduce(z[row] - f * v);
    z[s.a] = 0;
  }
  std::vector<Integer> zs(d.red.survivors.size());
  for (std::size_t s = 0; s < zs.size(); ++s) zs[s] = z[d.red.survivors[s]];

  Element out(d.group.dimension());
  if (d.modulus) {
    for (std::size_t j = 0; j < zs.size(); ++j) out[j] = zs[j];
    return d.group.normalize(std::move(out));
  }
  auto k = d.kappa(zs);
  if (d.has_p) k = d.P.apply(k);
  for (std::size_t j = 0; j < d.kept.size(); ++j) out[j] = k[d.kept[j]];
  return d.group.normalize(std::move(out));
}

Chain HomologyGroup::representative(int j) const {
  const Data& d = *d_;
  if (j < 0 || j >= d.group.dimension()) throw LookupError("homology basis index out of range");
  const int kj = d.kept[j];
  std::vector<Integer> e(d.kernel_dim());
  if (d.has_p)
    for (int i = 0; i < d.kernel_dim(); ++i) e[i] = d.P_inv(i, kj);
  else
    e[kj] = 1;
  std::vector<Integer> x(d.basis.size());
  const int na = static_cast<int>(d.active.size());
  for (int i = 0; i < na; ++i) {
    Integer s = 0;
    for (int t = d.r; t < na; ++t)
      if (d.V(i, t) != 0 && e[t - d.r] != 0) s += d.V(i, t) * e[t - d.r];
    x[d.red.survivors[d.active[i]]] = s;
  }
  for (std::size_t t = 0; t < d.zero.size(); ++t) x[d.red.survivors[d.zero[t]]] = e[na - d.r + t];
  for (auto it = d.red.steps.rbegin(); it != d.red.steps.rend(); ++it) {
    if (!it->in_b) continue;
    Integer s = 0;
    for (const auto& [c, v] : it->snapshot)
      if (x[c] != 0) s += x[c] * v;
    x[it->a] = d.reduce(-s * it->pivot_inverse);
  }
  Chain lead;
  for (int i = 0; i < d.basis.size(); ++i) lead.add(d.basis[i], d.reduce(x[i]));
  Chain out = d.variant == ComplexVariant::reduced ? expand_reduced(d.graph, lead) : lead;
  return d.modulus ? out.reduced_mod(d.modulus) : out;
}

std::vector<Chain> HomologyGroup::representatives() const {
  std::vector<Chain> out;
  for (int j = 0; j < group().dimension(); ++j) out.push_back(representative(j));
  return out;
}

// -------------------------------------------------------------------- Memo

namespace {

using MemoKey = std::tuple<std::string, int, int, int, int>;

struct Memo {
  std::mutex mutex;
  std::map<MemoKey, std::shared_ptr<const HomologyGroup>> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace

std::shared_ptr<const HomologyGroup> homology(const Graph& g, int degree, int weight, ComplexVariant variant,
                                              int modulus) {
  const ComplexVariant v = resolve_variant(g, variant);
  MemoKey key{g.incidence_key(), degree, weight, static_cast<int>(v), modulus};
  Memo& m = memo();
  {
    std::lock_guard lock(m.mutex);
    if (auto it = m.table.find(key); it != m.table.end()) return it->second;
  }
  auto h = std::make_shared<const HomologyGroup>(compute_homology(g, degree, weight, v, modulus));
  std::lock_guard lock(m.mutex);
  return m.table.emplace(key, h).first->second;
}

void clear_homology_cache() {
  std::lock_guard lock(memo().mutex);
  memo().table.clear();
}

std::size_t homology_cache_size() {
  std::lock_guard lock(memo().mutex);
  return memo().table.size();
}

Homomorphism induced_map(const std::function<Chain(const Chain&)>& f, const HomologyGroup& source,
                         const HomologyGroup& target) {
  if (source.modulus() != target.modulus()) throw DomainError("homology groups over different coefficients");
  const int ns = source.group().dimension(), nt = target.group().dimension();
  IntMatrix m(nt, ns);
  for (int j = 0; j < ns; ++j) {
    Element c = target.coordinates(f(source.representative(j)));
    for (int i = 0; i < nt; ++i) m(i, j) = c[i];
  }
  return Homomorphism(source.group(), target.group(), std::move(m));
}

Homomorphism induced_map(const ChainMap& f, const HomologyGroup& source, const HomologyGroup& target) {
  if (!(f.source().incidence_key() == source.graph().incidence_key()) ||
      !(f.target().incidence_key() == target.graph().incidence_key()))
    throw DomainError("chain map does not match the homology groups");
  return induced_map([&f](const Chain& c) { return f(c); }, source, target);
}

std::vector<int> betti_numbers(const Graph& g, int weight, int modulus) {
  std::vector<int> out;
  const int top = std::min(weight, g.num_vertices());
  for (int i = 0; i <= top; ++i) {
    auto h = homology(g, i, weight, ComplexVariant::automatic, modulus);
    out.push_back(modulus ? h->group().dimension() : h->rank());
  }
  return out;
}

}  // namespace braidhom
