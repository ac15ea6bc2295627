#include "braidhom/chain.hpp"

#include <sstream>
#include <stdexcept>

#include "braidhom/errors.hpp"

namespace braidhom {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(const Graph& g) {
  return Monomial{std::vector<int>(g.num_vertices(), kEmpty), std::vector<int>(g.num_edges(), 0)};
}

int Monomial::degree() const {
  int d = 0;
  for (int s : state) d += s >= 0;
  return d;
}

int Monomial::weight() const {
  int w = 0;
  for (int s : state) w += s != kEmpty;
  for (int a : exponent) w += a;
  return w;
}

int Monomial::degree_before(VertexId v) const {
  int d = 0;
  for (VertexId u = 0; u < v; ++u) d += state[u] >= 0;
  return d;
}

std::string Monomial::to_string(const Graph& g) const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "*";
    first = false;
  };
  for (VertexId v = 0; v < static_cast<VertexId>(state.size()); ++v) {
    if (state[v] == kEmpty) continue;
    sep();
    if (state[v] == kOccupied)
      os << g.vertex_name(v);
    else
      os << "h[" << g.half_edge_name(state[v]) << "]";
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(exponent.size()); ++e) {
    if (exponent[e] == 0) continue;
    sep();
    os << g.edge_name(e);
    if (exponent[e] > 1) os << "^" << exponent[e];
  }
  if (first) return "1";
  return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&](int x) {
    h ^= static_cast<std::size_t>(x + 3);
    h *= 1099511628211ull;
  };
  for (int s : m.state) mix(s);
  mix(-7);
  for (int a : m.exponent) mix(a);
  return h;
}

// ------------------------------------------------------------------- Chain

void Chain::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Chain& Chain::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Integer Chain::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Chain Chain::reduced_mod(int p) const {
  Chain out;
  for (const auto& [m, c] : terms_) out.add(m, mod_floor(c, p));
  return out;
}

std::pair<int, int> Chain::bidegree() const {
  if (terms_.empty()) throw PreconditionError("the zero chain has no bidegree");
  const auto& m0 = terms_.begin()->first;
  std::pair<int, int> b{m0.degree(), m0.weight()};
  for (const auto& [m, c] : terms_)
    if (m.degree() != b.first || m.weight() != b.second) throw PreconditionError("chain is not homogeneous");
  return b;
}

bool Chain::is_homogeneous(int degree, int weight) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != degree || m.weight() != weight) return false;
  return true;
}

std::string Chain::to_string(const Graph& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer a = c;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = abs(a);
    if (a != 1) os << a << "*";
    os << m.to_string(g);
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ Basis

ComplexVariant resolve_variant(const Graph& g, ComplexVariant v) {
  if (v == ComplexVariant::automatic)
    return g.has_isolated_vertices() ? ComplexVariant::unreduced : ComplexVariant::reduced;
  if (v == ComplexVariant::reduced && g.has_isolated_vertices())
    throw UnsupportedGraphError("the reduced complex needs a graph without isolated vertices");
  return v;
}

const char* variant_name(ComplexVariant v) {
  switch (v) {
    case ComplexVariant::automatic:
      return "automatic";
    case ComplexVariant::unreduced:
      return "unreduced";
    case ComplexVariant::reduced:
      return "reduced";
  }
  return "?";
}

std::vector<HalfEdgeId> privileged_half_edges(const Graph& g) {
  std::vector<HalfEdgeId> h0(g.num_vertices(), kNone);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) > 0) h0[v] = g.half_edges_at(v).front();
  return h0;
}

std::vector<std::vector<int>> exponent_vectors(int num_edges, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  if (num_edges == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(num_edges, 0);
  // Lexicographic order: the first coordinate varies slowest.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == num_edges - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
    cur[i] = 0;
  };
  rec(rec, 0, total);
  return out;
}

namespace {

std::vector<std::vector<int>> vertex_state_options(const Graph& g, bool reduced) {
  std::vector<std::vector<int>> opts(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    opts[v].push_back(kEmpty);
    if (!reduced) opts[v].push_back(kOccupied);
    const auto& hs = g.half_edges_at(v);
    for (std::size_t i = reduced ? 1 : 0; i < hs.size(); ++i) opts[v].push_back(hs[i]);
  }
  return opts;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Monomial> basis(const Graph& g, int degree, int weight, ComplexVariant variant) {
  variant = resolve_variant(g, variant);
  std::vector<Monomial> out;
  if (degree < 0 || weight < 0 || degree > weight) return out;
  const bool reduced = variant == ComplexVariant::reduced;
  const auto opts = vertex_state_options(g, reduced);
  const int n = g.num_vertices();
  std::vector<int> state(n, kEmpty);
  // States are visited in increasing lexicographic order, so the output is sorted.
  auto rec = [&](auto&& self, int v, int deg, int used) -> void {
    if (deg > degree || used > weight) return;
    if (v == n) {
      if (deg != degree) return;
      const int left = weight - used;
      for (auto& e : exponent_vectors(g.num_edges(), left)) out.push_back(Monomial{state, std::move(e)});
      return;
    }
    for (int s : opts[v]) {
      state[v] = s;
      self(self, v + 1, deg + (s >= 0), used + (s != kEmpty));
    }
    state[v] = kEmpty;
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::uint64_t basis_size(const Graph& g, int degree, int weight, ComplexVariant variant) {
  variant = resolve_variant(g, variant);
  if (degree < 0 || weight < 0 || degree > weight) return 0;
  const bool reduced = variant == ComplexVariant::reduced;
  // ways[d][s]: choices of states with d half-edges and s nonempty vertices.
  std::vector<std::vector<std::uint64_t>> ways(degree + 1, std::vector<std::uint64_t>(weight + 1, 0));
  ways[0][0] = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t occ = reduced ? 0 : 1;
    const std::uint64_t hal = reduced ? std::max(0, g.valence(v) - 1) : g.valence(v);
    auto next = ways;
    for (int d = 0; d <= degree; ++d)
      for (int s = 0; s <= weight; ++s) {
        if (!ways[d][s]) continue;
        if (s + 1 <= weight) {
          next[d][s + 1] += ways[d][s] * occ;
          if (d + 1 <= degree) next[d + 1][s + 1] += ways[d][s] * hal;
        }
      }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  const int E = g.num_edges();
  for (int s = 0; s <= weight; ++s) {
    const int left = weight - s;
    std::uint64_t edges = E == 0 ? (left == 0 ? 1 : 0) : binomial(left + E - 1, E - 1);
    total += ways[degree][s] * edges;
  }
  return total;
}

BasisIndex::BasisIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (int i = 0; i < static_cast<int>(monomials_.size()); ++i) index_.emplace(monomials_[i], i);
}

int BasisIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

// ------------------------------------------------------------- Differentials

namespace {

template <class Emit>
void boundary_terms(const Graph& g, const Monomial& m, Emit&& emit) {
  int sign = 1;
  Monomial t = m;
  for (VertexId v = 0; v < static_cast<VertexId>(m.state.size()); ++v) {
    const int h = m.state[v];
    if (h < 0) continue;
    const EdgeId e = Graph::edge_of(h);
    t.state[v] = kEmpty;
    t.exponent[e] += 1;
    emit(t, sign);
    t.exponent[e] -= 1;
    t.state[v] = kOccupied;
    emit(t, -sign);
    t.state[v] = h;
    sign = -sign;
  }
  (void)g;
}

template <class Emit>
void reduced_boundary_terms(const std::vector<HalfEdgeId>& h0, const Monomial& m, Emit&& emit) {
  int sign = 1;
  Monomial t = m;
  for (VertexId v = 0; v < static_cast<VertexId>(m.state.size()); ++v) {
    const int h = m.state[v];
    if (h < 0) continue;
    const EdgeId e = Graph::edge_of(h), e0 = Graph::edge_of(h0[v]);
    t.state[v] = kEmpty;
    // e(h) - e(h0) cancels when both half-edges belong to one self-loop.
    if (e != e0) {
      t.exponent[e] += 1;
      emit(t, sign);
      t.exponent[e] -= 1;
      t.exponent[e0] += 1;
      emit(t, -sign);
      t.exponent[e0] -= 1;
    }
    t.state[v] = h;
    sign = -sign;
  }
}

}  // namespace

Chain boundary(const Graph& g, const Monomial& m) {
  Chain out;
  boundary_terms(g, m, [&](const Monomial& t, int s) { out.add(t, s); });
  return out;
}

Chain boundary(const Graph& g, const Chain& c) {
  Chain out;
  for (const auto& [m, x] : c.terms()) boundary_terms(g, m, [&](const Monomial& t, int s) { out.add(t, x * s); });
  return out;
}

Chain reduced_boundary(const Graph& g, const Monomial& leading) {
  Chain out;
  reduced_boundary_terms(privileged_half_edges(g), leading, [&](const Monomial& t, int s) { out.add(t, s); });
  return out;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (auto [r, x] : columns[c]) m(r, c) = x;
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

SparseMatrix boundary_matrix(const Graph& g, int degree, int weight, ComplexVariant variant) {
  variant = resolve_variant(g, variant);
  BasisIndex src(basis(g, degree, weight, variant));
  BasisIndex dst(basis(g, degree - 1, weight, variant));
  return boundary_matrix(g, src, dst, variant);
}

SparseMatrix boundary_matrix(const Graph& g, const BasisIndex& source, const BasisIndex& target,
                             ComplexVariant variant) {
  variant = resolve_variant(g, variant);
  SparseMatrix out;
  out.rows = target.size();
  out.cols = source.size();
  out.columns.resize(source.size());
  const auto h0 = privileged_half_edges(g);
  for (int j = 0; j < source.size(); ++j) {
    std::map<int, std::int64_t> col;
    auto emit = [&](const Monomial& t, int s) {
      int i = target.find(t);
      if (i < 0) throw std::logic_error("boundary term outside the target basis");
      col[i] += s;
    };
    if (variant == ComplexVariant::reduced)
      reduced_boundary_terms(h0, source[j], emit);
    else
      boundary_terms(g, source[j], emit);
    for (auto [i, x] : col)
      if (x != 0) out.columns[j].emplace_back(i, x);
  }
  return out;
}

// ----------------------------------------------------------------- Products

Chain multiply(const Monomial& a, const Monomial& b) {
  if (a.state.size() != b.state.size() || a.exponent.size() != b.exponent.size())
    throw DomainError("monomials of different graphs");
  Monomial p = a;
  int later_in_a = 0;  // half-edge states of a at vertices below the current one
  int swaps = 0;
  int deg_a = a.degree();
  for (std::size_t v = 0; v < a.state.size(); ++v) {
    if (a.state[v] != kEmpty && b.state[v] != kEmpty) return Chain();
    if (a.state[v] >= 0) ++later_in_a;
    if (b.state[v] >= 0) swaps += deg_a - later_in_a;
    if (b.state[v] != kEmpty) p.state[v] = b.state[v];
  }
  for (std::size_t e = 0; e < a.exponent.size(); ++e) p.exponent[e] += b.exponent[e];
  return Chain(p, swaps % 2 ? -1 : 1);
}

Chain multiply(const Chain& a, const Chain& b) {
  Chain out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Chain p = multiply(ma, mb);
      if (p.is_zero()) continue;
      const auto& [m, s] = *p.terms().begin();
      out.add(m, s * ca * cb);
    }
  return out;
}

Monomial edge_monomial(const Graph& g, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != g.num_edges()) throw DomainError("exponent vector has the wrong length");
  Monomial m = Monomial::unit(g);
  m.exponent = exponents;
  return m;
}

Monomial edge_monomial(const Graph& g, EdgeId e) {
  g.check_edge(e);
  Monomial m = Monomial::unit(g);
  m.exponent[e] = 1;
  return m;
}

Monomial half_edge_monomial(const Graph& g, HalfEdgeId h) {
  g.check_half_edge(h);
  Monomial m = Monomial::unit(g);
  m.state[g.vertex_of(h)] = h;
  return m;
}

Monomial occupied_monomial(const Graph& g, VertexId v) {
  g.check_vertex(v);
  Monomial m = Monomial::unit(g);
  m.state[v] = kOccupied;
  return m;
}

// ------------------------------------------------------- Reduced subcomplex

Chain expand_reduced(const Graph& g, const Chain& leading_coordinates) {
  const auto h0 = privileged_half_edges(g);
  Chain out;
  for (const auto& [m, c] : leading_coordinates.terms()) {
    std::vector<VertexId> at;
    for (VertexId v = 0; v < static_cast<VertexId>(m.state.size()); ++v) {
      if (m.state[v] == kOccupied || (m.state[v] >= 0 && m.state[v] == h0[v]))
        throw DomainError("monomial is not a reduced leading monomial");
      if (m.state[v] >= 0) at.push_back(v);
    }
    const std::size_t d = at.size();
    Monomial t = m;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      int parity = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const bool swap = (mask >> i) & 1;
        t.state[at[i]] = swap ? h0[at[i]] : m.state[at[i]];
        parity ^= swap;
      }
      out.add(t, parity ? -c : c);
    }
  }
  return out;
}

Chain restrict_to_reduced(const Graph& g, const Chain& c, int modulus) {
  const auto h0 = privileged_half_edges(g);
  Chain lead;
  for (const auto& [m, x] : c.terms()) {
    bool leading = true;
    for (VertexId v = 0; v < static_cast<VertexId>(m.state.size()) && leading; ++v)
      leading = m.state[v] != kOccupied && !(m.state[v] >= 0 && m.state[v] == h0[v]);
    if (leading) lead.add(m, x);
  }
  Chain diff = expand_reduced(g, lead) - c;
  if (modulus) diff = diff.reduced_mod(modulus);
  if (!diff.is_zero()) throw PreconditionError("chain does not lie in the reduced subcomplex");
  return lead;
}

bool in_reduced_subcomplex(const Graph& g, const Chain& c, int modulus) {
  try {
    restrict_to_reduced(g, c, modulus);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace braidhom
