#include "braidhom/classes.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "braidhom/errors.hpp"
#include "braidhom/homology.hpp"

namespace braidhom {

const char* kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::loop:
      return "loop";
    case ClassKind::star:
      return "star";
    case ClassKind::theta:
      return "theta";
    case ClassKind::external_product:
      return "product";
    case ClassKind::stabilized:
      return "stabilized";
  }
  return "?";
}

namespace {

void require_cycle(const Graph& g, const GeneratorClass& c) {
  if (!boundary(g, c.chain).is_zero()) throw std::logic_error(std::string(kind_name(c.kind)) + " chain is not a cycle");
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string half_edge_label(const Graph& g, HalfEdgeId h) {
  return g.half_edge_name(h);
}

}  // namespace

GeneratorClass loop_cycle(const Graph& g, const Cycle& cycle) {
  const std::size_t L = cycle.half_edges.size();
  if (L == 0 || cycle.vertices.size() != L) throw PreconditionError("empty or malformed cycle");
  for (std::size_t j = 0; j < L; ++j) {
    g.check_half_edge(cycle.half_edges[j]);
    if (g.vertex_of(cycle.half_edges[j]) != cycle.vertices[j] ||
        g.other_end(cycle.half_edges[j]) != cycle.vertices[(j + 1) % L])
      throw PreconditionError("half-edges do not traverse the cycle");
  }
  GeneratorClass c;
  c.kind = ClassKind::loop;
  c.degree = 1;
  c.weight = 1;
  for (std::size_t j = 0; j < L; ++j) {
    const HalfEdgeId out = cycle.half_edges[j];
    const HalfEdgeId in = Graph::opposite(cycle.half_edges[(j + L - 1) % L]);
    c.chain.add(half_edge_monomial(g, out), 1);
    c.chain.add(half_edge_monomial(g, in), -1);
  }
  c.support_vertices = sorted_unique(cycle.vertices);
  c.support_edges = sorted_unique(cycle.edges);
  std::ostringstream os;
  os << "loop(";
  for (std::size_t j = 0; j < L; ++j) os << (j ? "," : "") << g.vertex_name(cycle.vertices[j]);
  os << ")";
  c.provenance = os.str();
  require_cycle(g, c);
  return c;
}

bool is_rigid_star(const Graph& g, HalfEdgeId h1, HalfEdgeId h2, HalfEdgeId h3) {
  const VertexId v = g.vertex_of(h1);
  auto ex = explode(g, v);
  const auto comp = ex.graph.component_of_vertex();
  // Exploded leaves follow the survivors, in half-edge order.
  const auto& hs = g.half_edges_at(v);
  auto leaf = [&](HalfEdgeId h) {
    const int pos = static_cast<int>(std::find(hs.begin(), hs.end(), h) - hs.begin());
    return g.num_vertices() - 1 + pos;
  };
  const int c1 = comp[leaf(h1)], c2 = comp[leaf(h2)], c3 = comp[leaf(h3)];
  return !(c1 == c2 && c2 == c3);
}

GeneratorClass star_cycle(const Graph& g, HalfEdgeId h1, HalfEdgeId h2, HalfEdgeId h3) {
  for (HalfEdgeId h : {h1, h2, h3}) g.check_half_edge(h);
  const VertexId v = g.vertex_of(h1);
  if (g.vertex_of(h2) != v || g.vertex_of(h3) != v) throw PreconditionError("star half-edges lie at different vertices");
  if (h1 == h2 || h2 == h3 || h1 == h3) throw PreconditionError("star half-edges must be distinct");
  const std::array<HalfEdgeId, 3> h{h1, h2, h3};
  GeneratorClass c;
  c.kind = ClassKind::star;
  c.degree = 1;
  c.weight = 2;
  // e_{k} (h_i - h_j) over the cyclic triples (i, j, k).
  const int tri[3][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  for (const auto& t : tri) {
    const EdgeId ek = Graph::edge_of(h[t[2]]);
    Monomial plus = half_edge_monomial(g, h[t[0]]), minus = half_edge_monomial(g, h[t[1]]);
    plus.exponent[ek] += 1;
    minus.exponent[ek] += 1;
    c.chain.add(plus, 1);
    c.chain.add(minus, -1);
  }
  c.support_vertices = {v};
  c.rigid = is_rigid_star(g, h1, h2, h3);
  c.provenance = "star(" + half_edge_label(g, h1) + "," + half_edge_label(g, h2) + "," + half_edge_label(g, h3) + ")";
  require_cycle(g, c);
  return c;
}

Chain a2_chain() {
  const Graph t = theta_graph(4);
  auto h = [](int vertex, int j) { return 2 * j + vertex; };  // vertex 0 = v1, 1 = v2
  std::array<int, 4> s{0, 1, 2, 3};
  Chain out;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += s[i] > s[j];
    Chain stab(edge_monomial(t, 0));
    stab.add(edge_monomial(t, s[2]), -1);
    Chain f1(half_edge_monomial(t, h(0, s[0])));
    f1.add(half_edge_monomial(t, h(0, 0)), -1);
    Chain f2(half_edge_monomial(t, h(1, s[1])));
    f2.add(half_edge_monomial(t, h(1, 0)), -1);
    Chain term = multiply(multiply(stab, f1), f2);
    out += term * (inversions % 2 ? -1 : 1);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

GeneratorClass theta_cycle(const Graph& host, const ThetaEmbedding& emb, EdgeAnchor anchor) {
  const Graph t = theta_graph(4);
  ChainMap f = embedding_map(t, host, emb.as_embedding(), anchor);
  GeneratorClass c;
  c.kind = ClassKind::theta;
  c.degree = 2;
  c.weight = 3;
  c.chain = f(a2_chain());
  std::vector<VertexId> vs{emb.x, emb.y};
  for (const auto& p : emb.paths)
    for (VertexId u : path_interior(host, p)) vs.push_back(u);
  c.support_vertices = sorted_unique(vs);
  c.support_edges = emb.edges();
  c.provenance = "theta(" + host.vertex_name(emb.x) + "," + host.vertex_name(emb.y) + ")";
  require_cycle(host, c);
  return c;
}

GeneratorClass external_product(const GeneratorClass& a, const GeneratorClass& b) {
  std::vector<VertexId> iv;
  std::set_intersection(a.support_vertices.begin(), a.support_vertices.end(), b.support_vertices.begin(),
                        b.support_vertices.end(), std::back_inserter(iv));
  std::vector<EdgeId> ie;
  std::set_intersection(a.support_edges.begin(), a.support_edges.end(), b.support_edges.begin(),
                        b.support_edges.end(), std::back_inserter(ie));
  if (!iv.empty() || !ie.empty()) throw PreconditionError("external product of cycles with overlapping supports");
  GeneratorClass c;
  c.kind = ClassKind::external_product;
  c.chain = multiply(a.chain, b.chain);
  c.degree = a.degree + b.degree;
  c.weight = a.weight + b.weight;
  std::merge(a.support_vertices.begin(), a.support_vertices.end(), b.support_vertices.begin(),
             b.support_vertices.end(), std::back_inserter(c.support_vertices));
  std::merge(a.support_edges.begin(), a.support_edges.end(), b.support_edges.begin(), b.support_edges.end(),
             std::back_inserter(c.support_edges));
  c.provenance = a.provenance + " x " + b.provenance;
  return c;
}

GeneratorClass stabilize(const Graph& g, const GeneratorClass& c, const std::vector<int>& exponents) {
  const Monomial m = edge_monomial(g, exponents);
  const int w = m.weight();
  if (w == 0) return c;
  GeneratorClass s = c;
  s.kind = ClassKind::stabilized;
  s.chain = multiply(c.chain, Chain(m));
  s.weight += w;
  s.provenance = m.to_string(g) + " * [" + c.provenance + "]";
  return s;
}

std::vector<GeneratorClass> all_loop_cycles(const Graph& g) {
  std::vector<GeneratorClass> out;
  for (const auto& cy : enumerate_cycles(g)) out.push_back(loop_cycle(g, cy));
  return out;
}

std::vector<GeneratorClass> all_star_cycles(const Graph& g) {
  std::vector<GeneratorClass> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& hs = g.half_edges_at(v);
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = a + 1; b < hs.size(); ++b)
        for (std::size_t c = b + 1; c < hs.size(); ++c) out.push_back(star_cycle(g, hs[a], hs[b], hs[c]));
  }
  return out;
}

std::vector<GeneratorClass> all_theta_cycles(const Graph& g) {
  std::vector<GeneratorClass> out;
  for (const auto& emb : enumerate_theta_embeddings(g)) out.push_back(theta_cycle(g, emb));
  return out;
}

namespace {

bool disjoint(const GeneratorClass& a, const GeneratorClass& b) {
  for (VertexId v : a.support_vertices)
    if (std::binary_search(b.support_vertices.begin(), b.support_vertices.end(), v)) return false;
  for (EdgeId e : a.support_edges)
    if (std::binary_search(b.support_edges.begin(), b.support_edges.end(), e)) return false;
  return true;
}

// Unstabilized generators of weight exactly w.
std::vector<GeneratorClass> basic_generators(const Graph& g, int w, const std::vector<GeneratorClass>& atoms,
                                             const std::vector<GeneratorClass>& thetas) {
  std::vector<GeneratorClass> out;
  if (w == 3) out = thetas;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].weight + atoms[j].weight != w || !disjoint(atoms[i], atoms[j])) continue;
      out.push_back(external_product(atoms[i], atoms[j]));
    }
  (void)g;
  return out;
}

std::pair<std::vector<GeneratorClass>, Subgroup> m_span(const Graph& g, int k) {
  auto atoms = all_loop_cycles(g);
  for (auto& s : all_star_cycles(g)) atoms.push_back(std::move(s));
  const auto thetas = k >= 3 ? all_theta_cycles(g) : std::vector<GeneratorClass>{};

  std::vector<GeneratorClass> kept;
  std::optional<Subgroup> span;
  for (int w = 0; w <= k; ++w) {
    auto h = homology(g, 2, w);
    Subgroup sub(h->group());
    std::vector<GeneratorClass> next;
    std::vector<GeneratorClass> candidates = basic_generators(g, w, atoms, thetas);
    for (const auto& c : kept)
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        std::vector<int> exps(g.num_edges(), 0);
        exps[e] = 1;
        GeneratorClass s = c;
        s.chain = multiply(c.chain, Chain(edge_monomial(g, exps)));
        s.weight += 1;
        s.kind = ClassKind::stabilized;
        s.provenance = g.edge_name(e) + " * [" + c.provenance + "]";
        candidates.push_back(std::move(s));
      }
    for (auto& c : candidates) {
      Element x = h->coordinates(c.chain);
      if (sub.contains(x)) continue;
      sub.add(x);
      next.push_back(std::move(c));
    }
    kept = std::move(next);
    span = std::move(sub);
  }
  return {std::move(kept), std::move(*span)};
}

}  // namespace

std::vector<GeneratorClass> m_generators(const Graph& g, int k) {
  if (k < 0) throw DomainError("weight must be non-negative");
  return m_span(g, k).first;
}

Subgroup m_submodule(const Graph& g, int k) {
  if (k < 0) throw DomainError("weight must be non-negative");
  return m_span(g, k).second;
}

// ------------------------------------------------------------ Pesky setup

PeskySetup pesky_setup(const Graph& g, EdgeId e) {
  g.check_edge(e);
  if (g.is_self_loop(e)) throw PreconditionError("the subdivided edge must not be a self-loop");
  if (!g.is_connected()) throw PreconditionError("the graph must be connected");
  PeskySetup s;
  s.graph = g;
  s.edge = e;
  s.subdivided = subdivide(g, e);
  s.subdivision_vertex = s.subdivided.graph.num_vertices() - 1;
  s.maps = explosion_maps(s.subdivided.graph, s.subdivision_vertex);
  s.w = s.exploded().num_vertices() - 2;
  s.w_prime = s.exploded().num_vertices() - 1;
  s.e = e;
  s.e_prime = g.num_edges();
  return s;
}

Chain standard_cycle_chain(const PeskySetup& s, const std::vector<StandardSummand>& summands) {
  Chain out;
  for (const auto& t : summands) out += multiply(t.multiplier, t.cycle.chain);
  (void)s;
  return out;
}

namespace {

// BFS path from `from` to `to` avoiding `blocked` vertices; empty if none.
std::optional<Path> avoiding_path(const Graph& g, VertexId from, VertexId to, const std::vector<char>& blocked) {
  std::vector<HalfEdgeId> parent(g.num_vertices(), kNone);
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<VertexId> q{from};
  seen[from] = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    if (u == to) break;
    for (HalfEdgeId h : g.half_edges_at(u)) {
      VertexId x = g.other_end(h);
      if (seen[x] || blocked[x]) continue;
      seen[x] = 1;
      parent[x] = h;
      q.push_back(x);
    }
  }
  if (!seen[to]) return std::nullopt;
  Path p;
  for (VertexId u = to; u != from; u = g.vertex_of(parent[u])) p.push_back(parent[u]);
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

StandardCycleFlags standard_cycle_flags(const PeskySetup& s, const std::vector<StandardSummand>& summands) {
  const Graph& gw = s.exploded();
  StandardCycleFlags f;
  f.P = f.E = f.S = true;
  for (const auto& t : summands) {
    if (t.cycle.kind != ClassKind::loop && t.cycle.kind != ClassKind::star)
      throw PreconditionError("standard cycle summands must be loop or star cycles");
    for (const auto& [m, c] : t.multiplier.terms())
      if (m.degree() != 0 || m.weight() != std::accumulate(m.exponent.begin(), m.exponent.end(), 0))
        throw PreconditionError("multipliers must be polynomials in the edges");
  }
  // P: no w-w' path avoids a summand's support.
  for (const auto& t : summands) {
    std::vector<char> blocked(gw.num_vertices(), 0);
    for (VertexId v : t.cycle.support_vertices) blocked[v] = 1;
    if (auto p = avoiding_path(gw, s.w, s.w_prime, blocked)) {
      f.P = false;
      f.path_witness = *p;
      break;
    }
  }
  // E: multiplier edges touch (star) or lie on (loop) the support.
  for (const auto& t : summands) {
    for (const auto& [m, c] : t.multiplier.terms())
      for (EdgeId e = 0; e < gw.num_edges(); ++e) {
        if (m.exponent[e] == 0) continue;
        bool ok;
        if (t.cycle.kind == ClassKind::star) {
          auto [a, b] = gw.endpoints(e);
          ok = a == t.cycle.support_vertices.front() || b == t.cycle.support_vertices.front();
        } else {
          ok = std::binary_search(t.cycle.support_edges.begin(), t.cycle.support_edges.end(), e);
        }
        if (!ok && f.E) {
          f.E = false;
          f.edge_witness = e;
        }
      }
  }
  // S: no support vertex separates w from w'.
  std::set<VertexId> support;
  for (const auto& t : summands) support.insert(t.cycle.support_vertices.begin(), t.cycle.support_vertices.end());
  for (VertexId u : support) {
    if (u == s.w || u == s.w_prime) continue;
    std::vector<char> blocked(gw.num_vertices(), 0);
    blocked[u] = 1;
    if (!avoiding_path(gw, s.w, s.w_prime, blocked)) {
      f.S = false;
      f.cut_witness = u;
      break;
    }
  }
  // K: (e' - e) c bounds one weight up.
  const Chain c = standard_cycle_chain(s, summands);
  if (c.is_zero()) {
    f.K = true;
  } else {
    const auto [deg, wt] = c.bidegree();
    if (deg != 1 || !boundary(gw, c).is_zero()) throw PreconditionError("standard cycle must be a 1-cycle");
    f.K = homology(gw, 1, wt + 1)->is_boundary(s.maps.delta(0)(c));
  }
  return f;
}

}  // namespace braidhom
