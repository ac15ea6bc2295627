#include "braidhom/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

namespace {

std::vector<std::string> default_names(const char* prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<VertexId, VertexId>> edges,
             std::vector<std::string> vertex_names, std::vector<std::string> edge_names)
    : incident_(num_vertices),
      vertex_names_(std::move(vertex_names)),
      edge_names_(std::move(edge_names)) {
  if (num_vertices < 0) throw DomainError("negative vertex count");
  half_vertex_.reserve(2 * edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices) {
      throw MalformedInputError("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                                std::to_string(num_vertices - 1));
    }
    half_vertex_.push_back(a);
    half_vertex_.push_back(b);
    incident_[a].push_back(static_cast<int>(2 * e));
    incident_[b].push_back(static_cast<int>(2 * e + 1));
  }
  if (vertex_names_.empty()) vertex_names_ = default_names("v", num_vertices);
  if (edge_names_.empty()) edge_names_ = default_names("e", static_cast<int>(edges.size()));
  if (static_cast<int>(vertex_names_.size()) != num_vertices ||
      edge_names_.size() != edges.size()) {
    throw MalformedInputError("name list length does not match element count");
  }
}

std::string Graph::half_edge_name(HalfEdgeId h) const {
  std::string s = vertex_names_[vertex_of(h)] + ":" + edge_names_[edge_of(h)];
  if (is_self_loop(edge_of(h))) s += "/" + std::to_string(h & 1);
  return s;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  for (int e = 0; e < num_edges(); ++e)
    if (edge_names_[e] == name) return e;
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(num_edges());
  for (int e = 0; e < num_edges(); ++e) out.push_back(endpoints(e));
  return out;
}

std::vector<int> Graph::component_of_vertex() const {
  std::vector<int> comp(num_vertices(), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (int s = 0; s < num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdgeId h : incident_[v]) {
        VertexId u = other_end(h);
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

int Graph::num_components() const {
  auto comp = component_of_vertex();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(incident_.begin(), incident_.end(), [](const auto& h) { return h.empty(); });
}

std::string Graph::incidence_key() const {
  std::ostringstream out;
  out << num_vertices() << ':';
  for (int e = 0; e < num_edges(); ++e) {
    auto [a, b] = endpoints(e);
    out << a << '-' << b << ';';
  }
  return out.str();
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices()) throw LookupError("unknown vertex " + std::to_string(v));
}

void Graph::check_edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) throw LookupError("unknown edge " + std::to_string(e));
}

void Graph::check_half_edge(HalfEdgeId h) const {
  if (h < 0 || h >= num_half_edges()) throw LookupError("unknown half-edge " + std::to_string(h));
}

GraphCorrespondence GraphCorrespondence::identity(const Graph& g) {
  GraphCorrespondence c;
  c.vertex.resize(g.num_vertices());
  c.edge.resize(g.num_edges());
  c.half_edge.resize(g.num_half_edges());
  std::iota(c.vertex.begin(), c.vertex.end(), 0);
  std::iota(c.edge.begin(), c.edge.end(), 0);
  std::iota(c.half_edge.begin(), c.half_edge.end(), 0);
  return c;
}

GraphCorrespondence compose(const GraphCorrespondence& first, const GraphCorrespondence& second) {
  auto chain = [](const std::vector<int>& inner, const std::vector<int>& outer) {
    std::vector<int> out(outer.size(), kNone);
    for (std::size_t i = 0; i < outer.size(); ++i)
      if (outer[i] != kNone) out[i] = inner[outer[i]];
    return out;
  };
  return {chain(first.vertex, second.vertex), chain(first.edge, second.edge),
          chain(first.half_edge, second.half_edge)};
}

Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], static_cast<int>(i)).second)
      throw MalformedInputError("duplicate vertex \"" + vertices[i] + "\"");
  }
  std::vector<std::pair<VertexId, VertexId>> ids;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw MalformedInputError("undeclared vertex \"" + a + "\"");
    if (ib == index.end()) throw MalformedInputError("undeclared vertex \"" + b + "\"");
    ids.emplace_back(ia->second, ib->second);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(ids), vertices);
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Graph star_graph(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<std::string> names{"c"};
  for (auto& s : numbered("l", n)) names.push_back(s);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= n; ++j) edges.emplace_back(0, j);
  return Graph(n + 1, edges, names);
}

Graph theta_graph(int n) {
  require(n >= 2, "theta needs n >= 2");
  std::vector<std::pair<int, int>> edges(n, {0, 1});
  return Graph(2, edges, {"v1", "v2"});
}

Graph cycle_graph(int n) {
  require(n >= 1, "cycle needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
  return Graph(n, edges, numbered("v", n));
}

Graph complete_bipartite_graph(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite needs m, n >= 1");
  auto names = numbered("a", m);
  for (auto& s : numbered("b", n)) names.push_back(s);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges, names);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges, numbered("v", n));
}

Graph lollipop_graph() { return Graph(2, {{0, 0}, {0, 1}}, {"u", "l"}, {"e'", "e"}); }

Graph handcuffs_graph() {
  return Graph(3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}, {"a", "m", "b"}, {"la", "am", "mb", "lb"});
}

Graph wheel_graph(int spokes) {
  require(spokes >= 3, "wheel needs at least 3 spokes");
  std::vector<std::string> names{"h"};
  for (auto& s : numbered("r", spokes)) names.push_back(s);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= spokes; ++j) edges.emplace_back(0, j);
  for (int j = 1; j <= spokes; ++j) edges.emplace_back(j, j % spokes + 1);
  return Graph(spokes + 1, edges, names);
}

Graph path_graph(int num_vertices) {
  require(num_vertices >= 1, "path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j + 1 < num_vertices; ++j) edges.emplace_back(j, j + 1);
  return Graph(num_vertices, edges, numbered("p", num_vertices));
}

Graph standard_family(Family kind, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw DomainError("family expects " + std::to_string(n) + " parameter(s)");
  };
  switch (kind) {
    case Family::star: need(1); return star_graph(params[0]);
    case Family::theta: need(1); return theta_graph(params[0]);
    case Family::cycle: need(1); return cycle_graph(params[0]);
    case Family::complete_bipartite: need(2); return complete_bipartite_graph(params[0], params[1]);
    case Family::complete: need(1); return complete_graph(params[0]);
    case Family::lollipop: need(0); return lollipop_graph();
    case Family::handcuffs: need(0); return handcuffs_graph();
    case Family::wheel: need(1); return wheel_graph(params[0]);
    case Family::path: need(1); return path_graph(params[0]);
  }
  throw DomainError("unknown family");
}

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  if (!used(base)) return base;
  for (int i = 1;; ++i) {
    std::string s = base + "_" + std::to_string(i);
    if (!used(s)) return s;
  }
}

}  // namespace

DerivedGraph subdivide(const Graph& g, EdgeId e) {
  g.check_edge(e);
  const int n = g.num_vertices();
  auto edges = g.edge_list();
  auto [a, b] = edges[e];
  edges[e] = {a, n};
  edges.emplace_back(n, b);
  auto vnames = g.vertex_names();
  vnames.push_back(fresh_name(vnames, "w" + g.edge_name(e)));
  auto enames = g.edge_names();
  enames.push_back(fresh_name(enames, g.edge_name(e) + "'"));

  DerivedGraph out{Graph(n + 1, edges, vnames, enames), GraphCorrespondence::identity(g)};
  auto& c = out.correspondence;
  c.vertex.push_back(kNone);
  c.edge.push_back(e);
  c.half_edge[2 * e + 1] = kNone;
  c.half_edge.push_back(kNone);
  c.half_edge.push_back(2 * e + 1);
  return out;
}

DerivedGraph smooth(const Graph& g, VertexId v) {
  g.check_vertex(v);
  if (g.valence(v) != 2)
    throw PreconditionError("vertex " + g.vertex_name(v) + " is not bivalent");
  HalfEdgeId h1 = g.half_edges_at(v)[0];
  HalfEdgeId h2 = g.half_edges_at(v)[1];
  EdgeId e1 = Graph::edge_of(h1), e2 = Graph::edge_of(h2);
  if (e1 == e2)
    throw PreconditionError("vertex " + g.vertex_name(v) + " is the only vertex of a circle");
  // keep the smaller edge; its half at v moves to the far end of the other edge
  EdgeId keep = std::min(e1, e2), drop = std::max(e1, e2);
  HalfEdgeId keep_at_v = Graph::edge_of(h1) == keep ? h1 : h2;
  HalfEdgeId drop_at_v = keep_at_v == h1 ? h2 : h1;
  HalfEdgeId drop_far = Graph::opposite(drop_at_v);
  VertexId far = g.vertex_of(drop_far);

  auto renum_v = [&](VertexId u) { return u > v ? u - 1 : u; };

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> enames;
  GraphCorrespondence c;
  for (EdgeId x = 0; x < g.num_edges(); ++x) {
    if (x == drop) continue;
    HalfEdgeId s0 = 2 * x, s1 = 2 * x + 1;
    VertexId a = g.vertex_of(s0), b = g.vertex_of(s1);
    if (x == keep) {
      if (keep_at_v == s0) {
        a = far;
        s0 = drop_far;
      } else {
        b = far;
        s1 = drop_far;
      }
    }
    edges.emplace_back(renum_v(a), renum_v(b));
    enames.push_back(g.edge_name(x));
    c.edge.push_back(x);
    c.half_edge.push_back(s0);
    c.half_edge.push_back(s1);
  }
  std::vector<std::string> vnames;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (u == v) continue;
    vnames.push_back(g.vertex_name(u));
    c.vertex.push_back(u);
  }
  return {Graph(g.num_vertices() - 1, edges, vnames, enames), std::move(c)};
}

DerivedGraph explode(const Graph& g, std::span<const VertexId> w) {
  std::vector<char> in_w(g.num_vertices(), 0);
  for (VertexId v : w) {
    g.check_vertex(v);
    in_w[v] = 1;
  }
  std::vector<VertexId> new_vertex_of_half(g.num_half_edges(), kNone);
  std::vector<VertexId> renum(g.num_vertices(), kNone);
  std::vector<std::string> vnames;
  GraphCorrespondence c;
  int next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in_w[v]) continue;
    renum[v] = next++;
    vnames.push_back(g.vertex_name(v));
    c.vertex.push_back(v);
  }
  std::vector<std::string> taken = g.vertex_names();
  for (HalfEdgeId h = 0; h < g.num_half_edges(); ++h) {
    VertexId v = g.vertex_of(h);
    if (!in_w[v]) continue;
    new_vertex_of_half[h] = next++;
    std::string name = fresh_name(taken, g.vertex_name(v) + "." + std::to_string(h));
    taken.push_back(name);
    vnames.push_back(name);
    c.vertex.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int ends[2];
    for (int s = 0; s < 2; ++s) {
      HalfEdgeId h = 2 * e + s;
      ends[s] = in_w[g.vertex_of(h)] ? new_vertex_of_half[h] : renum[g.vertex_of(h)];
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  c.edge.resize(g.num_edges());
  c.half_edge.resize(g.num_half_edges());
  std::iota(c.edge.begin(), c.edge.end(), 0);
  std::iota(c.half_edge.begin(), c.half_edge.end(), 0);
  return {Graph(next, edges, vnames, g.edge_names()), std::move(c)};
}

DerivedGraph explode(const Graph& g, VertexId v) {
  VertexId w[1] = {v};
  return explode(g, std::span<const VertexId>(w, 1));
}

DerivedGraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges,
                           std::span<const VertexId> extra_vertices) {
  std::vector<char> keep_e(g.num_edges(), 0), keep_v(g.num_vertices(), 0);
  for (EdgeId e : edges) {
    g.check_edge(e);
    keep_e[e] = 1;
    auto [a, b] = g.endpoints(e);
    keep_v[a] = keep_v[b] = 1;
  }
  for (VertexId v : extra_vertices) {
    g.check_vertex(v);
    keep_v[v] = 1;
  }
  GraphCorrespondence c;
  std::vector<int> renum(g.num_vertices(), kNone);
  std::vector<std::string> vnames, enames;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!keep_v[v]) continue;
    renum[v] = static_cast<int>(c.vertex.size());
    c.vertex.push_back(v);
    vnames.push_back(g.vertex_name(v));
  }
  std::vector<std::pair<int, int>> elist;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!keep_e[e]) continue;
    auto [a, b] = g.endpoints(e);
    elist.emplace_back(renum[a], renum[b]);
    enames.push_back(g.edge_name(e));
    c.edge.push_back(e);
    c.half_edge.push_back(2 * e);
    c.half_edge.push_back(2 * e + 1);
  }
  return {Graph(static_cast<int>(c.vertex.size()), elist, vnames, enames), std::move(c)};
}

DerivedGraph remove_edges(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> drop(g.num_edges(), 0);
  for (EdgeId e : edges) {
    g.check_edge(e);
    drop[e] = 1;
  }
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!drop[e]) keep.push_back(e);
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return edge_subgraph(g, keep, all);
}

Graph add_edge(const Graph& g, VertexId u, VertexId v, std::string name) {
  g.check_vertex(u);
  g.check_vertex(v);
  auto edges = g.edge_list();
  edges.emplace_back(u, v);
  auto enames = g.edge_names();
  enames.push_back(fresh_name(enames, name.empty() ? "e" + std::to_string(g.num_edges()) : name));
  return Graph(g.num_vertices(), edges, g.vertex_names(), enames);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edge_list();
  for (auto [x, y] : b.edge_list()) edges.emplace_back(x + a.num_vertices(), y + a.num_vertices());
  auto vnames = a.vertex_names();
  for (const auto& s : b.vertex_names()) vnames.push_back(fresh_name(vnames, s));
  auto enames = a.edge_names();
  for (const auto& s : b.edge_names()) enames.push_back(fresh_name(enames, s));
  return Graph(a.num_vertices() + b.num_vertices(), edges, vnames, enames);
}

namespace {

using Multiplicity = std::vector<std::vector<int>>;

Multiplicity adjacency_counts(const Graph& g) {
  Multiplicity m(g.num_vertices(), std::vector<int>(g.num_vertices(), 0));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    m[a][b] += 1;
    if (a != b) m[b][a] += 1;
  }
  return m;
}

// Color refinement; returns a stable color per vertex comparable across graphs.
std::vector<std::vector<int>> refine_signatures(const Multiplicity& m, int rounds) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int u = 0; u < n; ++u) deg += (u == v ? 2 : 1) * m[v][u];
    sig[v] = {deg, m[v][v]};
  }
  for (int r = 0; r < rounds; ++r) {
    std::map<std::vector<int>, int> code;
    for (auto& s : sig) code.emplace(s, 0);
    int id = 0;
    for (auto& [k, val] : code) val = id++;
    std::vector<std::vector<int>> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        for (int t = 0; t < m[v][u] && u != v; ++t) nb.push_back(code[sig[u]]);
      std::sort(nb.begin(), nb.end());
      next[v] = {code[sig[v]]};
      next[v].insert(next[v].end(), nb.begin(), nb.end());
    }
    sig = std::move(next);
  }
  return sig;
}

bool extend(const Multiplicity& ma, const Multiplicity& mb, const std::vector<int>& order,
            const std::vector<int>& class_a, const std::vector<int>& class_b, std::vector<int>& map,
            std::vector<char>& used, std::size_t depth) {
  if (depth == order.size()) return true;
  int v = order[depth];
  for (int u = 0; u < static_cast<int>(mb.size()); ++u) {
    if (used[u] || class_a[v] != class_b[u] || ma[v][v] != mb[u][u]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      int pv = order[d];
      ok = ma[v][pv] == mb[u][map[pv]];
    }
    if (!ok) continue;
    map[v] = u;
    used[u] = 1;
    if (extend(ma, mb, order, class_a, class_b, map, used, depth + 1)) return true;
    used[u] = 0;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int n = a.num_vertices();
  auto ma = adjacency_counts(a);
  auto mb = adjacency_counts(b);
  const int rounds = std::min(n, 6);
  auto sa = refine_signatures(ma, rounds);
  auto sb = refine_signatures(mb, rounds);
  // refinement runs on each graph separately, so compare the full signature
  // multisets before trusting per-vertex classes
  std::map<std::vector<int>, int> code;
  for (auto& s : sa) code.emplace(s, 0);
  for (auto& s : sb) code.emplace(s, 0);
  int id = 0;
  for (auto& [k, val] : code) val = id++;
  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) {
    ca[v] = code[sa[v]];
    cb[v] = code[sb[v]];
  }
  auto sorted_a = ca, sorted_b = cb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  // visit vertices so each new one is adjacent to an earlier one where possible
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int v = queue[q];
      order.push_back(v);
      for (int u = 0; u < n; ++u)
        if (!seen[u] && ma[v][u] > 0) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return extend(ma, mb, order, ca, cb, map, used, 0);
}

}  // namespace braidhom
