#include "braidhom/graph_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "braidhom/errors.hpp"

namespace braidhom {

DerivedGraph minimal_simplicial_model(const Graph& g) {
  DerivedGraph cur{g, GraphCorrespondence::identity(g)};
  auto step = [&](DerivedGraph next) {
    cur.correspondence = compose(cur.correspondence, next.correspondence);
    cur.graph = std::move(next.graph);
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < cur.graph.num_vertices(); ++v) {
      const auto& hs = cur.graph.half_edges_at(v);
      if (hs.size() == 2 && Graph::edge_of(hs[0]) != Graph::edge_of(hs[1])) {
        step(smooth(cur.graph, v));
        changed = true;
        break;
      }
    }
  }
  const int before_loops = cur.graph.num_edges();
  for (EdgeId e = 0; e < before_loops; ++e)
    if (cur.graph.is_self_loop(e)) step(subdivide(cur.graph, e));

  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < cur.graph.num_edges(); ++e) {
    auto [a, b] = cur.graph.endpoints(e);
    classes[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  for (const auto& [ends, es] : classes)
    for (std::size_t i = 1; i < es.size(); ++i) step(subdivide(cur.graph, es[i]));
  return cur;
}

int first_betti(const Graph& g) { return g.num_edges() - g.num_vertices() + g.num_components(); }

namespace {

// Internally vertex-disjoint s-t paths, counting a direct edge as one path; stops at `cap`.
int local_connectivity(const Graph& m, VertexId s, VertexId t, int cap) {
  const int n = m.num_vertices();
  // node 2v = in(v), 2v+1 = out(v)
  const int N = 2 * n;
  std::vector<std::map<int, int>> cap_of(N);
  for (int v = 0; v < n; ++v) cap_of[2 * v][2 * v + 1] += (v == s || v == t) ? cap : 1;
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    auto [a, b] = m.endpoints(e);
    if (a == b) continue;
    cap_of[2 * a + 1][2 * b] += 1;
    cap_of[2 * b + 1][2 * a] += 1;
    cap_of[2 * b].try_emplace(2 * a + 1, 0);
    cap_of[2 * a].try_emplace(2 * b + 1, 0);
  }
  for (int v = 0; v < n; ++v) cap_of[2 * v + 1].try_emplace(2 * v, 0);
  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> prev(N, -1);
    prev[src] = src;
    std::vector<int> queue{src};
    for (std::size_t q = 0; q < queue.size() && prev[dst] < 0; ++q) {
      int u = queue[q];
      for (auto [w, c] : cap_of[u])
        if (c > 0 && prev[w] < 0) {
          prev[w] = u;
          queue.push_back(w);
        }
    }
    if (prev[dst] < 0) break;
    for (int w = dst; w != src; w = prev[w]) {
      cap_of[prev[w]][w] -= 1;
      cap_of[w][prev[w]] += 1;
    }
    ++flow;
  }
  return flow;
}

// Components of the model after removing S and its incident open edges; -1 marks removed vertices.
std::vector<int> star_complement_components(const Graph& m, const std::vector<char>& in_s, int& count) {
  std::vector<int> comp(m.num_vertices(), -1);
  count = 0;
  for (VertexId s = 0; s < m.num_vertices(); ++s) {
    if (in_s[s] || comp[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdgeId h : m.half_edges_at(v)) {
        VertexId u = m.other_end(h);
        if (!in_s[u] && comp[u] < 0) {
          comp[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return comp;
}

bool separates(const Graph& m, const std::vector<char>& in_s) {
  int count = 0;
  star_complement_components(m, in_s, count);
  auto whole = m.component_of_vertex();
  std::set<int> outside;
  for (VertexId v = 0; v < m.num_vertices(); ++v)
    if (!in_s[v]) outside.insert(whole[v]);
  return count > static_cast<int>(outside.size());
}

Cut describe_cut(const Graph& m, std::vector<VertexId> s) {
  std::vector<char> in_s(m.num_vertices(), 0);
  for (VertexId v : s) in_s[v] = 1;
  int count = 0;
  auto comp = star_complement_components(m, in_s, count);
  std::vector<std::set<EdgeId>> edges(count);
  std::vector<std::set<VertexId>> verts(count);
  std::vector<std::vector<EdgeId>> bare;
  for (VertexId v = 0; v < m.num_vertices(); ++v)
    if (comp[v] >= 0) verts[comp[v]].insert(v);
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    auto [a, b] = m.endpoints(e);
    int c = comp[a] >= 0 ? comp[a] : comp[b];
    if (c < 0) {
      bare.push_back({e});
      continue;
    }
    edges[c].insert(e);
    verts[c].insert(a);
    verts[c].insert(b);
  }
  Cut cut;
  cut.vertices = std::move(s);
  auto emit = [&](const std::set<VertexId>& vs, const std::set<EdgeId>& es) {
    CutComponent cc;
    cc.vertices.assign(vs.begin(), vs.end());
    cc.edges.assign(es.begin(), es.end());
    for (VertexId v : cc.vertices)
      if (in_s[v]) cc.boundary.push_back(v);
    cc.subgraph = edge_subgraph(m, cc.edges, cc.vertices);
    cut.components.push_back(std::move(cc));
  };
  for (int c = 0; c < count; ++c) emit(verts[c], edges[c]);
  for (auto& b : bare) {
    auto [x, y] = m.endpoints(b[0]);
    emit({x, y}, {b[0]});
  }
  return cut;
}

}  // namespace

int connectivity(const Graph& g) {
  auto model = minimal_simplicial_model(g).graph;
  const int n = model.num_vertices();
  if (n <= 1) return 1;
  if (!model.is_connected()) return 0;
  int best = 3;
  for (VertexId s = 0; s < n && best > 0; ++s)
    for (VertexId t = s + 1; t < n && best > 0; ++t)
      best = std::min(best, local_connectivity(model, s, t, best));
  return best;
}

CutReport find_cuts(const Graph& g, int k) {
  if (k != 1 && k != 2) throw DomainError("cut size must be 1 or 2");
  CutReport report;
  report.k = k;
  report.model = minimal_simplicial_model(g);
  const Graph& m = report.model.graph;
  const int n = m.num_vertices();
  std::vector<char> in_s(n, 0);
  int ones = 0;
  for (VertexId a = 0; a < n; ++a) {
    in_s[a] = 1;
    if (separates(m, in_s)) {
      ++ones;
      if (k == 1) report.cuts.push_back(describe_cut(m, {a}));
    }
    if (k == 2) {
      for (VertexId b = a + 1; b < n; ++b) {
        in_s[b] = 1;
        if (separates(m, in_s)) report.cuts.push_back(describe_cut(m, {a, b}));
        in_s[b] = 0;
      }
    }
    in_s[a] = 0;
  }
  report.n1 = 1 + ones;
  return report;
}

std::vector<VertexId> cut_vertices(const Graph& g) {
  std::vector<VertexId> out;
  std::vector<char> in_s(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    in_s[v] = 1;
    if (separates(g, in_s)) out.push_back(v);
    in_s[v] = 0;
  }
  return out;
}

Graph completion(const Graph& component, VertexId x, VertexId y) {
  if (x < 0 || x >= component.num_vertices() || y < 0 || y >= component.num_vertices())
    throw PreconditionError("cut vertex absent from component");
  if (x == y) throw PreconditionError("completion needs two distinct cut vertices");
  return add_edge(component, x, y, "e_" + component.vertex_name(x) + component.vertex_name(y));
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  auto model = minimal_simplicial_model(g).graph;
  BoostGraph bg(model.num_vertices());
  for (auto [a, b] : model.edge_list()) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

Cycle make_cycle(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw PreconditionError("a cycle needs at least one edge");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw PreconditionError("repeated edge in cycle");
  std::map<VertexId, std::vector<HalfEdgeId>> at;
  for (EdgeId e : edges) {
    g.check_edge(e);
    at[g.vertex_of(2 * e)].push_back(2 * e);
    at[g.vertex_of(2 * e + 1)].push_back(2 * e + 1);
  }
  for (const auto& [v, hs] : at)
    if (hs.size() != 2) throw PreconditionError("edges do not form a circle at " + g.vertex_name(v));
  Cycle c;
  c.edges = edges;
  HalfEdgeId h = 2 * edges.front();
  const HalfEdgeId start = h;
  do {
    c.vertices.push_back(g.vertex_of(h));
    c.half_edges.push_back(h);
    HalfEdgeId in = Graph::opposite(h);
    const auto& pair = at[g.vertex_of(in)];
    h = pair[0] == in ? pair[1] : pair[0];
  } while (h != start && c.half_edges.size() <= edges.size());
  if (c.half_edges.size() != edges.size()) throw PreconditionError("edges form more than one circle");
  return c;
}

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  std::set<std::vector<EdgeId>> found;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.is_self_loop(e)) found.insert({e});
  const int n = g.num_vertices();
  std::vector<char> on_path(n, 0);
  std::vector<EdgeId> path;
  // cycles whose least vertex is s
  auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
    for (HalfEdgeId h : g.half_edges_at(v)) {
      EdgeId e = Graph::edge_of(h);
      if (g.is_self_loop(e) || (!path.empty() && path.back() == e)) continue;
      VertexId u = g.other_end(h);
      if (u == s && !path.empty()) {
        auto es = path;
        es.push_back(e);
        std::sort(es.begin(), es.end());
        found.insert(es);
      } else if (u > s && !on_path[u]) {
        on_path[u] = 1;
        path.push_back(e);
        self(self, s, u);
        path.pop_back();
        on_path[u] = 0;
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  std::vector<Cycle> out;
  for (const auto& es : found) out.push_back(make_cycle(g, es));
  return out;
}

std::vector<Path> simple_paths(const Graph& g, VertexId x, VertexId y, const std::vector<char>& allowed,
                               std::size_t limit) {
  g.check_vertex(x);
  g.check_vertex(y);
  std::vector<Path> out;
  if (x == y) return out;
  std::vector<char> visited(g.num_vertices(), 0);
  Path cur;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (out.size() >= limit) return;
    for (HalfEdgeId h : g.half_edges_at(v)) {
      EdgeId e = Graph::edge_of(h);
      if (g.is_self_loop(e) || (!allowed.empty() && !allowed[e])) continue;
      VertexId u = g.other_end(h);
      if (visited[u]) continue;
      cur.push_back(h);
      if (u == y) {
        out.push_back(cur);
      } else {
        visited[u] = 1;
        self(self, u);
        visited[u] = 0;
      }
      cur.pop_back();
      if (out.size() >= limit) return;
    }
  };
  visited[x] = 1;
  dfs(dfs, x);
  return out;
}

std::vector<EdgeId> path_edges(const Path& p) {
  std::vector<EdgeId> out;
  for (HalfEdgeId h : p) out.push_back(Graph::edge_of(h));
  return out;
}

std::vector<VertexId> path_interior(const Graph& g, const Path& p) {
  std::vector<VertexId> out;
  for (std::size_t j = 1; j < p.size(); ++j) out.push_back(g.vertex_of(p[j]));
  return out;
}

void validate_embedding(const Graph& source, const Graph& host, const GraphEmbedding& emb) {
  auto fail = [](const std::string& why) { throw PreconditionError("invalid embedding: " + why); };
  if (static_cast<int>(emb.vertex.size()) != source.num_vertices() ||
      static_cast<int>(emb.edge_paths.size()) != source.num_edges())
    fail("size mismatch");
  std::vector<char> used_v(host.num_vertices(), 0), used_e(host.num_edges(), 0);
  for (VertexId v : emb.vertex) {
    if (v < 0 || v >= host.num_vertices()) fail("vertex image out of range");
    if (used_v[v]) fail("two vertices share an image");
    used_v[v] = 1;
  }
  for (EdgeId e = 0; e < source.num_edges(); ++e) {
    const Path& p = emb.edge_paths[e];
    if (p.empty()) fail("empty edge path");
    VertexId cur = emb.vertex[source.vertex_of(2 * e)];
    for (std::size_t j = 0; j < p.size(); ++j) {
      HalfEdgeId h = p[j];
      if (h < 0 || h >= host.num_half_edges()) fail("half-edge out of range");
      if (host.vertex_of(h) != cur) fail("path is not contiguous");
      if (used_e[Graph::edge_of(h)]) fail("edge used twice");
      used_e[Graph::edge_of(h)] = 1;
      cur = host.other_end(h);
      if (j + 1 < p.size()) {
        if (used_v[cur]) fail("path passes through a used vertex");
        used_v[cur] = 1;
      }
    }
    if (cur != emb.vertex[source.vertex_of(2 * e + 1)]) fail("path ends at the wrong vertex");
  }
}

GraphEmbedding embedding_from_correspondence(const Graph& source, const Graph& host,
                                             const GraphCorrespondence& c) {
  GraphEmbedding emb;
  emb.vertex = c.vertex;
  for (EdgeId e = 0; e < source.num_edges(); ++e) {
    HalfEdgeId h0 = c.half_edge[2 * e], h1 = c.half_edge[2 * e + 1];
    if (h0 == kNone || h1 != Graph::opposite(h0))
      throw PreconditionError("correspondence does not send edges to edges");
    emb.edge_paths.push_back({h0});
  }
  validate_embedding(source, host, emb);
  return emb;
}

GraphEmbedding ThetaEmbedding::as_embedding() const {
  GraphEmbedding emb;
  emb.vertex = {x, y};
  emb.edge_paths.assign(paths.begin(), paths.end());
  return emb;
}

std::vector<EdgeId> ThetaEmbedding::edges() const {
  std::vector<EdgeId> out;
  for (const auto& p : paths)
    for (HalfEdgeId h : p) out.push_back(Graph::edge_of(h));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThetaEmbedding> enumerate_theta_embeddings(const Graph& g) {
  std::vector<ThetaEmbedding> out;
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (g.valence(x) < 4) continue;
    for (VertexId y = x + 1; y < g.num_vertices(); ++y) {
      if (g.valence(y) < 4) continue;
      auto paths = simple_paths(g, x, y);
      std::sort(paths.begin(), paths.end());
      std::vector<std::vector<VertexId>> interiors;
      for (const auto& p : paths) {
        auto in = path_interior(g, p);
        std::sort(in.begin(), in.end());
        interiors.push_back(std::move(in));
      }
      auto disjoint = [&](std::size_t a, std::size_t b) {
        if (paths[a][0] == paths[b][0]) return false;
        const auto& ia = interiors[a];
        const auto& ib = interiors[b];
        std::vector<VertexId> common;
        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(common));
        return common.empty();
      };
      std::vector<std::size_t> pick;
      auto choose = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == 4) {
          ThetaEmbedding t;
          t.x = x;
          t.y = y;
          for (int j = 0; j < 4; ++j) t.paths[j] = paths[pick[j]];
          std::sort(t.paths.begin(), t.paths.end(),
                    [](const Path& a, const Path& b) { return a[0] < b[0]; });
          out.push_back(std::move(t));
          return;
        }
        for (std::size_t i = from; i < paths.size(); ++i) {
          bool ok = std::all_of(pick.begin(), pick.end(), [&](std::size_t j) { return disjoint(i, j); });
          if (!ok) continue;
          pick.push_back(i);
          self(self, i + 1);
          pick.pop_back();
        }
      };
      choose(choose, 0);
    }
  }
  return out;
}

bool SurgeryDescriptor::in_delta_edge(EdgeId e) const {
  return std::binary_search(delta_edges.begin(), delta_edges.end(), e);
}

bool SurgeryDescriptor::in_delta_vertex(VertexId v) const {
  return std::binary_search(delta_vertices.begin(), delta_vertices.end(), v);
}

std::vector<GraphEmbedding> SurgeryDescriptor::sections() const {
  std::vector<char> allowed(host.num_edges(), 0);
  for (EdgeId e : delta_edges) allowed[e] = 1;
  std::vector<GraphEmbedding> out;
  for (auto& p : simple_paths(host, x, y, allowed)) {
    GraphEmbedding emb;
    emb.vertex = correspondence.vertex;
    for (EdgeId e = 0; e < result.num_edges(); ++e) {
      if (e == new_edge)
        emb.edge_paths.push_back(p);
      else
        emb.edge_paths.push_back({correspondence.half_edge[2 * e]});
    }
    out.push_back(std::move(emb));
  }
  return out;
}

SurgeryDescriptor surgery(const Graph& host, std::vector<EdgeId> delta_edges, VertexId x, VertexId y,
                          std::vector<VertexId> extra_vertices) {
  host.check_vertex(x);
  host.check_vertex(y);
  if (x == y) throw PreconditionError("surgery needs two distinct vertices");
  std::sort(delta_edges.begin(), delta_edges.end());
  delta_edges.erase(std::unique(delta_edges.begin(), delta_edges.end()), delta_edges.end());
  auto sub = edge_subgraph(host, delta_edges, extra_vertices);
  if (!sub.graph.is_connected() || sub.graph.num_vertices() == 0)
    throw PreconditionError("surgery subgraph is not connected");
  SurgeryDescriptor sd;
  sd.host = host;
  sd.delta_edges = delta_edges;
  sd.delta_vertices = sub.correspondence.vertex;
  sd.x = x;
  sd.y = y;
  if (!sd.in_delta_vertex(x) || !sd.in_delta_vertex(y))
    throw PreconditionError("surgery endpoints must lie in the subgraph");
  for (VertexId v : sd.delta_vertices) {
    if (v == x || v == y) continue;
    for (HalfEdgeId h : host.half_edges_at(v))
      if (!sd.in_delta_edge(Graph::edge_of(h)))
        throw PreconditionError("interior vertex " + host.vertex_name(v) + " has an edge outside the subgraph");
  }
  std::vector<int> renum(host.num_vertices(), kNone);
  std::vector<std::string> vnames, enames;
  auto& c = sd.correspondence;
  for (VertexId v = 0; v < host.num_vertices(); ++v) {
    if (sd.in_delta_vertex(v) && v != x && v != y) continue;
    renum[v] = static_cast<int>(c.vertex.size());
    c.vertex.push_back(v);
    vnames.push_back(host.vertex_name(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < host.num_edges(); ++e) {
    if (sd.in_delta_edge(e)) continue;
    auto [a, b] = host.endpoints(e);
    edges.emplace_back(renum[a], renum[b]);
    enames.push_back(host.edge_name(e));
    c.edge.push_back(e);
    c.half_edge.push_back(2 * e);
    c.half_edge.push_back(2 * e + 1);
  }
  sd.new_edge = static_cast<EdgeId>(edges.size());
  edges.emplace_back(renum[x], renum[y]);
  std::string name = "e_" + host.vertex_name(x) + host.vertex_name(y);
  while (std::find(enames.begin(), enames.end(), name) != enames.end()) name += "'";
  enames.push_back(name);
  c.edge.push_back(kNone);
  c.half_edge.push_back(kNone);
  c.half_edge.push_back(kNone);
  sd.result = Graph(static_cast<int>(vnames.size()), edges, vnames, enames);
  return sd;
}

bool is_homeomorphic(const Graph& a, const Graph& b) {
  return are_isomorphic(minimal_simplicial_model(a).graph, minimal_simplicial_model(b).graph);
}

}  // namespace braidhom
