#include "braidhom/chain_maps.hpp"

#include <algorithm>

#include "braidhom/errors.hpp"

namespace braidhom {

ChainMap::ChainMap(Graph source, Graph target, Action action, std::string name, int degree_shift,
                   int weight_shift)
    : source_(std::move(source)),
      target_(std::move(target)),
      action_(std::move(action)),
      name_(std::move(name)),
      degree_shift_(degree_shift),
      weight_shift_(weight_shift) {}

Chain ChainMap::operator()(const Chain& c) const {
  Chain out;
  for (const auto& [m, x] : c.terms()) out += action_(m) * x;
  return out;
}

IntMatrix ChainMap::matrix(int degree, int weight) const {
  BasisIndex src(basis(source_, degree, weight, ComplexVariant::unreduced));
  BasisIndex dst(basis(target_, degree + degree_shift_, weight + weight_shift_, ComplexVariant::unreduced));
  IntMatrix m(dst.size(), src.size());
  for (int j = 0; j < src.size(); ++j) {
    const Chain image = action_(src[j]);
    for (const auto& [t, x] : image.terms()) {
      int i = dst.find(t);
      if (i < 0) throw std::logic_error("chain map image outside the target bidegree");
      m(i, j) = x;
    }
  }
  return m;
}

bool ChainMap::commutes_with_boundary(int degree, int weight, int sign) const {
  for (const auto& m : basis(source_, degree, weight, ComplexVariant::unreduced)) {
    Chain lhs = boundary(target_, action_(m));
    Chain rhs = (*this)(boundary(source_, m)) * sign;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ChainMap ChainMap::after(const ChainMap& first) const {
  if (!(first.target_ == source_)) throw DomainError("chain maps do not compose");
  auto f = first.action_;
  auto g = *this;
  return ChainMap(first.source_, target_, [f, g](const Monomial& m) { return g(f(m)); },
                  name_ + " o " + first.name_, degree_shift_ + first.degree_shift_,
                  weight_shift_ + first.weight_shift_);
}

ChainMap make_multiplicative_map(const Graph& source, const Graph& target, GeneratorImages images,
                                 std::string name) {
  if (static_cast<int>(images.occupied.size()) != source.num_vertices() ||
      static_cast<int>(images.half_edge.size()) != source.num_half_edges() ||
      static_cast<int>(images.edge.size()) != source.num_edges())
    throw DomainError("generator images do not match the source graph");
  const Chain unit(Monomial::unit(target));
  auto action = [images = std::move(images), unit](const Monomial& m) {
    Chain out = unit;
    for (VertexId v = 0; v < static_cast<VertexId>(m.state.size()); ++v) {
      const int s = m.state[v];
      if (s == kEmpty) continue;
      out = multiply(out, s == kOccupied ? images.occupied[v] : images.half_edge[s]);
      if (out.is_zero()) return out;
    }
    for (EdgeId e = 0; e < static_cast<EdgeId>(m.exponent.size()); ++e)
      for (int k = 0; k < m.exponent[e]; ++k) {
        out = multiply(out, images.edge[e]);
        if (out.is_zero()) return out;
      }
    return out;
  };
  return ChainMap(source, target, std::move(action), std::move(name));
}

ChainMap identity_map(const Graph& g) {
  return ChainMap(g, g, [](const Monomial& m) { return Chain(m); }, "id");
}

ChainMap edge_stabilization_map(const Graph& g, EdgeId e) {
  g.check_edge(e);
  return ChainMap(
      g, g,
      [e](const Monomial& m) {
        Monomial t = m;
        t.exponent[e] += 1;
        return Chain(t);
      },
      "stab(" + g.edge_name(e) + ")", 0, 1);
}

ChainMap embedding_map(const Graph& source, const Graph& host, const GraphEmbedding& embedding, EdgeAnchor anchor) {
  validate_embedding(source, host, embedding);
  GeneratorImages img;
  for (VertexId v = 0; v < source.num_vertices(); ++v)
    img.occupied.emplace_back(occupied_monomial(host, embedding.vertex[v]));
  img.half_edge.resize(source.num_half_edges());
  for (EdgeId e = 0; e < source.num_edges(); ++e) {
    const Path& p = embedding.edge_paths[e];
    // Telescoping sum of e(p[j]) - e(p[j-1]) realized as a boundary.
    Chain shift;
    for (std::size_t j = 1; j < p.size(); ++j) {
      shift.add(half_edge_monomial(host, p[j]), 1);
      shift.add(half_edge_monomial(host, Graph::opposite(p[j - 1])), -1);
    }
    Chain near(half_edge_monomial(host, p.front()));
    Chain far(half_edge_monomial(host, Graph::opposite(p.back())));
    if (anchor == EdgeAnchor::first) {
      img.edge.emplace_back(edge_monomial(host, Graph::edge_of(p.front())));
      far -= shift;
    } else {
      img.edge.emplace_back(edge_monomial(host, Graph::edge_of(p.back())));
      near += shift;
    }
    img.half_edge[2 * e] = std::move(near);
    img.half_edge[2 * e + 1] = std::move(far);
  }
  return make_multiplicative_map(source, host, std::move(img), "embed");
}

ChainMap inclusion_map(const DerivedGraph& sub, const Graph& host) {
  return embedding_map(sub.graph, host, embedding_from_correspondence(sub.graph, host, sub.correspondence));
}

// --------------------------------------------------------------- Explosion

ExplosionMaps explosion_maps(const Graph& g, VertexId v, HalfEdgeId h0) {
  g.check_vertex(v);
  if (g.valence(v) == 0) throw PreconditionError("cannot explode an isolated vertex");
  const HalfEdgeId least = g.half_edges_at(v).front();
  if (h0 == kNone) h0 = least;
  if (h0 != least) throw PreconditionError("the privileged half-edge must be the least half-edge at the vertex");
  ExplosionMaps x;
  x.graph = g;
  x.vertex = v;
  x.privileged = h0;
  x.exploded = explode(g, v);
  for (HalfEdgeId h : g.half_edges_at(v))
    if (h != h0) x.summands.push_back(h);
  return x;
}

ChainMap ExplosionMaps::iota() const {
  const Graph& gv = exploded.graph;
  const auto& cv = exploded.correspondence.vertex;
  GeneratorImages img;
  const int survivors = graph.num_vertices() - 1;
  for (VertexId u = 0; u < gv.num_vertices(); ++u) {
    if (u < survivors) {
      img.occupied.emplace_back(occupied_monomial(graph, cv[u]));
    } else {
      img.occupied.emplace_back(edge_monomial(graph, Graph::edge_of(gv.half_edges_at(u).front())));
    }
  }
  for (HalfEdgeId h = 0; h < gv.num_half_edges(); ++h) {
    if (gv.vertex_of(h) >= survivors)
      img.half_edge.emplace_back();
    else
      img.half_edge.emplace_back(half_edge_monomial(graph, h));
  }
  for (EdgeId e = 0; e < gv.num_edges(); ++e) img.edge.emplace_back(edge_monomial(graph, e));
  return make_multiplicative_map(gv, graph, std::move(img), "iota");
}

std::vector<Chain> ExplosionMaps::psi(const Chain& c, int modulus) const {
  const Graph& gv = exploded.graph;
  const auto& cv = exploded.correspondence.vertex;
  const int survivors = graph.num_vertices() - 1;
  std::vector<Chain> lead(summands.size());
  const Chain reduced = restrict_to_reduced(graph, c, modulus);
  for (const auto& [m, coeff] : reduced.terms()) {
    const int h = m.state[vertex];
    if (h == kEmpty) continue;
    const auto idx = std::lower_bound(summands.begin(), summands.end(), h) - summands.begin();
    Monomial t = Monomial::unit(gv);
    for (VertexId u = 0; u < survivors; ++u) t.state[u] = m.state[cv[u]];
    t.exponent = m.exponent;
    lead[idx].add(t, m.degree_before(vertex) % 2 ? -coeff : coeff);
  }
  std::vector<Chain> out;
  for (const auto& l : lead) out.push_back(expand_reduced(gv, l));
  return out;
}

ChainMap ExplosionMaps::delta(int summand) const {
  if (summand < 0 || summand >= static_cast<int>(summands.size())) throw LookupError("no such summand");
  const EdgeId e = Graph::edge_of(summands[summand]), e0 = Graph::edge_of(privileged);
  return ChainMap(
      exploded.graph, exploded.graph,
      [e, e0](const Monomial& m) {
        Chain out;
        if (e == e0) return out;
        Monomial t = m;
        t.exponent[e] += 1;
        out.add(t, 1);
        t.exponent[e] -= 1;
        t.exponent[e0] += 1;
        out.add(t, -1);
        return out;
      },
      "delta", 0, 1);
}

Chain ExplosionMaps::delta(const std::vector<Chain>& components) const {
  if (components.size() != summands.size()) throw DomainError("wrong number of summands");
  Chain out;
  for (std::size_t j = 0; j < components.size(); ++j) out += delta(static_cast<int>(j))(components[j]);
  return out;
}

// ----------------------------------------------------------------- Surgery

ChainMap surgery_map(const SurgeryDescriptor& sd) {
  const Graph& host = sd.host;
  const Graph& res = sd.result;
  const auto& c = sd.correspondence;
  std::vector<VertexId> vinv(host.num_vertices(), kNone);
  std::vector<EdgeId> einv(host.num_edges(), kNone);
  std::vector<HalfEdgeId> hinv(host.num_half_edges(), kNone);
  for (VertexId u = 0; u < res.num_vertices(); ++u)
    if (c.vertex[u] != kNone) vinv[c.vertex[u]] = u;
  for (EdgeId e = 0; e < res.num_edges(); ++e)
    if (c.edge[e] != kNone) einv[c.edge[e]] = e;
  for (HalfEdgeId h = 0; h < res.num_half_edges(); ++h)
    if (c.half_edge[h] != kNone) hinv[c.half_edge[h]] = h;
  const HalfEdgeId hx = res.vertex_of(2 * sd.new_edge) == vinv[sd.x] ? 2 * sd.new_edge : 2 * sd.new_edge + 1;
  const HalfEdgeId hy = Graph::opposite(hx);

  GeneratorImages img;
  for (VertexId u = 0; u < host.num_vertices(); ++u) {
    if (sd.in_delta_vertex(u) && u != sd.x && u != sd.y)
      img.occupied.emplace_back(edge_monomial(res, sd.new_edge));
    else
      img.occupied.emplace_back(occupied_monomial(res, vinv[u]));
  }
  for (HalfEdgeId h = 0; h < host.num_half_edges(); ++h) {
    if (!sd.in_delta_edge(Graph::edge_of(h))) {
      img.half_edge.emplace_back(half_edge_monomial(res, hinv[h]));
    } else if (host.vertex_of(h) == sd.x) {
      img.half_edge.emplace_back(half_edge_monomial(res, hx));
    } else if (host.vertex_of(h) == sd.y) {
      img.half_edge.emplace_back(half_edge_monomial(res, hy));
    } else {
      img.half_edge.emplace_back();
    }
  }
  for (EdgeId e = 0; e < host.num_edges(); ++e)
    img.edge.emplace_back(edge_monomial(res, sd.in_delta_edge(e) ? sd.new_edge : einv[e]));
  return make_multiplicative_map(host, res, std::move(img), "surgery");
}

}  // namespace braidhom
