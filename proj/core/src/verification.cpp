#include "braidhom/verification.hpp"

#include <chrono>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string hk(const std::string& space, int i, int k) {
  std::ostringstream os;
  os << "H_" << i << "(B_" << k << "(" << space << "))";
  return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, int copies) {
  std::vector<Integer> m;
  for (int c = 0; c < copies; ++c) m.insert(m.end(), a.moduli().begin(), a.moduli().end());
  return AbelianGroup(std::move(m));
}

int rank_of(const AbelianGroup& g, int modulus) { return modulus ? g.dimension() : g.rank(); }

std::string describe(const Subgroup& s) { return s.structure().to_string(); }

// Homology or, outside the populated range, nothing.
std::shared_ptr<const HomologyGroup> maybe_homology(const Graph& g, int i, int k, int modulus) {
  if (i < 0 || k < 0) return nullptr;
  return homology(g, i, k, ComplexVariant::automatic, modulus);
}

struct LesWindow {
  const ExplosionMaps& x;
  int modulus;

  AbelianGroup a_group(int i, int k) const {
    auto h = maybe_homology(x.exploded.graph, i, k, modulus);
    return h ? h->group() : AbelianGroup();
  }
  AbelianGroup b_group(int i, int k) const {
    auto h = maybe_homology(x.graph, i, k, modulus);
    return h ? h->group() : AbelianGroup();
  }
  AbelianGroup c_group(int i, int k) const {
    auto h = maybe_homology(x.exploded.graph, i - 1, k - 1, modulus);
    return direct_sum(h ? h->group() : AbelianGroup(), static_cast<int>(x.summands.size()));
  }

  Homomorphism iota(int i, int k) const {
    auto a = maybe_homology(x.exploded.graph, i, k, modulus);
    auto b = maybe_homology(x.graph, i, k, modulus);
    if (!a || !b) return Homomorphism(a_group(i, k), b_group(i, k), IntMatrix(b_group(i, k).dimension(), 0));
    return induced_map(x.iota(), *a, *b);
  }

  Homomorphism psi(int i, int k) const {
    const AbelianGroup src = b_group(i, k), dst = c_group(i, k);
    IntMatrix m(dst.dimension(), src.dimension());
    auto b = maybe_homology(x.graph, i, k, modulus);
    auto c = maybe_homology(x.exploded.graph, i - 1, k - 1, modulus);
    if (b && c) {
      const int block = c->group().dimension();
      for (int j = 0; j < src.dimension(); ++j) {
        auto comps = x.psi(b->representative(j), modulus);
        for (std::size_t s = 0; s < comps.size(); ++s) {
          Element e = c->coordinates(comps[s]);
          for (int r = 0; r < block; ++r) m(static_cast<int>(s) * block + r, j) = e[r];
        }
      }
    }
    return Homomorphism(src, dst, std::move(m));
  }

  Homomorphism delta(int i, int k) const {
    const AbelianGroup src = c_group(i, k), dst = a_group(i - 1, k);
    IntMatrix m(dst.dimension(), src.dimension());
    auto c = maybe_homology(x.exploded.graph, i - 1, k - 1, modulus);
    auto a = maybe_homology(x.exploded.graph, i - 1, k, modulus);
    if (c && a) {
      const int block = c->group().dimension();
      for (std::size_t s = 0; s < x.summands.size(); ++s) {
        ChainMap d = x.delta(static_cast<int>(s));
        for (int j = 0; j < block; ++j) {
          Element e = a->coordinates(d(c->representative(j)));
          for (int r = 0; r < dst.dimension(); ++r) m(r, static_cast<int>(s) * block + j) = e[r];
        }
      }
    }
    return Homomorphism(src, dst, std::move(m));
  }
};

Check exactness_check(const std::string& node, const Homomorphism& in, const Homomorphism& out) {
  Subgroup im = in.image();
  Subgroup ker = out.kernel();
  Check c;
  c.name = "exact at " + node;
  c.expected = "image = kernel";
  const bool in_ker = ker.contains(im);
  const bool eq = in_ker && im.contains(ker);
  c.pass = eq;
  c.computed = "image " + describe(im) + ", kernel " + describe(ker) + (eq ? ", equal" : "");
  if (!eq) {
    c.witness = !in_ker ? "image not contained in kernel" : "kernel / image = " + ker.quotient_by(im).invariants.to_string();
  }
  return c;
}

}  // namespace

VerificationReport check_les_exactness(const Graph& g, VertexId v, HalfEdgeId h0, int i_max, int k_max,
                                       int modulus) {
  const auto start = Clock::now();
  g.check_vertex(v);
  if (h0 != kNone) {
    g.check_half_edge(h0);
    if (g.vertex_of(h0) != v) throw PreconditionError("privileged half-edge is not at the exploded vertex");
  }
  ExplosionMaps x = explosion_maps(g, v, h0);
  VerificationReport rep;
  std::ostringstream subj;
  subj << "vertex explosion at " << g.vertex_name(v) << " over " << (modulus ? "F_" + std::to_string(modulus) : "Z");
  rep.subject = subj.str();
  LesWindow w{x, modulus};
  for (int k = 0; k <= k_max; ++k) {
    for (int i = 0; i <= i_max; ++i) {
      rep.add(exactness_check(hk("G", i, k), w.iota(i, k), w.psi(i, k)));
      if (i >= 1 && k >= 1) {
        rep.add(exactness_check("(+) " + hk("G_v", i - 1, k - 1), w.psi(i, k), w.delta(i, k)));
        rep.add(exactness_check(hk("G_v", i - 1, k), w.delta(i, k), w.iota(i - 1, k)));
      }
    }
    // Alternating ranks along the whole weight-k sequence.
    long long sum = 0;
    const int top = std::min(k, g.num_vertices()) + 1;
    for (int i = 0; i <= top; ++i)
      sum += (i % 2 ? -1 : 1) * (rank_of(w.a_group(i, k), modulus) - rank_of(w.b_group(i, k), modulus) +
             rank_of(w.c_group(i, k), modulus));
    Check c;
    c.name = "alternating rank sum, weight " + std::to_string(k);
    c.expected = "0";
    c.computed = std::to_string(sum);
    c.pass = sum == 0;
    rep.add(std::move(c));
  }
  rep.seconds = since(start);
  return rep;
}

VerificationReport check_main_theorem(const Graph& g, int k_max) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.exploratory = !is_planar(g);
  rep.subject = std::string("M(G) = H_2(B_k(G)), k <= ") + std::to_string(k_max) +
                (rep.exploratory ? " (nonplanar: exploratory)" : "");
  for (int k = 0; k <= k_max; ++k) {
    auto h = homology(g, 2, k);
    Subgroup m = m_submodule(g, k);
    Check c;
    c.name = "M = H_2 in weight " + std::to_string(k);
    c.expected = "H_2 = " + h->to_string() + ", quotient 0";
    auto q = m.quotient();
    c.computed = "H_2 = " + h->to_string() + ", quotient " + q.to_string();
    c.pass = m.is_whole();
    if (!c.pass) c.witness = "H_2 / M = " + q.to_string();
    rep.add(std::move(c));
  }
  rep.seconds = since(start);
  return rep;
}

bool PeskyResult::nonzero_in_quotient(const Chain& cycle) const {
  Subgroup psi_m(target->group(), psi_m_generators);
  return !psi_m.contains(target->coordinates(cycle));
}

PeskyResult find_pesky(const Graph& g, EdgeId e, int k) {
  if (k < 1) throw DomainError("find_pesky needs weight at least 1");
  const auto start = Clock::now();
  PeskyResult r;
  r.setup = pesky_setup(g, e);
  const PeskySetup& s = r.setup;
  const Graph& sub = s.subdivided.graph;
  const Graph& gw = s.exploded();

  auto h2 = homology(sub, 2, k);
  Subgroup m = m_submodule(sub, k);
  r.target = homology(gw, 1, k - 1);
  auto up = homology(gw, 1, k);
  const ExplosionMaps& x = s.maps;
  Homomorphism psi = induced_map([&x](const Chain& c) { return x.psi(c)[0]; }, *h2, *r.target);
  Homomorphism delta = induced_map(x.delta(0), *r.target, *up);
  Subgroup ker = delta.kernel();
  Subgroup psi_h = psi.image();
  Subgroup psi_m = psi.image_of(m);
  r.kernel_generators = ker.generators();
  r.psi_m_generators = psi_m.generators();

  r.report.subject = "pesky cycles for " + g.edge_name(e) + " in weight " + std::to_string(k);
  {
    Check c;
    c.name = "psi(H_2) = ker(delta)";
    c.expected = "equal";
    const bool eq = psi_h.equals(ker);
    c.computed = "psi(H_2) " + describe(psi_h) + ", ker(delta) " + describe(ker);
    c.pass = eq;
    r.report.add(std::move(c));
  }
  Check q;
  q.name = "ker(delta) / psi(M) = 0";
  q.expected = "0";
  if (!ker.contains(psi_m)) {
    q.computed = "psi(M) not inside ker(delta)";
    q.pass = false;
  } else {
    auto quo = ker.quotient_by(psi_m);
    r.quotient = quo.invariants;
    q.computed = quo.invariants.to_string();
    q.pass = quo.invariants.trivial();
    for (const auto& gen : quo.generators) {
      Chain w;
      for (int j = 0; j < r.target->group().dimension(); ++j)
        if (gen[j] != 0) w += r.target->representative(j) * gen[j];
      r.witnesses.push_back(std::move(w));
    }
    if (!q.pass && !r.witnesses.empty()) q.witness = r.witnesses.front().to_string(gw);
  }
  r.report.add(std::move(q));
  r.report.seconds = since(start);
  return r;
}

VerificationReport check_surgery_retraction(const SurgeryDescriptor& sd, int i_max, int k_max) {
  const auto start = Clock::now();
  auto sections = sd.sections();
  if (sections.empty()) throw PreconditionError("surgery has no section");
  VerificationReport rep;
  rep.subject = "surgery retraction onto edge " + sd.result.edge_name(sd.new_edge);
  ChainMap sigma = surgery_map(sd);
  for (std::size_t sidx = 0; sidx < sections.size(); ++sidx) {
    ChainMap iota = embedding_map(sd.result, sd.host, sections[sidx]);
    for (int k = 0; k <= k_max; ++k)
      for (int i = 0; i <= i_max; ++i) {
        auto h = homology(sd.result, i, k);
        Homomorphism f = induced_map([&](const Chain& c) { return sigma(iota(c)); }, *h, *h);
        Check c;
        c.name = "section " + std::to_string(sidx) + ": sigma iota = id on " + hk("result", i, k);
        c.expected = "identity";
        c.pass = f.is_identity();
        c.computed = c.pass ? "identity" : "not the identity";
        if (!c.pass) c.witness = "group " + h->to_string();
        rep.add(std::move(c));
      }
  }
  // Compatibility with stabilization along edges of the collapsed subgraph.
  for (int k = 0; k < k_max; ++k)
    for (int i = 0; i <= i_max; ++i) {
      auto src = homology(sd.host, i, k);
      auto dst = homology(sd.result, i, k + 1);
      bool ok = true;
      for (EdgeId e : sd.delta_edges) {
        ChainMap stab_e = edge_stabilization_map(sd.host, e);
        ChainMap stab_new = edge_stabilization_map(sd.result, sd.new_edge);
        for (int j = 0; j < src->group().dimension() && ok; ++j) {
          Chain x = src->representative(j);
          ok = dst->group().is_zero(
              dst->group().add(dst->coordinates(sigma(stab_e(x))),
                               dst->group().scale(dst->coordinates(stab_new(sigma(x))), -1)));
        }
      }
      Check c;
      c.name = "sigma(e x) = e_xy sigma(x) on " + hk("host", i, k);
      c.expected = "equal";
      c.computed = ok ? "equal" : "differ";
      c.pass = ok;
      rep.add(std::move(c));
    }
  rep.seconds = since(start);
  return rep;
}

NonplanarExample nonplanar_example() {
  std::vector<std::string> names{"a1", "a2", "a3", "b1", "b2", "b3", "c"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  for (int i = 1; i <= 3; ++i) edges.emplace_back("c", "a" + std::to_string(i));
  NonplanarExample ex;
  ex.graph = build_graph(names, edges);
  ex.edge = 9;  // c - a1
  // Explosion keeps the ids of the original vertices and edges.
  auto edge = [](int i, int j) { return (i - 1) * 3 + (j - 1); };
  PeskySetup s = pesky_setup(ex.graph, ex.edge);
  ex.red_loop = make_cycle(s.exploded(), {edge(2, 2), edge(3, 2), edge(3, 3), edge(2, 3)});
  return ex;
}

VerificationReport nonplanar_demo(int k) {
  const auto start = Clock::now();
  NonplanarExample ex = nonplanar_example();
  VerificationReport rep;
  rep.exploratory = k != 2;
  rep.subject = "nonplanar counterexample in weight " + std::to_string(k);
  {
    auto cycles = enumerate_cycles(ex.graph);
    bool any_disjoint = false;
    for (std::size_t a = 0; a < cycles.size() && !any_disjoint; ++a)
      for (std::size_t b = a + 1; b < cycles.size() && !any_disjoint; ++b) {
        std::vector<VertexId> common;
        std::vector<VertexId> va = cycles[a].vertices, vb = cycles[b].vertices;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
        any_disjoint = common.empty();
      }
    rep.add({"no two vertex-disjoint cycles", "none", any_disjoint ? "found" : "none", !any_disjoint, ""});
  }
  Subgroup m = m_submodule(ex.graph, k);
  rep.add({"M in weight " + std::to_string(k), "0", m.is_zero() ? "0" : describe(m), m.is_zero(), ""});
  auto h2 = homology(ex.graph, 2, k);
  rep.add({"H_2(B_" + std::to_string(k) + ")", "nonzero", h2->to_string(), !h2->group().is_trivial(), ""});

  PeskyResult p = find_pesky(ex.graph, ex.edge, k);
  rep.add({"ker(delta) / psi(M)", "nonzero", p.quotient.to_string(), !p.quotient.trivial(),
           p.witnesses.empty() ? "" : p.witnesses.front().to_string(p.setup.exploded())});

  const Graph& gw = p.setup.exploded();
  StandardSummand b{loop_cycle(gw, ex.red_loop), Chain(Monomial::unit(gw))};
  if (k > 2) {
    std::vector<int> exps(gw.num_edges(), 0);
    exps[ex.red_loop.edges.front()] = k - 2;
    b.multiplier = Chain(edge_monomial(gw, exps));
  }
  StandardCycleFlags f = standard_cycle_flags(p.setup, {b});
  std::string flags = std::string("P=") + (f.P ? "1" : "0") + " E=" + (f.E ? "1" : "0") + " S=" + (f.S ? "1" : "0") +
                      " K=" + (f.K ? "1" : "0");
  rep.add({"red loop is pesky", "P=1 E=1 S=1 K=1", flags, f.pesky(), ""});
  const Chain bc = standard_cycle_chain(p.setup, {b});
  const bool survives = p.nonzero_in_quotient(bc);
  rep.add({"red loop survives in the quotient", "nonzero", survives ? "nonzero" : "zero", survives,
           bc.to_string(gw)});
  rep.seconds = since(start);
  return rep;
}

}  // namespace braidhom
