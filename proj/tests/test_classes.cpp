#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "braidhom/classes.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/verification.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace braidhom;

namespace {

bool homologous(const HomologyGroup& h, const Chain& a, const Chain& b) { return h.is_boundary(a - b); }

bool generates(const HomologyGroup& h, const Chain& c) {
  Subgroup s(h.group(), {h.coordinates(c)});
  return s.is_whole();
}

}  // namespace

TEST(LoopCycle, LollipopIsDifferenceOfLoopHalfEdges) {
  const Graph l = lollipop_graph();
  const GeneratorClass b = loop_cycle(l, make_cycle(l, {0}));
  Chain expected(half_edge_monomial(l, 0));
  expected.add(half_edge_monomial(l, 1), -1);
  EXPECT_TRUE(b.chain == expected || b.chain == -expected);
  EXPECT_EQ(b.degree, 1);
  EXPECT_EQ(b.weight, 1);
  EXPECT_EQ(b.support_vertices, std::vector<VertexId>{0});
  EXPECT_EQ(b.support_edges, std::vector<EdgeId>{0});
}

TEST(LoopCycle, EveryCycleIsClosed) {
  for (const auto& ng : fixtures::planar_battery())
    for (const auto& c : all_loop_cycles(ng.graph)) {
      EXPECT_TRUE(boundary(ng.graph, c.chain).is_zero()) << ng.name << " " << c.provenance;
      EXPECT_EQ(c.chain.bidegree(), std::make_pair(1, 1));
    }
}

TEST(LoopCycle, GeneratesFirstHomologyOfCircle) {
  const Graph c3 = cycle_graph(3);
  auto h = homology(c3, 1, 1);
  ASSERT_EQ(h->to_string(), "Z^1");
  EXPECT_TRUE(generates(*h, loop_cycle(c3, make_cycle(c3, {0, 1, 2})).chain));
}

TEST(LoopCycle, RejectsNonCycles) {
  const Graph p = path_graph(3);
  Cycle bogus;
  bogus.vertices = {0, 1};
  bogus.half_edges = {0, 2};
  bogus.edges = {0, 1};
  EXPECT_THROW(loop_cycle(p, bogus), PreconditionError);
  EXPECT_THROW(loop_cycle(p, Cycle{}), PreconditionError);
}

TEST(StarCycle, GeneratesTripodHomology) {
  const Graph s3 = star_graph(3);
  const auto& hs = s3.half_edges_at(0);
  const GeneratorClass a = star_cycle(s3, hs[0], hs[1], hs[2]);
  EXPECT_EQ(a.chain.bidegree(), std::make_pair(1, 2));
  EXPECT_EQ(a.support_vertices, std::vector<VertexId>{0});
  EXPECT_TRUE(a.rigid);
  auto h = homology(s3, 1, 2);
  ASSERT_EQ(h->to_string(), "Z^1");
  EXPECT_TRUE(generates(*h, a.chain));
}

TEST(StarCycle, SwapNegates) {
  const Graph s3 = star_graph(3);
  const auto& hs = s3.half_edges_at(0);
  const Chain a = star_cycle(s3, hs[0], hs[1], hs[2]).chain;
  const Chain b = star_cycle(s3, hs[1], hs[0], hs[2]).chain;
  EXPECT_TRUE(homologous(*homology(s3, 1, 2), a, -b));
  EXPECT_FALSE(homologous(*homology(s3, 1, 2), a, b));
}

TEST(StarCycle, ThetaStarIsNotRigid) {
  const Graph t = theta_graph(3);
  const auto& hs = t.half_edges_at(0);
  EXPECT_FALSE(star_cycle(t, hs[0], hs[1], hs[2]).rigid);
  EXPECT_FALSE(is_rigid_star(t, hs[0], hs[1], hs[2]));
}

TEST(StarCycle, RigidityOnLollipop) {
  // The loop's ends stay together after explosion; the stick leaves on its own.
  const Graph l = lollipop_graph();
  EXPECT_TRUE(star_cycle(l, 0, 1, 2).rigid);
}

TEST(StarCycle, Preconditions) {
  const Graph p = path_graph(3);
  EXPECT_THROW(star_cycle(p, 0, 1, 2), PreconditionError);
  const Graph s3 = star_graph(3);
  const auto& hs = s3.half_edges_at(0);
  EXPECT_THROW(star_cycle(s3, hs[0], hs[0], hs[1]), PreconditionError);
  EXPECT_THROW(star_cycle(s3, hs[0], hs[1], 999), std::exception);
}

TEST(StarCycle, EnumerationCountsSubsets) {
  EXPECT_EQ(all_star_cycles(star_graph(4)).size(), 4u);
  EXPECT_EQ(all_star_cycles(theta_graph(3)).size(), 2u);
  EXPECT_EQ(all_star_cycles(path_graph(5)).size(), 0u);
  EXPECT_EQ(all_star_cycles(complete_bipartite_graph(3, 3)).size(), 6u);
}

TEST(ThetaCycle, ExpansionHasSixNonvanishingSummands) {
  const Graph t = theta_graph(4);
  auto h = [](int vertex, int j) { return 2 * j + vertex; };
  std::array<int, 4> s{0, 1, 2, 3};
  int nonvanishing = 0, with_fixed_last = 0;
  do {
    Chain stab(edge_monomial(t, 0));
    stab.add(edge_monomial(t, s[2]), -1);
    Chain f1(half_edge_monomial(t, h(0, s[0])));
    f1.add(half_edge_monomial(t, h(0, 0)), -1);
    Chain f2(half_edge_monomial(t, h(1, s[1])));
    f2.add(half_edge_monomial(t, h(1, 0)), -1);
    if (!multiply(multiply(stab, f1), f2).is_zero()) {
      ++nonvanishing;
      with_fixed_last += s[3] == 0;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  EXPECT_EQ(nonvanishing, 6);
  EXPECT_EQ(with_fixed_last, 6);
}

TEST(ThetaCycle, OnThetaFourGenerates) {
  const Graph t = theta_graph(4);
  const auto embs = enumerate_theta_embeddings(t);
  ASSERT_EQ(embs.size(), 1u);
  const GeneratorClass c = theta_cycle(t, embs[0]);
  EXPECT_EQ(c.kind, ClassKind::theta);
  EXPECT_EQ(c.chain.bidegree(), std::make_pair(2, 3));
  EXPECT_TRUE(boundary(t, c.chain).is_zero());
  EXPECT_TRUE(boundary(t, a2_chain()).is_zero());
  EXPECT_TRUE(c.chain == a2_chain() || c.chain == -a2_chain());
  auto h = homology(t, 2, 3);
  ASSERT_EQ(h->to_string(), "Z^1");
  EXPECT_TRUE(generates(*h, c.chain));
}

TEST(ThetaCycle, AnchorDoesNotChangeTheClass) {
  for (const Graph& g : {theta_graph(5), subdivide(subdivide(theta_graph(4), 0).graph, 2).graph}) {
    auto h = homology(g, 2, 3);
    for (const auto& emb : enumerate_theta_embeddings(g)) {
      const GeneratorClass first = theta_cycle(g, emb, EdgeAnchor::first);
      const GeneratorClass last = theta_cycle(g, emb, EdgeAnchor::last);
      EXPECT_TRUE(homologous(*h, first.chain, last.chain));
      EXPECT_FALSE(h->is_boundary(first.chain));
    }
  }
}

TEST(ThetaCycle, ThetaFiveEmbeddingsSpanTheirPart) {
  const Graph t = theta_graph(5);
  EXPECT_EQ(all_theta_cycles(t).size(), 5u);
  for (const auto& c : all_theta_cycles(t)) EXPECT_EQ(c.support_edges.size(), 4u);
}

TEST(ExternalProduct, HandcuffLoops) {
  const Graph g = handcuffs_graph();
  const GeneratorClass a = loop_cycle(g, make_cycle(g, {0}));
  const GeneratorClass b = loop_cycle(g, make_cycle(g, {3}));
  const GeneratorClass ab = external_product(a, b);
  EXPECT_EQ(ab.chain.bidegree(), std::make_pair(2, 2));
  EXPECT_TRUE(boundary(g, ab.chain).is_zero());
  auto h = homology(g, 2, 2);
  EXPECT_EQ(h->to_string(), "Z^1");
  EXPECT_EQ(fixtures::oracle_homology(g, 2, 2).rank, 1);
  EXPECT_FALSE(h->is_boundary(ab.chain));
}

TEST(ExternalProduct, LoopTimesStar) {
  const Graph g = handcuffs_graph();
  const GeneratorClass loop = loop_cycle(g, make_cycle(g, {3}));
  const GeneratorClass star = star_cycle(g, 0, 1, 2);  // at a: both loop ends and the handle
  const GeneratorClass p = external_product(star, loop);
  EXPECT_EQ(p.degree, 2);
  EXPECT_EQ(p.weight, 3);
  EXPECT_EQ(p.chain.bidegree(), std::make_pair(2, 3));
  EXPECT_TRUE(boundary(g, p.chain).is_zero());
}

TEST(ExternalProduct, OverlappingSupportsRejected) {
  const Graph t = theta_graph(3);
  const auto loops = all_loop_cycles(t);
  ASSERT_GE(loops.size(), 2u);
  EXPECT_THROW(external_product(loops[0], loops[1]), PreconditionError);
  const auto& hs = t.half_edges_at(0);
  EXPECT_THROW(external_product(loops[0], star_cycle(t, hs[0], hs[1], hs[2])), PreconditionError);
}

TEST(ExternalProduct, UnitIsIdentity) {
  const Graph g = handcuffs_graph();
  const GeneratorClass a = loop_cycle(g, make_cycle(g, {0}));
  GeneratorClass unit;
  unit.kind = ClassKind::stabilized;
  unit.chain = Chain(Monomial::unit(g));
  const GeneratorClass p = external_product(a, unit);
  EXPECT_EQ(p.chain, a.chain);
  EXPECT_EQ(p.degree, a.degree);
  EXPECT_EQ(p.weight, a.weight);
}

TEST(Stabilize, WeightZeroIsIdentity) {
  const Graph l = lollipop_graph();
  const GeneratorClass b = loop_cycle(l, make_cycle(l, {0}));
  const GeneratorClass s = stabilize(l, b, std::vector<int>(l.num_edges(), 0));
  EXPECT_EQ(s.chain, b.chain);
  EXPECT_EQ(s.kind, b.kind);
  EXPECT_EQ(s.weight, b.weight);
}

TEST(Stabilize, AddsWeightOnly) {
  const Graph l = lollipop_graph();
  const GeneratorClass b = loop_cycle(l, make_cycle(l, {0}));
  const GeneratorClass s = stabilize(l, b, {2, 1});
  EXPECT_EQ(s.kind, ClassKind::stabilized);
  EXPECT_EQ(s.degree, 1);
  EXPECT_EQ(s.weight, 4);
  EXPECT_EQ(s.chain.bidegree(), std::make_pair(1, 4));
  EXPECT_TRUE(boundary(l, s.chain).is_zero());
}

TEST(Relations, LollipopQRelation) {
  // e' is the loop (edge 0) and e the stick (edge 1).
  const Graph l = lollipop_graph();
  const GeneratorClass beta = loop_cycle(l, make_cycle(l, {0}));
  const GeneratorClass alpha = star_cycle(l, 0, 1, 2);
  const Chain lhs = stabilize(l, beta, {0, 1}).chain - stabilize(l, beta, {1, 0}).chain;
  auto h = homology(l, 1, 2);
  EXPECT_TRUE(homologous(*h, lhs, alpha.chain));
  EXPECT_FALSE(h->is_boundary(alpha.chain));
}

TEST(Relations, QRelationOnEmbeddedLollipops) {
  // Every vertex with a self-loop and another edge carries a lollipop.
  for (const auto& ng : fixtures::planar_battery()) {
    const Graph& g = ng.graph;
    auto h = homology(g, 1, 2);
    for (EdgeId loop = 0; loop < g.num_edges(); ++loop) {
      if (!g.is_self_loop(loop)) continue;
      const VertexId v = g.endpoints(loop).first;
      const GeneratorClass beta = loop_cycle(g, make_cycle(g, {loop}));
      for (HalfEdgeId stick : g.half_edges_at(v)) {
        const EdgeId e = Graph::edge_of(stick);
        if (e == loop) continue;
        std::vector<int> on_e(g.num_edges(), 0), on_loop(g.num_edges(), 0);
        on_e[e] = 1;
        on_loop[loop] = 1;
        const Chain lhs = stabilize(g, beta, on_e).chain - stabilize(g, beta, on_loop).chain;
        const Chain alpha = star_cycle(g, 2 * loop, 2 * loop + 1, stick).chain;
        EXPECT_TRUE(homologous(*h, lhs, alpha) || homologous(*h, lhs, -alpha)) << ng.name;
      }
    }
  }
}

TEST(Relations, ThetaStarsAtBothVertices) {
  const Graph t = theta_graph(3);
  auto h = homology(t, 1, 2);
  const Chain a = star_cycle(t, 0, 2, 4).chain;
  const Chain a_prime = star_cycle(t, 1, 5, 3).chain;
  EXPECT_TRUE(homologous(*h, a, a_prime));
  EXPECT_FALSE(h->is_boundary(a));
}

TEST(Relations, KThreeThreeStarsAgreeUpToSign) {
  const Graph k33 = complete_bipartite_graph(3, 3);
  auto h = homology(k33, 1, 2);
  const auto stars = all_star_cycles(k33);
  for (const auto& s : stars) {
    EXPECT_FALSE(h->is_boundary(s.chain));
    EXPECT_TRUE(h->is_boundary(s.chain * 2));
    EXPECT_TRUE(homologous(*h, s.chain, stars[0].chain) || homologous(*h, s.chain, -stars[0].chain));
  }
}

TEST(MSubmodule, Examples) {
  EXPECT_TRUE(m_submodule(theta_graph(4), 3).is_whole());
  for (int k = 0; k <= 4; ++k) {
    EXPECT_TRUE(m_submodule(star_graph(3), k).is_zero()) << k;
    EXPECT_TRUE(homology(star_graph(3), 2, k)->group().is_trivial()) << k;
  }
  EXPECT_TRUE(m_submodule(nonplanar_example().graph, 2).is_zero());
  EXPECT_THROW(m_submodule(theta_graph(3), -1), DomainError);
}

TEST(MSubmodule, GeneratorsAreCyclesOfTheRightBidegree) {
  for (const Graph& g : {handcuffs_graph(), theta_graph(4), fixtures::star_with_loops()}) {
    for (int k = 2; k <= 4; ++k) {
      const auto gens = m_generators(g, k);
      Subgroup span(homology(g, 2, k)->group());
      for (const auto& c : gens) {
        EXPECT_EQ(c.chain.bidegree(), std::make_pair(2, k));
        EXPECT_TRUE(boundary(g, c.chain).is_zero());
        span.add(homology(g, 2, k)->coordinates(c.chain));
      }
      EXPECT_TRUE(span.equals(m_submodule(g, k)));
    }
  }
}

TEST(MSubmodule, ProductsOfDisjointAtomsLieInside) {
  const Graph g = handcuffs_graph();
  const GeneratorClass a = loop_cycle(g, make_cycle(g, {0}));
  const GeneratorClass b = loop_cycle(g, make_cycle(g, {3}));
  Subgroup m3 = m_submodule(g, 3);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::vector<int> ex(g.num_edges(), 0);
    ex[e] = 1;
    EXPECT_TRUE(m3.contains(homology(g, 2, 3)->coordinates(stabilize(g, external_product(a, b), ex).chain)));
  }
}

TEST(PeskySetup, Labels) {
  const Graph t = theta_graph(3);
  const PeskySetup s = pesky_setup(t, 1);
  EXPECT_EQ(s.subdivided.graph.num_vertices(), 3);
  EXPECT_EQ(s.exploded().num_vertices(), 4);
  EXPECT_EQ(s.exploded().num_edges(), 4);
  EXPECT_EQ(s.e, 1);
  EXPECT_EQ(s.e_prime, 3);
  EXPECT_NE(s.w, s.w_prime);
  EXPECT_EQ(s.exploded().valence(s.w), 1);
  EXPECT_EQ(s.exploded().valence(s.w_prime), 1);
  EXPECT_THROW(pesky_setup(lollipop_graph(), 0), PreconditionError);
  EXPECT_THROW(pesky_setup(disjoint_union(path_graph(2), path_graph(2)), 0), PreconditionError);
}

TEST(StandardFlags, NonplanarRedLoopIsPesky) {
  const NonplanarExample ex = nonplanar_example();
  const PeskySetup s = pesky_setup(ex.graph, ex.edge);
  const Graph& gw = s.exploded();
  const StandardCycleFlags f = standard_cycle_flags(s, {{loop_cycle(gw, ex.red_loop), Chain(Monomial::unit(gw))}});
  EXPECT_TRUE(f.P);
  EXPECT_TRUE(f.E);
  EXPECT_TRUE(f.S);
  EXPECT_TRUE(f.K);
  EXPECT_TRUE(f.pesky());
  EXPECT_FALSE(f.path_witness || f.edge_witness || f.cut_witness);
}

TEST(StandardFlags, TwoEssentialVerticesViolateS) {
  const Graph g = fixtures::two_essential_family(0);
  const VertexId t = *g.find_vertex("t"), b = *g.find_vertex("b");
  // Edge t-g lies on the direct arc, not on a tail.
  const PeskySetup s = pesky_setup(g, 0);
  const Graph& gw = s.exploded();
  std::vector<GeneratorClass> atoms = all_loop_cycles(gw);
  for (auto& c : all_star_cycles(gw)) atoms.push_back(std::move(c));
  ASSERT_FALSE(atoms.empty());
  for (const auto& c : atoms) {
    const StandardCycleFlags f = standard_cycle_flags(s, {{c, Chain(Monomial::unit(gw))}});
    EXPECT_FALSE(f.S) << c.provenance;
    ASSERT_TRUE(f.cut_witness.has_value());
    EXPECT_TRUE(*f.cut_witness == t || *f.cut_witness == b);
    EXPECT_FALSE(f.pesky());
  }
}

TEST(StandardFlags, WitnessesOnFailures) {
  const Graph t = theta_graph(3);
  const PeskySetup s = pesky_setup(t, 0);
  const Graph& gw = s.exploded();
  // A loop avoiding the new vertices: w reaches w' through neither.
  const auto loops = all_loop_cycles(gw);
  ASSERT_EQ(loops.size(), 1u);
  std::vector<int> off(gw.num_edges(), 0);
  off[s.e] = 1;
  const StandardCycleFlags f = standard_cycle_flags(s, {{loops[0], Chain(edge_monomial(gw, off))}});
  EXPECT_FALSE(f.E);
  ASSERT_TRUE(f.edge_witness.has_value());
  EXPECT_EQ(*f.edge_witness, s.e);
  EXPECT_TRUE(f.P);
  // A star away from the theta leaves a path from w to w' around it.
  const Graph tail = build_graph({"x", "y", "z", "l1", "l2"},
                                 {{"x", "y"}, {"x", "y"}, {"x", "y"}, {"y", "z"}, {"z", "l1"}, {"z", "l2"}});
  const PeskySetup st = pesky_setup(tail, 0);
  const VertexId z = *tail.find_vertex("z");
  const auto& hz = st.exploded().half_edges_at(z);
  const StandardCycleFlags g = standard_cycle_flags(st, {{star_cycle(st.exploded(), hz[0], hz[1], hz[2]),
                                                         Chain(Monomial::unit(st.exploded()))}});
  EXPECT_FALSE(g.P);
  ASSERT_TRUE(g.path_witness.has_value());
  for (VertexId u : path_interior(st.exploded(), *g.path_witness)) EXPECT_NE(u, z);
  EXPECT_TRUE(g.S);
}

TEST(StandardFlags, TreeHasNothingToFlag) {
  const Graph s3 = star_graph(3);
  const PeskySetup s = pesky_setup(s3, 0);
  EXPECT_TRUE(all_loop_cycles(s.exploded()).empty());
  const StandardCycleFlags f = standard_cycle_flags(s, {});
  EXPECT_TRUE(f.pesky());
}

TEST(StandardFlags, RejectsNonStandardSummands) {
  const Graph t = theta_graph(4);
  const PeskySetup s = pesky_setup(t, 0);
  GeneratorClass theta = theta_cycle(t, enumerate_theta_embeddings(t)[0]);
  EXPECT_THROW(standard_cycle_flags(s, {{theta, Chain(Monomial::unit(s.exploded()))}}), PreconditionError);
}

TEST(PeskyTarget, NonRigidStarsLieInPsiM) {
  // Only edges whose removal keeps the graph connected; a bridge leaves w and w' unjoined.
  for (const Graph& g : {theta_graph(3), complete_graph(4), fixtures::two_essential_family(1), wheel_graph(4)}) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.is_self_loop(e) || !remove_edges(g, std::vector<EdgeId>{e}).graph.is_connected()) continue;
      const PeskyResult r = find_pesky(g, e, 3);
      Subgroup psi_m(r.target->group(), r.psi_m_generators);
      for (const auto& a : all_star_cycles(r.setup.exploded())) {
        if (a.rigid) continue;
        EXPECT_TRUE(psi_m.contains(r.target->coordinates(a.chain))) << a.provenance << " edge " << e;
      }
    }
  }
}
