#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidhom/abelian_group.hpp"
#include "braidhom/chain.hpp"
#include "braidhom/graph.hpp"
#include "braidhom/matrix.hpp"

namespace braidhom::fixtures {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Planar graph with two essential vertices "t" and "b" joined by four arcs
/// (one direct through "g", two through "bl"/"br", one through "r1"-"r2"),
/// with leaves at both ends. Variants 1..3 add an edge e0 in different spots.
inline Graph two_essential_family(int variant) {
  std::vector<std::string> v{"t", "b", "t1", "t2", "b1", "b2", "b3", "g", "bl", "br", "r1", "r2"};
  std::vector<std::pair<std::string, std::string>> e{
      {"t", "g"},  {"g", "b"},   {"t", "bl"}, {"bl", "b"}, {"t", "br"}, {"br", "b"},  {"t", "r1"},
      {"r1", "r2"}, {"r2", "b"}, {"t", "t1"}, {"t", "t2"}, {"b", "b1"}, {"b", "b2"}, {"b", "b3"}};
  if (variant == 1) e.emplace_back("bl", "br");
  if (variant == 2) e.emplace_back("r1", "t");
  if (variant == 3) e.emplace_back("r1", "r2");
  return build_graph(v, e);
}

inline Graph star_with_loops() {
  // Center with three leaves, a loop at the center and one at a leaf.
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {0, 0}, {1, 1}});
}

inline Graph spider() {
  // Two branch vertices joined by a path; a tree with two essential vertices.
  return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}});
}

inline std::vector<NamedGraph> planar_battery() {
  std::vector<NamedGraph> out{
      {"path4", path_graph(4)},         {"star3", star_graph(3)},           {"star4", star_graph(4)},
      {"spider", spider()},             {"lollipop", lollipop_graph()},     {"handcuffs", handcuffs_graph()},
      {"star-loops", star_with_loops()}, {"cycle1", cycle_graph(1)},        {"cycle3", cycle_graph(3)},
      {"cycle4", cycle_graph(4)},       {"theta3", theta_graph(3)},         {"theta4", theta_graph(4)},
      {"theta5", theta_graph(5)},       {"K4", complete_graph(4)},          {"wheel4", wheel_graph(4)},
  };
  for (int variant = 0; variant < 4; ++variant)
    out.push_back({"two-essential/" + std::to_string(variant), two_essential_family(variant)});
  return out;
}

inline std::vector<NamedGraph> les_corpus() {
  return {{"theta3", theta_graph(3)},       {"theta4", theta_graph(4)}, {"lollipop", lollipop_graph()},
          {"handcuffs", handcuffs_graph()}, {"S4", star_graph(4)},       {"K4", complete_graph(4)}};
}

/// Random multigraph without isolated vertices. Loops and parallel edges occur.
inline Graph random_graph(std::mt19937& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  // A spanning path keeps every vertex covered.
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  if (n == 1) edges.emplace_back(0, 0);
  std::uniform_int_distribution<int> extra(0, std::max(0, max_edges - static_cast<int>(edges.size())));
  for (int j = extra(rng); j > 0; --j) edges.emplace_back(pick(rng), pick(rng));
  return Graph(n, edges);
}

inline IntMatrix random_matrix(std::mt19937& rng, int max_dim, int bound) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> sparse(0, 3);
  IntMatrix m(dim(rng), dim(rng));
  const bool thin = sparse(rng) == 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = (thin && sparse(rng) != 0) ? 0 : entry(rng);
  return m;
}

/// Random sequence of subdivisions and smoothings; the result is homeomorphic to g.
inline Graph random_homeomorph(std::mt19937& rng, Graph g, int steps) {
  for (int s = 0; s < steps; ++s) {
    std::vector<VertexId> bivalent;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.valence(v) != 2) continue;
      const auto& hs = g.half_edges_at(v);
      // Smoothing the only vertex of a circle is not defined.
      if (Graph::edge_of(hs[0]) == Graph::edge_of(hs[1])) continue;
      bivalent.push_back(v);
    }
    if (!bivalent.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      g = smooth(g, bivalent[std::uniform_int_distribution<std::size_t>(0, bivalent.size() - 1)(rng)]).graph;
    } else if (g.num_edges() > 0) {
      g = subdivide(g, std::uniform_int_distribution<int>(0, g.num_edges() - 1)(rng)).graph;
    }
  }
  return g;
}

inline AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts) {
  std::vector<Integer> moduli;
  for (const auto& p : parts) moduli.insert(moduli.end(), p.moduli().begin(), p.moduli().end());
  return AbelianGroup(moduli);
}

/// Matrices side by side.
inline IntMatrix hstack(const std::vector<IntMatrix>& blocks, int rows) {
  int cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  IntMatrix out(rows, cols);
  int at = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < b.cols(); ++c) out(r, at + c) = b(r, c);
    at += b.cols();
  }
  return out;
}

}  // namespace braidhom::fixtures
