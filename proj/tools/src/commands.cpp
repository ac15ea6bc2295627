#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidhom/classes.hpp"
#include "braidhom/errors.hpp"
#include "braidhom/graph_analysis.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/verification.hpp"
#include "graph_document.hpp"
#include "result_cache.hpp"

namespace braidhom::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Options {
  bool json = false;
  std::string cache_dir;
};

struct Input {
  GraphDocument doc;
  Graph graph;
  std::string label;
};

Input load_input(const std::string& path) {
  Input in;
  in.doc = read_document_file(path);
  in.graph = to_graph(in.doc);
  in.label = in.doc.name.empty() ? std::filesystem::path(path).stem().string() : in.doc.name;
  return in;
}

ComplexVariant parse_variant(const std::string& s) {
  if (s == "auto") return ComplexVariant::automatic;
  if (s == "reduced") return ComplexVariant::reduced;
  if (s == "unreduced") return ComplexVariant::unreduced;
  throw CLI::ValidationError("--variant", "expected auto, reduced or unreduced");
}

VertexId vertex_arg(const Graph& g, const std::string& name) {
  if (auto v = g.find_vertex(name)) return *v;
  throw LookupError("no vertex named \"" + name + "\"");
}

EdgeId edge_arg(const Graph& g, const std::string& ref) {
  if (auto e = g.find_edge(ref)) return *e;
  if (!ref.empty() && ref.find_first_not_of("0123456789") == std::string::npos) {
    const long long i = std::stoll(ref);
    if (i < g.num_edges()) return static_cast<EdgeId>(i);
  }
  throw LookupError("no edge \"" + ref + "\" (use an index into \"edges\" or a name e<N>)");
}

json integers(const std::vector<Integer>& xs) {
  json j = json::array();
  for (const auto& x : xs) {
    if (x >= 0 && x <= Integer(INT64_MAX)) {
      j.push_back(static_cast<std::int64_t>(x));
    } else {
      j.push_back(x.str());
    }
  }
  return j;
}

// Homology group through the optional on-disk cache.
struct GroupLookup {
  AbelianGroup group;
  ComplexVariant variant = ComplexVariant::automatic;
  bool cached = false;
  double seconds = 0;         ///< spent computing (0 when served from the cache)
  double lookup_seconds = 0;  ///< spent reading the cache
};

class Engine {
 public:
  explicit Engine(const Options& o) {
    std::string dir = o.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("BRAIDHOM_CACHE_DIR")) dir = env;
    if (!dir.empty()) cache_.emplace(dir);
  }

  GroupLookup group(const Input& in, int i, int k, ComplexVariant variant, int modulus) const {
    const auto start = Clock::now();
    GroupLookup r;
    r.variant = resolve_variant(in.graph, variant);
    CacheKey key{canonical_graph_text(in.doc), r.variant, i, k, modulus};
    if (cache_) {
      if (auto hit = cache_->load(key)) {
        r.group = AbelianGroup(hit->moduli);
        r.cached = true;
        r.lookup_seconds = since(start);
        return r;
      }
    }
    auto h = homology(in.graph, i, k, r.variant, modulus);
    r.group = h->group();
    r.seconds = since(start);
    if (cache_) cache_->store(key, {r.group.moduli(), r.seconds});
    return r;
  }

 private:
  std::optional<ResultCache> cache_;
};

std::string hk(int i, int k, const std::string& label) {
  return "H_" + std::to_string(i) + "(B_" + std::to_string(k) + "(" + label + "))";
}

json group_json(const AbelianGroup& g) {
  return {{"group", g.to_string()},
          {"rank", g.rank()},
          {"dimension", g.dimension()},
          {"torsion", integers(g.torsion())},
          {"moduli", integers(g.moduli())}};
}

json check_json(const Check& c) {
  return {{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}, {"witness", c.witness}};
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  int passed = 0;
  for (const auto& c : r.checks) {
    checks.push_back(check_json(c));
    passed += c.pass;
  }
  return {{"subject", r.subject},
          {"passed", r.passed()},
          {"exploratory", r.exploratory},
          {"checks_passed", passed},
          {"checks_total", r.checks.size()},
          {"seconds", r.seconds},
          {"checks", checks}};
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << r.subject << "\n";
  int passed = 0;
  for (const auto& c : r.checks) {
    passed += c.pass;
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.computed;
    if (!c.pass) {
      out << " (expected " << c.expected << ")";
      if (!c.witness.empty()) out << "\n        witness: " << c.witness;
    }
    out << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size() << " checks)";
  if (r.exploratory) out << ", exploratory";
  out << "\n";
}

int emit_report(const Options& o, std::ostream& out, const std::string& command, const VerificationReport& r,
                json extra = json::object()) {
  if (o.json) {
    json j = report_json(r);
    j["command"] = command;
    for (auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump(2) << "\n";
  } else {
    print_report(out, r);
  }
  return r.passed() ? kExitPass : kExitFailed;
}

// ---------------------------------------------------------------------------

struct HomologyArgs {
  std::string file;
  int degree = 0;
  int weight = 0;
  std::string variant = "auto";
  int modulus = 0;
  bool representatives = false;
};

int cmd_homology(const Options& o, const HomologyArgs& a, std::ostream& out) {
  Input in = load_input(a.file);
  Engine engine(o);
  const ComplexVariant v = parse_variant(a.variant);
  json j;
  GroupLookup r;
  std::vector<std::string> reps;
  if (a.representatives) {
    const auto start = Clock::now();
    auto h = homology(in.graph, a.degree, a.weight, v, a.modulus);
    r.group = h->group();
    r.variant = h->variant();
    r.seconds = since(start);
    for (const auto& c : h->representatives()) reps.push_back(c.to_string(in.graph));
  } else {
    r = engine.group(in, a.degree, a.weight, v, a.modulus);
  }
  const std::string over = a.modulus ? " over F_" + std::to_string(a.modulus) : "";
  if (o.json) {
    j = group_json(r.group);
    j["command"] = "homology";
    j["graph"] = in.label;
    j["degree"] = a.degree;
    j["weight"] = a.weight;
    j["variant"] = variant_name(r.variant);
    j["modulus"] = a.modulus;
    j["cached"] = r.cached;
    j["compute_seconds"] = r.seconds;
    j["lookup_seconds"] = r.lookup_seconds;
    if (a.representatives) j["representatives"] = reps;
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << hk(a.degree, a.weight, in.label) << over << " = " << r.group.to_string() << "\n";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Integer& m = r.group.moduli()[i];
    out << "  [" << i << "] " << (m == 0 ? "infinite order" : "order " + m.str()) << ": " << reps[i] << "\n";
  }
  return kExitPass;
}

struct BettiArgs {
  std::string file;
  int max_degree = 2;
  int max_weight = 3;
  std::string variant = "auto";
  int modulus = 0;
};

int cmd_betti(const Options& o, const BettiArgs& a, std::ostream& out) {
  Input in = load_input(a.file);
  Engine engine(o);
  const ComplexVariant v = parse_variant(a.variant);
  json cells = json::array();
  std::ostringstream table;
  table << "i:";
  for (int i = 0; i <= a.max_degree; ++i) table << (i ? " | " : " ") << i;
  table << "\n";
  double total = 0;
  int hits = 0;
  for (int k = 0; k <= a.max_weight; ++k) {
    table << "k=" << k << ":";
    for (int i = 0; i <= a.max_degree; ++i) {
      GroupLookup r = engine.group(in, i, k, v, a.modulus);
      table << (i ? " | " : " ") << r.group.to_string();
      json c = group_json(r.group);
      c["degree"] = i;
      c["weight"] = k;
      c["cached"] = r.cached;
      c["compute_seconds"] = r.seconds;
      c["lookup_seconds"] = r.lookup_seconds;
      cells.push_back(c);
      total += r.seconds;
      hits += r.cached;
    }
    table << "\n";
  }
  if (o.json) {
    json j{{"command", "betti-table"}, {"graph", in.label},           {"max_degree", a.max_degree},
           {"max_weight", a.max_weight}, {"modulus", a.modulus},       {"cells", cells},
           {"cache_hits", hits},         {"compute_seconds", total}};
    out << j.dump(2) << "\n";
  } else {
    out << "homology of B_k(" << in.label << ")" << (a.modulus ? " over F_" + std::to_string(a.modulus) : "") << "\n";
    out << table.str();
  }
  return kExitPass;
}

std::vector<std::string> vertex_names(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.vertex_name(v));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s.empty() ? "none" : s;
}

int cmd_analyze(const Options& o, const std::string& file, std::ostream& out) {
  Input in = load_input(file);
  const Graph& g = in.graph;
  std::vector<VertexId> essential;
  int loops = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.is_essential(v)) essential.push_back(v);
  for (EdgeId e = 0; e < g.num_edges(); ++e) loops += g.is_self_loop(e);
  const int conn = connectivity(g);
  const auto cuts = vertex_names(g, cut_vertices(g));
  int one_cuts = 0, two_cuts = 0;
  if (g.is_connected()) {
    one_cuts = static_cast<int>(find_cuts(g, 1).cuts.size());
    two_cuts = static_cast<int>(find_cuts(g, 2).cuts.size());
  }
  const bool planar = is_planar(g);
  const auto thetas = enumerate_theta_embeddings(g);
  const auto model = minimal_simplicial_model(g);
  if (o.json) {
    json j{{"command", "analyze"},
           {"graph", in.label},
           {"vertices", g.num_vertices()},
           {"edges", g.num_edges()},
           {"half_edges", g.num_half_edges()},
           {"self_loops", loops},
           {"components", g.num_components()},
           {"first_betti", first_betti(g)},
           {"essential_vertices", vertex_names(g, essential)},
           {"connectivity", conn},
           {"cut_vertices", cuts},
           {"model_one_cuts", one_cuts},
           {"model_two_cuts", two_cuts},
           {"planar", planar},
           {"theta_embeddings", thetas.size()},
           {"minimal_model", {{"vertices", model.graph.num_vertices()}, {"edges", model.graph.num_edges()}}}};
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << in.label << "\n"
      << "  vertices: " << g.num_vertices() << ", edges: " << g.num_edges() << ", half-edges: " << g.num_half_edges()
      << ", self-loops: " << loops << "\n"
      << "  components: " << g.num_components() << ", first Betti number: " << first_betti(g) << "\n"
      << "  essential vertices: " << join(vertex_names(g, essential)) << "\n"
      << "  connectivity (capped at 3): " << conn << "\n"
      << "  cut vertices: " << join(cuts) << "\n"
      << "  1-cuts / 2-cuts of the minimal model: " << one_cuts << " / " << two_cuts << "\n"
      << "  minimal model: " << model.graph.num_vertices() << " vertices, " << model.graph.num_edges() << " edges\n"
      << "  planar: " << (planar ? "yes" : "no") << "\n"
      << "  theta embeddings: " << thetas.size() << "\n";
  return kExitPass;
}

struct GeneratorsArgs {
  std::string file;
  int weight = 0;
  bool chains = false;
};

int cmd_generators(const Options& o, const GeneratorsArgs& a, std::ostream& out) {
  Input in = load_input(a.file);
  const auto gens = m_generators(in.graph, a.weight);
  Subgroup m = m_submodule(in.graph, a.weight);
  auto h2 = homology(in.graph, 2, a.weight);
  const auto quo = m.quotient();
  if (o.json) {
    json list = json::array();
    for (const auto& c : gens) {
      json item{{"kind", kind_name(c.kind)}, {"provenance", c.provenance}, {"degree", c.degree}, {"weight", c.weight}};
      if (a.chains) item["chain"] = c.chain.to_string(in.graph);
      list.push_back(item);
    }
    json j{{"command", "generators"}, {"graph", in.label},          {"weight", a.weight},
           {"h2", group_json(h2->group())}, {"m", m.structure().to_string()}, {"quotient", quo.to_string()},
           {"generators", list}};
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << "M(" << in.label << ") in weight " << a.weight << ": " << m.structure().to_string() << " inside "
      << hk(2, a.weight, in.label) << " = " << h2->to_string() << ", quotient " << quo.to_string() << "\n";
  for (std::size_t j = 0; j < gens.size(); ++j) {
    out << "  [" << j << "] " << kind_name(gens[j].kind) << ": " << gens[j].provenance << "\n";
    if (a.chains) out << "      " << gens[j].chain.to_string(in.graph) << "\n";
  }
  return kExitPass;
}

struct LesArgs {
  std::string file;
  std::string vertex;
  int half_edge = kNone;
  int max_degree = 2;
  int max_weight = 4;
  int modulus = 0;
};

struct SurgeryArgs {
  std::string file;
  std::vector<std::string> edges;
  std::string x, y;
  std::vector<std::string> extra;
  int max_degree = 1;
  int max_weight = 3;
};

struct PeskyArgs {
  std::string file;
  std::string edge;
  int weight = 2;
};

int cmd_pesky(const Options& o, const PeskyArgs& a, std::ostream& out) {
  Input in = load_input(a.file);
  EdgeId e;
  if (!a.edge.empty())
    e = edge_arg(in.graph, a.edge);
  else if (in.doc.marked_edge)
    e = *in.doc.marked_edge;
  else
    throw CLI::RequiredError("--edge (or marks.edge in the graph document)");
  PeskyResult r = find_pesky(in.graph, e, a.weight);
  json extra{{"graph", in.label}, {"edge", in.graph.edge_name(e)}, {"weight", a.weight},
             {"quotient", r.quotient.to_string()}};
  json w = json::array();
  for (const auto& c : r.witnesses) w.push_back(c.to_string(r.setup.exploded()));
  extra["witnesses"] = w;
  const int code = emit_report(o, out, "verify pesky", r.report, extra);
  if (!o.json) {
    out << "ker(delta) / psi(M) = " << r.quotient.to_string() << "\n";
    for (const auto& s : w) out << "  witness: " << s.get<std::string>() << "\n";
  }
  return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of unordered configuration spaces of graphs", "braidhom"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit a machine-readable JSON report");
  app.add_option("--cache-dir", o.cache_dir, "Store homology groups here (default: $BRAIDHOM_CACHE_DIR)");

  HomologyArgs ha;
  auto* hom = app.add_subcommand("homology", "Compute H_i(B_k(G))");
  hom->add_option("file", ha.file, "Graph document (JSON)")->required();
  hom->add_option("-i,--degree", ha.degree, "Homological degree i")->required()->check(CLI::NonNegativeNumber);
  hom->add_option("-k,--weight", ha.weight, "Number of particles k")->required()->check(CLI::NonNegativeNumber);
  hom->add_option("--variant", ha.variant, "auto, reduced or unreduced")->capture_default_str();
  hom->add_option("--modulus", ha.modulus, "Prime p for F_p coefficients (0 for Z)")->capture_default_str();
  hom->add_flag("--representatives", ha.representatives, "Print a cycle for every generator");

  BettiArgs ba;
  auto* betti = app.add_subcommand("betti-table", "Table of H_i(B_k(G)) for i, k up to the bounds");
  betti->add_option("file", ba.file, "Graph document (JSON)")->required();
  betti->add_option("--max-degree", ba.max_degree)->capture_default_str()->check(CLI::NonNegativeNumber);
  betti->add_option("--max-weight", ba.max_weight)->capture_default_str()->check(CLI::NonNegativeNumber);
  betti->add_option("--variant", ba.variant, "auto, reduced or unreduced")->capture_default_str();
  betti->add_option("--modulus", ba.modulus, "Prime p for F_p coefficients (0 for Z)")->capture_default_str();

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "Cuts, connectivity, planarity, Betti number, theta embeddings");
  analyze->add_option("file", analyze_file, "Graph document (JSON)")->required();

  GeneratorsArgs ga;
  auto* gen = app.add_subcommand("generators", "List generators of the toric/theta submodule M(G) in degree 2");
  gen->add_option("file", ga.file, "Graph document (JSON)")->required();
  gen->add_option("-k,--weight", ga.weight)->required()->check(CLI::NonNegativeNumber);
  gen->add_flag("--chains", ga.chains, "Print the chain of every generator");

  auto* verify = app.add_subcommand("verify", "Run a verification harness");
  verify->require_subcommand(1);
  LesArgs la;
  auto* les = verify->add_subcommand("les", "Exactness of the vertex explosion sequence");
  les->add_option("file", la.file, "Graph document (JSON)")->required();
  les->add_option("--vertex", la.vertex, "Vertex to explode (name)")->required();
  les->add_option("--half-edge", la.half_edge, "Privileged half-edge (default: least at the vertex)");
  les->add_option("--max-degree", la.max_degree)->capture_default_str()->check(CLI::NonNegativeNumber);
  les->add_option("--max-weight", la.max_weight)->capture_default_str()->check(CLI::NonNegativeNumber);
  les->add_option("--modulus", la.modulus, "Prime p for F_p coefficients (0 for Z)")->capture_default_str();

  std::string main_file;
  int main_weight = 4;
  auto* mainthm = verify->add_subcommand("main", "M(G) = H_2(B_k(G)) in every weight up to the bound");
  mainthm->add_option("file", main_file, "Graph document (JSON)")->required();
  mainthm->add_option("--max-weight", main_weight)->capture_default_str()->check(CLI::NonNegativeNumber);

  SurgeryArgs sa;
  auto* surg = verify->add_subcommand("surgery", "Retraction property of an edge surgery");
  surg->add_option("file", sa.file, "Graph document (JSON)")->required();
  surg->add_option("--edges", sa.edges, "Edges of the collapsed subgraph (indices or names)")
      ->required()
      ->delimiter(',');
  surg->add_option("--x", sa.x, "First attaching vertex")->required();
  surg->add_option("--y", sa.y, "Second attaching vertex")->required();
  surg->add_option("--extra-vertices", sa.extra, "Isolated vertices added to the subgraph")->delimiter(',');
  surg->add_option("--max-degree", sa.max_degree)->capture_default_str()->check(CLI::NonNegativeNumber);
  surg->add_option("--max-weight", sa.max_weight)->capture_default_str()->check(CLI::NonNegativeNumber);

  PeskyArgs pa;
  auto* pesky = verify->add_subcommand("pesky", "Compare ker(delta) with psi(M) after subdividing an edge");
  pesky->add_option("file", pa.file, "Graph document (JSON)")->required();
  pesky->add_option("--edge", pa.edge, "Edge to subdivide (index or name; default marks.edge)");
  pesky->add_option("-k,--weight", pa.weight)->capture_default_str()->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
  demo->require_subcommand(1);
  int demo_weight = 2;
  auto* nonplanar = demo->add_subcommand("nonplanar", "The nonplanar graph where M(G) misses H_2");
  nonplanar->add_option("-k,--weight", demo_weight)->capture_default_str()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (hom->parsed()) return cmd_homology(o, ha, out);
    if (betti->parsed()) return cmd_betti(o, ba, out);
    if (analyze->parsed()) return cmd_analyze(o, analyze_file, out);
    if (gen->parsed()) return cmd_generators(o, ga, out);
    if (les->parsed()) {
      Input in = load_input(la.file);
      const VertexId v = vertex_arg(in.graph, la.vertex);
      auto r = check_les_exactness(in.graph, v, la.half_edge, la.max_degree, la.max_weight, la.modulus);
      return emit_report(o, out, "verify les", r, {{"graph", in.label}});
    }
    if (mainthm->parsed()) {
      Input in = load_input(main_file);
      return emit_report(o, out, "verify main", check_main_theorem(in.graph, main_weight), {{"graph", in.label}});
    }
    if (surg->parsed()) {
      Input in = load_input(sa.file);
      std::vector<EdgeId> es;
      for (const auto& e : sa.edges) es.push_back(edge_arg(in.graph, e));
      std::vector<VertexId> extra;
      for (const auto& v : sa.extra) extra.push_back(vertex_arg(in.graph, v));
      auto sd = surgery(in.graph, es, vertex_arg(in.graph, sa.x), vertex_arg(in.graph, sa.y), extra);
      return emit_report(o, out, "verify surgery", check_surgery_retraction(sd, sa.max_degree, sa.max_weight),
                         {{"graph", in.label}});
    }
    if (pesky->parsed()) return cmd_pesky(o, pa, out);
    if (nonplanar->parsed()) return emit_report(o, out, "demo nonplanar", nonplanar_demo(demo_weight));
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace braidhom::cli
