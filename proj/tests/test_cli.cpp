#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "braidhom/errors.hpp"
#include "braidhom/verification.hpp"
#include "commands.hpp"
#include "graph_document.hpp"
#include "json.hpp"
#include "result_cache.hpp"

using namespace braidhom;
using namespace braidhom::cli;
namespace fs = std::filesystem;

namespace {

constexpr const char* kTheta4 = R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"],["a","b"],["a","b"]]})";
constexpr const char* kK4 =
    R"({"name": "K4", "vertices": ["1", "2", "3", "4"],
  "edges": [["1","2"],["1","3"],["1","4"],["2","3"],["2","4"],["3","4"]]})";

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("braidhom-cli-" + std::string(info->name()) + "-" +
                                        std::to_string(static_cast<long>(::getpid())));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

std::string parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const MalformedInputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Document, ThetaFour) {
  const Graph g = parse_graph(kTheta4);
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_TRUE(are_isomorphic(g, theta_graph(4)));
}

TEST(Document, SelfLoopAccepted) {
  const Graph g = parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})");
  EXPECT_TRUE(g.is_self_loop(0));
}

TEST(Document, UndeclaredEndpointNamed) {
  const std::string msg = parse_error("{\"vertices\": [\"a\", \"b\"],\n \"edges\": [[\"a\", \"z\"]]}");
  EXPECT_NE(msg.find("\"z\""), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Document, DuplicatesAndSyntax) {
  const std::string dup = parse_error(R"({"vertices": ["a", "a"], "edges": []})");
  EXPECT_NE(dup.find("duplicate vertex id \"a\""), std::string::npos) << dup;
  EXPECT_NE(dup.find("line 1, column 20"), std::string::npos) << dup;
  const std::string syntax = parse_error("{\"vertices\": [\"a\",\n  ]");
  EXPECT_NE(syntax.find("line 2"), std::string::npos) << syntax;
  EXPECT_NE(parse_error(R"({"vertices": [], "edges": [], "colour": 1})").find("unknown member"), std::string::npos);
  EXPECT_NE(parse_error(R"({"edges": []})").find("vertices"), std::string::npos);
  EXPECT_NE(parse_error("[1, 2]").find("object"), std::string::npos);
}

TEST(Document, MarksRoundTrip) {
  const GraphDocument doc = parse_document(
      R"({"name": "t", "vertices": ["b", "a"], "edges": [["b", "a"], ["a", "a"]],
          "marks": {"edge": 1, "vertex_sets": {"W": ["a"]}}})");
  ASSERT_TRUE(doc.marked_edge.has_value());
  EXPECT_EQ(*doc.marked_edge, 1);
  EXPECT_EQ(doc.vertex_sets.at("W"), std::vector<std::string>{"a"});
  EXPECT_EQ(parse_document(serialize(doc)), doc);
  EXPECT_EQ(serialize(parse_document(serialize(doc))), serialize(doc));
}

TEST(Document, CanonicalForm) {
  const GraphDocument doc =
      parse_document(R"({"vertices": ["c", "a", "b"], "edges": [["c", "a"], ["b", "a"], ["a", "b"]],
                         "marks": {"edge": 0}})");
  const GraphDocument c = canonical(doc);
  EXPECT_EQ(c.vertices, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(c.edges.size(), 3u);
  EXPECT_EQ(c.edges[0], std::make_pair(std::string("a"), std::string("b")));
  EXPECT_EQ(c.edges[2], std::make_pair(std::string("a"), std::string("c")));
  ASSERT_TRUE(c.marked_edge.has_value());
  EXPECT_EQ(c.edges[*c.marked_edge], std::make_pair(std::string("a"), std::string("c")));
  EXPECT_EQ(canonical(c), c);
  EXPECT_EQ(serialize(canonical(parse_document(serialize(c)))), serialize(c));
  // Relabelled orderings hash identically.
  const GraphDocument shuffled =
      parse_document(R"({"vertices": ["b", "c", "a"], "edges": [["a", "b"], ["a", "c"], ["a", "b"]]})");
  EXPECT_EQ(canonical_graph_text(shuffled), canonical_graph_text(doc));
}

TEST(Document, FromGraph) {
  const Graph g = handcuffs_graph();
  const GraphDocument doc = document_from_graph(g, "handcuffs");
  EXPECT_EQ(doc.name, "handcuffs");
  EXPECT_TRUE(are_isomorphic(to_graph(doc), g));
  EXPECT_EQ(to_json(doc)["edges"].size(), 4u);
}

TEST(Cache, Sha256KnownValue) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, StoreAndLoad) {
  ResultCache cache(dir_ / "store");
  CacheKey key{"text", ComplexVariant::reduced, 2, 3, 0};
  EXPECT_FALSE(cache.load(key));
  cache.store(key, {{Integer(2), Integer(0)}, 0.5});
  auto hit = cache.load(key);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->moduli, (std::vector<Integer>{2, 0}));
  CacheKey other = key;
  other.modulus = 3;
  EXPECT_NE(other.digest(), key.digest());
  EXPECT_FALSE(cache.load(other));
  EXPECT_EQ(key.digest().size(), 64u);
}

TEST_F(CliTest, HomologyOfThetaFour) {
  const std::string f = write("theta4.json", kTheta4);
  const Invocation r = run({"homology", f, "--degree", "2", "--weight", "3"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("= Z^1"), std::string::npos) << r.out;
  const Invocation j = run({"--json", "homology", f, "-i", "1", "-k", "3"});
  ASSERT_EQ(j.code, kExitPass) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["group"], "Z^6");
  EXPECT_EQ(doc["rank"], 6);
  EXPECT_EQ(doc["command"], "homology");
}

TEST_F(CliTest, HomologyOverFieldAndRepresentatives) {
  const std::string f = write("theta4.json", kTheta4);
  const Invocation r = run({"homology", f, "-i", "2", "-k", "3", "--modulus", "2", "--representatives"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("over F_2"), std::string::npos);
  EXPECT_NE(r.out.find("[0]"), std::string::npos);
}

TEST_F(CliTest, CacheRoundTrip) {
  const std::string f = write("k4.json", kK4);
  const std::string cache = (dir_ / "cache").string();
  const std::vector<std::string> args{"--cache-dir", cache, "homology", f, "-i", "1", "-k", "3"};
  const Invocation first = run(args), second = run(args);
  EXPECT_EQ(first.code, kExitPass);
  EXPECT_EQ(first.out, second.out);
  EXPECT_FALSE(fs::is_empty(cache));

  std::vector<std::string> jargs{"--json"};
  jargs.insert(jargs.end(), args.begin(), args.end());
  jargs[jargs.size() - 1] = "2";  // a fresh key
  const auto a = nlohmann::json::parse(run(jargs).out);
  const auto b = nlohmann::json::parse(run(jargs).out);
  EXPECT_FALSE(a["cached"].get<bool>());
  EXPECT_TRUE(b["cached"].get<bool>());
  EXPECT_LT(b["compute_seconds"].get<double>(), a["compute_seconds"].get<double>());
  for (const char* field : {"group", "rank", "torsion", "moduli", "dimension", "variant"})
    EXPECT_EQ(a[field], b[field]) << field;
}

TEST_F(CliTest, CacheDirectoryFromEnvironment) {
  const std::string f = write("theta4.json", kTheta4);
  const fs::path cache = dir_ / "env-cache";
  ::setenv("BRAIDHOM_CACHE_DIR", cache.c_str(), 1);
  const Invocation r = run({"homology", f, "-i", "0", "-k", "2"});
  ::unsetenv("BRAIDHOM_CACHE_DIR");
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(fs::exists(cache) && !fs::is_empty(cache));
}

TEST_F(CliTest, BettiTablePrefix) {
  const std::string f = write("theta4.json", kTheta4);
  const Invocation small = run({"betti-table", f, "--max-degree", "2", "--max-weight", "2"});
  const Invocation large = run({"betti-table", f, "--max-degree", "2", "--max-weight", "4"});
  ASSERT_EQ(small.code, kExitPass);
  ASSERT_EQ(large.code, kExitPass);
  EXPECT_EQ(large.out.rfind(small.out, 0), 0u) << small.out << "\n---\n" << large.out;
  EXPECT_NE(large.out.find("k=3: Z^1 | Z^6 | Z^1"), std::string::npos) << large.out;

  const auto js = nlohmann::json::parse(run({"--json", "betti-table", f, "--max-weight", "2"}).out);
  const auto jl = nlohmann::json::parse(run({"--json", "betti-table", f, "--max-weight", "4"}).out);
  for (std::size_t c = 0; c < js["cells"].size(); ++c) EXPECT_EQ(js["cells"][c]["group"], jl["cells"][c]["group"]);
}

TEST_F(CliTest, AnalyzeAndGenerators) {
  const std::string f = write("k4.json", kK4);
  const Invocation a = run({"analyze", f});
  EXPECT_EQ(a.code, kExitPass) << a.err;
  EXPECT_FALSE(a.out.empty());
  const auto j = nlohmann::json::parse(run({"--json", "analyze", f}).out);
  EXPECT_TRUE(j.dump().find("planar") != std::string::npos);
  const Invocation g = run({"generators", f, "-k", "3"});
  EXPECT_EQ(g.code, kExitPass) << g.err;
  EXPECT_NE(g.out.find("quotient 0"), std::string::npos) << g.out;
  EXPECT_NE(g.out.find("product: loop"), std::string::npos) << g.out;
}

TEST_F(CliTest, VerifyMainOnCompleteGraph) {
  const std::string f = write("k4.json", kK4);
  const Invocation r = run({"verify", "main", f, "--max-weight", "3"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"--json", "verify", "main", f, "--max-weight", "3"}).out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks_total"], 4);
}

TEST_F(CliTest, VerifyOthers) {
  const std::string t = write("theta4.json", kTheta4);
  EXPECT_EQ(run({"verify", "les", t, "--vertex", "b", "--max-weight", "3"}).code, kExitPass);
  EXPECT_EQ(run({"verify", "les", t, "--vertex", "a", "--modulus", "3", "--max-weight", "3"}).code, kExitPass);
  const std::string t3 = write("theta3.json", R"({"vertices":["x","y"],"edges":[["x","y"],["x","y"],["x","y"]]})");
  EXPECT_EQ(run({"verify", "surgery", t3, "--edges", "1,2", "--x", "x", "--y", "y", "--max-weight", "3"}).code,
            kExitPass);
  EXPECT_EQ(run({"verify", "pesky", t, "--edge", "0", "-k", "3"}).code, kExitPass);
}

TEST_F(CliTest, FailedVerificationExitsOne) {
  // M misses H_2 on the nonplanar example in weight 2.
  const Graph d = nonplanar_example().graph;
  const std::string f = write("delta.json", serialize(document_from_graph(d, "delta")));
  const Invocation r = run({"verify", "main", f, "--max-weight", "2"});
  EXPECT_EQ(r.code, kExitFailed) << r.out << r.err;
  EXPECT_NE(r.out.find("exploratory"), std::string::npos);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
  const Invocation p = run({"verify", "pesky", f, "--edge", std::to_string(nonplanar_example().edge), "-k", "2"});
  EXPECT_EQ(p.code, kExitFailed);
}

TEST_F(CliTest, DemoNonplanar) {
  const Invocation r = run({"demo", "nonplanar"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_NE(r.out.find("M in weight 2: 0"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(run({"--json", "demo", "nonplanar"}).out);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  const std::string f = write("theta4.json", kTheta4);
  const Invocation missing = run({"homology", f, "--degree", "1"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("weight"), std::string::npos) << missing.err;
  EXPECT_EQ(run({"homology", f, "-i", "1", "-k", "2", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"homology", (dir_ / "absent.json").string(), "-i", "1", "-k", "1"}).code, kExitUsage);
  const std::string bad = write("bad.json", R"({"vertices":["a"],"edges":[["a","z"]]})");
  const Invocation b = run({"homology", bad, "-i", "1", "-k", "1"});
  EXPECT_EQ(b.code, kExitUsage);
  EXPECT_NE(b.err.find("\"z\""), std::string::npos) << b.err;
  EXPECT_EQ(run({"verify", "les", f, "--vertex", "q"}).code, kExitUsage);
  EXPECT_EQ(run({"homology", f, "-i", "1", "-k", "1", "--modulus", "4"}).code, kExitUsage);
  const Invocation help = run({"--help"});
  EXPECT_EQ(help.code, kExitPass);
  EXPECT_NE(help.out.find("homology"), std::string::npos);
}
