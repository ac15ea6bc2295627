#include "graph_document.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom::cli {

using nlohmann::json;

namespace {

// Character iterator that publishes how far the parser has read.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator() = default;
  TrackingIterator(const char* p, const char* base, std::size_t* consumed) : p_(p), base_(base), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    ++p_;
    if (consumed_) *consumed_ = static_cast<std::size_t>(p_ - base_);
    return *this;
  }
  TrackingIterator operator++(int) {
    auto t = *this;
    ++*this;
    return t;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* consumed_ = nullptr;
};

struct Location {
  int line = 1;
  int column = 1;
};

Location locate(std::string_view text, std::size_t offset) {
  Location loc;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  Location loc = locate(text, offset);
  std::ostringstream os;
  os << "line " << loc.line << ", column " << loc.column << ": " << what;
  throw MalformedInputError(os.str());
}

// Start of the string token that ends just before `end`.
std::size_t string_start(std::string_view text, std::size_t end) {
  if (end < 2) return 0;
  std::size_t i = end - 2;
  while (i > 0) {
    if (text[i] == '"') {
      std::size_t slashes = 0;
      for (std::size_t j = i; j > 0 && text[j - 1] == '\\'; --j) ++slashes;
      if (slashes % 2 == 0) return i;
    }
    --i;
  }
  return 0;
}

// Builds the DOM and remembers where every value under a top-level member starts.
class PositionSax {
 public:
  PositionSax(std::string_view text, const std::size_t* consumed) : text_(text), consumed_(consumed), dom_(root_) {}

  json root_;
  std::map<std::string, std::vector<std::size_t>> value_offsets;  // strings and scalars, in order
  std::map<std::string, std::size_t> key_offsets;

  bool null() { return scalar() && dom_.null(); }
  bool boolean(bool b) { return scalar() && dom_.boolean(b); }
  bool number_integer(json::number_integer_t x) { return scalar() && dom_.number_integer(x); }
  bool number_unsigned(json::number_unsigned_t x) { return scalar() && dom_.number_unsigned(x); }
  bool number_float(json::number_float_t x, const std::string& s) { return scalar() && dom_.number_float(x, s); }
  bool string(std::string& s) {
    record(string_start(text_, *consumed_));
    return dom_.string(s);
  }
  bool binary(json::binary_t& b) { return dom_.binary(b); }
  bool start_object(std::size_t n) {
    if (depth_ >= 1) record(*consumed_ ? *consumed_ - 1 : 0);
    ++depth_;
    return dom_.start_object(n);
  }
  bool key(std::string& k) {
    if (depth_ == 1) {
      current_ = k;
      key_offsets[k] = string_start(text_, *consumed_);
    }
    return dom_.key(k);
  }
  bool end_object() {
    --depth_;
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    if (depth_ >= 1) record(*consumed_ ? *consumed_ - 1 : 0);
    ++depth_;
    return dom_.start_array(n);
  }
  bool end_array() {
    --depth_;
    return dom_.end_array();
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    std::string what = ex.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    fail_at(text_, position ? position - 1 : 0, "malformed JSON: " + what);
  }

 private:
  bool scalar() {
    record(*consumed_ ? *consumed_ - 1 : 0);
    return true;
  }
  void record(std::size_t offset) {
    if (depth_ >= 1 && !current_.empty()) value_offsets[current_].push_back(offset);
  }

  std::string_view text_;
  const std::size_t* consumed_;
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  int depth_ = 0;
  std::string current_;
};

}  // namespace

GraphDocument parse_document(std::string_view text) {
  std::size_t consumed = 0;
  PositionSax sax(text, &consumed);
  TrackingIterator first(text.data(), text.data(), &consumed), last(text.data() + text.size(), text.data(), nullptr);
  json::sax_parse(first, last, &sax);
  const json& root = sax.root_;

  if (!root.is_object()) fail_at(text, 0, "a graph document must be a JSON object");
  auto where = [&](const std::string& member, std::size_t index) -> std::size_t {
    const auto& offs = sax.value_offsets[member];
    if (index < offs.size()) return offs[index];
    auto k = sax.key_offsets.find(member);
    return k == sax.key_offsets.end() ? 0 : k->second;
  };
  auto key_at = [&](const std::string& member) {
    auto k = sax.key_offsets.find(member);
    return k == sax.key_offsets.end() ? std::size_t{0} : k->second;
  };
  for (const auto& [k, v] : root.items())
    if (k != "name" && k != "vertices" && k != "edges" && k != "marks")
      fail_at(text, key_at(k), "unknown member \"" + k + "\"");

  GraphDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string()) fail_at(text, where("name", 0), "\"name\" must be a string");
    doc.name = root["name"].get<std::string>();
  }

  if (!root.contains("vertices")) fail_at(text, 0, "missing member \"vertices\"");
  const json& vs = root["vertices"];
  if (!vs.is_array()) fail_at(text, where("vertices", 0), "\"vertices\" must be an array");
  std::set<std::string> declared;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    // Offset 0 of the member is the array itself.
    const std::size_t at = where("vertices", i + 1);
    if (!vs[i].is_string()) fail_at(text, at, "vertex ids must be strings");
    std::string id = vs[i].get<std::string>();
    if (!declared.insert(id).second) fail_at(text, at, "duplicate vertex id \"" + id + "\"");
    doc.vertices.push_back(std::move(id));
  }

  if (!root.contains("edges")) fail_at(text, 0, "missing member \"edges\"");
  const json& es = root["edges"];
  if (!es.is_array()) fail_at(text, where("edges", 0), "\"edges\" must be an array");
  // Offsets under "edges": the outer array, then per edge its array and two endpoints.
  std::size_t cursor = 1;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const json& e = es[i];
    const std::size_t at = where("edges", cursor);
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail_at(text, at, "edge " + std::to_string(i) + " must be a pair of vertex ids");
    for (int end = 0; end < 2; ++end) {
      const std::string id = e[end].get<std::string>();
      if (!declared.count(id))
        fail_at(text, where("edges", cursor + 1 + end), "undeclared vertex \"" + id + "\" in edge " + std::to_string(i));
    }
    doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    cursor += 3;
  }

  if (root.contains("marks")) {
    const json& m = root["marks"];
    const std::size_t at = where("marks", 0);
    if (!m.is_object()) fail_at(text, at, "\"marks\" must be an object");
    for (const auto& [k, v] : m.items()) {
      if (k == "edge") {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= static_cast<long long>(doc.edges.size()))
          fail_at(text, at, "marks.edge must be an index into \"edges\"");
        doc.marked_edge = v.get<int>();
      } else if (k == "vertex_sets") {
        if (!v.is_object()) fail_at(text, at, "marks.vertex_sets must be an object");
        for (const auto& [set_name, ids] : v.items()) {
          if (!ids.is_array()) fail_at(text, at, "vertex set \"" + set_name + "\" must be an array");
          auto& out = doc.vertex_sets[set_name];
          for (const auto& id : ids) {
            if (!id.is_string()) fail_at(text, at, "vertex ids must be strings");
            if (!declared.count(id.get<std::string>()))
              fail_at(text, at, "undeclared vertex \"" + id.get<std::string>() + "\" in vertex set \"" + set_name + "\"");
            out.push_back(id.get<std::string>());
          }
        }
      } else {
        fail_at(text, at, "unknown mark \"" + k + "\"");
      }
    }
  }
  return doc;
}

Graph to_graph(const GraphDocument& doc) { return build_graph(doc.vertices, doc.edges); }

Graph parse_graph(std::string_view text) { return to_graph(parse_document(text)); }

GraphDocument document_from_graph(const Graph& g, std::string name) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.vertices = g.vertex_names();
  for (auto [u, v] : g.edge_list()) doc.edges.emplace_back(g.vertex_name(u), g.vertex_name(v));
  return doc;
}

json to_json(const GraphDocument& doc) {
  json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["vertices"] = doc.vertices;
  j["edges"] = json::array();
  for (const auto& [u, v] : doc.edges) j["edges"].push_back({u, v});
  if (doc.marked_edge || !doc.vertex_sets.empty()) {
    json m = json::object();
    if (doc.marked_edge) m["edge"] = *doc.marked_edge;
    if (!doc.vertex_sets.empty()) m["vertex_sets"] = doc.vertex_sets;
    j["marks"] = m;
  }
  return j;
}

std::string serialize(const GraphDocument& doc) { return to_json(doc).dump() + "\n"; }

GraphDocument canonical(const GraphDocument& doc) {
  GraphDocument c = doc;
  std::sort(c.vertices.begin(), c.vertices.end());
  for (auto& [u, v] : c.edges)
    if (v < u) std::swap(u, v);
  std::vector<int> order(c.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return c.edges[a] < c.edges[b]; });
  std::vector<std::pair<std::string, std::string>> sorted;
  for (int i : order) sorted.push_back(c.edges[i]);
  if (c.marked_edge) c.marked_edge = static_cast<int>(std::find(order.begin(), order.end(), *c.marked_edge) - order.begin());
  c.edges = std::move(sorted);
  for (auto& [k, ids] : c.vertex_sets) std::sort(ids.begin(), ids.end());
  return c;
}

std::string canonical_graph_text(const GraphDocument& doc) {
  GraphDocument c = canonical(doc);
  c.name.clear();
  c.marked_edge.reset();
  c.vertex_sets.clear();
  return serialize(c);
}

GraphDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_document(text);
  } catch (const MalformedInputError& e) {
    throw MalformedInputError(path + ": " + e.what());
  }
}

}  // namespace braidhom::cli
