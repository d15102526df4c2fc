#include "hexa/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hexa/errors.hpp"

namespace hexa {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer, got " + j.dump());
  return j.get<int>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json id_list(const std::vector<EdgeId>& ids) { return Json(ids); }

}  // namespace

Json graph_to_json(const Multigraph& g) {
  Json out;
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(v);
  out["vertices"] = vertices;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  Json list = Json::array();
  for (const Edge& e : edges) list.push_back({e.id, e.u, e.v});
  out["edges"] = list;
  return out;
}

Multigraph graph_from_json(const Json& j) {
  const Json& vertices = array(field(j, "vertices", "graph"), "vertices");
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i)
    if (integer(vertices[i], "vertices[" + std::to_string(i) + "]") != i)
      throw InputError("vertices[" + std::to_string(i) + "]: vertex ids must be 0..n-1 in order");
  Multigraph g(n);
  const Json& edges = array(field(j, "edges", "graph"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = array(edges[i], where);
    if (e.size() != 3) throw InputError(where + ": expected [id, u, v]");
    int id = integer(e[0], where + "[0]"), u = integer(e[1], where + "[1]"), v = integer(e[2], where + "[2]");
    if (id < 0) throw InputError(where + ": negative edge id");
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError(where + ": endpoint out of range");
    if (g.has_edge(id)) throw InputError(where + ": duplicate edge id " + std::to_string(id));
    g.add_edge_with_id(id, u, v);
  }
  return g;
}

Json tiling_to_json(const Tiling& t) {
  Json out;
  out["name"] = name(t.spec);
  out["spec"] = {{"family", std::string(1, to_char(t.spec.family))}, {"k", t.spec.k}, {"m", t.spec.m}, {"r", t.spec.r}};
  Json g = graph_to_json(t.graph);
  out["vertices"] = g["vertices"];
  Json coords = Json::array();
  for (LatticePoint p : t.coords) coords.push_back({p.i, p.j});
  out["coords"] = coords;
  out["edges"] = g["edges"];
  Json hexagons = Json::array();
  for (const Cycle& c : t.hexagons) hexagons.push_back(id_list(c));
  out["hexagons"] = hexagons;
  out["matching"] = id_list(t.matching);
  out["vertical_matching"] = id_list(t.vertical_matching);
  out["exterior"] = id_list(t.exterior);
  return out;
}

LoadedGraph load_graph_json(const Json& j) {
  LoadedGraph out{graph_from_json(j), std::nullopt};
  if (!j.contains("spec")) return out;
  const Json& s = j["spec"];
  const Json& fam = field(s, "family", "spec");
  if (!fam.is_string()) throw InputError("spec.family: expected a string");
  TilingSpec spec;
  try {
    spec.family = parse_family(fam.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(std::string("spec.family: ") + e.what());
  }
  spec.k = integer(field(s, "k", "spec"), "spec.k");
  spec.m = integer(field(s, "m", "spec"), "spec.m");
  if (s.contains("r")) spec.r = integer(s["r"], "spec.r");
  Tiling t = build(spec);
  if (!(t.graph == out.graph)) {
    // Accept any edge order; ids and endpoints must agree.
    auto key = [](const Multigraph& g) {
      std::vector<std::array<int, 3>> v;
      for (const Edge& e : g.edges()) v.push_back({e.id, std::min(e.u, e.v), std::max(e.u, e.v)});
      std::sort(v.begin(), v.end());
      return v;
    };
    if (t.vertex_count() != out.graph.vertex_count() || key(t.graph) != key(out.graph))
      throw InputError("edges do not match the construction of " + name(spec));
  }
  out.tiling = std::move(t);
  return out;
}

Json polynomial_to_json(const BivariatePolynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"x", it->first.first}, {"y", it->first.second}, {"c", it->second.str()}});
  Json out;
  out["terms"] = terms;
  return out;
}

BivariatePolynomial polynomial_from_json(const Json& j) {
  const Json& terms = array(field(j, "terms", "polynomial"), "terms");
  BivariatePolynomial p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    int x = integer(field(terms[i], "x", where), where + ".x");
    int y = integer(field(terms[i], "y", where), where + ".y");
    const Json& c = field(terms[i], "c", where);
    if (!c.is_string()) throw InputError(where + ".c: expected a decimal string");
    if (x < 0 || y < 0) throw InputError(where + ": negative exponent");
    try {
      p.add_term(x, y, BigInt(c.get<std::string>()));
    } catch (const std::runtime_error&) {
      throw InputError(where + ".c: not a decimal integer");
    }
  }
  return p;
}

std::string rank_size_csv(const RankSizeTable& t) {
  std::ostringstream out;
  out << "i,j,count\n";
  for (std::size_t i = 0; i < t.counts.size(); ++i)
    for (std::size_t j = 0; j < t.counts[i].size(); ++j)
      if (t.counts[i][j]) out << i << ',' << j << ',' << t.counts[i][j] << '\n';
  return out.str();
}

Json rank_size_json(const RankSizeTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.counts.size(); ++i)
    for (std::size_t j = 0; j < t.counts[i].size(); ++j)
      if (t.counts[i][j]) rows.push_back({{"i", i}, {"j", j}, {"count", std::to_string(t.counts[i][j])}});
  Json out;
  out["max_size"] = t.max_size;
  out["counts"] = rows;
  return out;
}

std::string to_dot(const Multigraph& g, const Tiling* t) {
  std::ostringstream out;
  out << "graph " << (t ? "\"" + name(t->spec) + "\"" : std::string("G")) << " {\n";
  if (t)
    for (const Cycle& c : t->hexagons) {
      out << "  // hexagon";
      for (EdgeId e : c) out << ' ' << e;
      out << '\n';
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (t) out << " [label=\"" << t->coords[v].i << "," << t->coords[v].j << "\"]";
    out << ";\n";
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const Edge& e : edges) out << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"];\n";
  out << "}\n";
  return out.str();
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write");
  out << text;
}

DiskCache::DiskCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path DiskCache::default_root() {
  if (const char* env = std::getenv("HEXA_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "hexa";
  return ".hexa_cache";
}

std::filesystem::path DiskCache::file_for(const std::string& certificate) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(certificate)));
  return root_ / name;
}

std::optional<BivariatePolynomial> DiskCache::get(const std::string& certificate) const {
  std::filesystem::path file = file_for(certificate);
  if (!std::filesystem::exists(file)) return std::nullopt;
  try {
    Json j = read_json_file(file);
    if (!j.contains("certificate") || j["certificate"] != hex(certificate)) return std::nullopt;
    return polynomial_from_json(j.at("polynomial"));
  } catch (const InputError&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void DiskCache::put(const std::string& certificate, const BivariatePolynomial& p) const {
  std::filesystem::create_directories(root_);
  Json j;
  j["certificate"] = hex(certificate);
  j["polynomial"] = polynomial_to_json(p);
  std::filesystem::path file = file_for(certificate);
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  write_text_file(tmp, j.dump() + "\n");
  std::filesystem::rename(tmp, file);
}

}  // namespace hexa
