#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hexa/census.hpp"
#include "hexa/errors.hpp"
#include "hexa/homotopy.hpp"
#include "hexa/io.hpp"
#include "hexa/orientation.hpp"
#include "hexa/tiling.hpp"
#include "hexa/tutte.hpp"

using namespace hexa;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kPrecondition = 2;
constexpr int kBudget = 3;

// Output goes to a file when one is named, else stdout.
void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

LoadedGraph load(const std::string& path) { return load_graph_json(read_json_file(path)); }

Tiling load_tiling(const std::string& path) {
  LoadedGraph g = load(path);
  if (!g.tiling) throw InputError(path + ": no tiling spec in the file");
  return std::move(*g.tiling);
}

std::string label(const std::string& path, const LoadedGraph& g) {
  return g.tiling ? name(g.tiling->spec) : fs::path(path).filename().string();
}

std::vector<EdgeId> parse_ids(const std::string& text) {
  std::vector<EdgeId> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--edges: \"" + item + "\" is not an edge id");
    }
  }
  return out;
}

// Family quotient deliberately altered, for the reproduce negative control:
// horizontal glides lose their reflection, vertical glides get an odd
// mirror, tori a different wrap shift.
Quotient broken_quotient(const TilingSpec& s) {
  Quotient q = quotient_for(s);
  switch (q.kind) {
    case Quotient::Kind::horizontal_glide:
      q.kind = Quotient::Kind::torus;
      q.shift = q.mirror;
      break;
    case Quotient::Kind::vertical_glide: q.mirror += 1; break;
    case Quotient::Kind::torus: q.shift += 2; break;
  }
  return q;
}

struct Row {
  std::string name;
  bool valid = false;
  int l = 0;
  long long count = 0;
  int chi = 0;
  std::optional<EssentialProfile> ref;
  int ref_chi = 0;
  bool match = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexa: hexagonal tilings, essential cycles and Tutte polynomials"};
  app.require_subcommand(1);
  int workers = 1;
  app.add_option("--workers", workers, "worker threads for enumeration")->check(CLI::PositiveNumber);

  std::string out, format, input, input2, cache_dir, word_text, edges_text;
  std::string families = "rabcfgh", break_family;
  char family = 'r';
  int k = 0, m = 0, r = 0, max_size = -1, case_number = 1, rank_arg = -1, size_arg = -1, offset = 0;
  int origin = 0, north = -1, case_k = 0;
  std::uint64_t budget = 400'000'000;
  std::size_t memo_entries = 5'000'000;
  bool no_cache = false, list = false, shortest = true;
  std::string engine = "dc";

  auto* gen = app.add_subcommand("gen", "construct a tiling and print it as JSON or DOT");
  gen->add_option("--family", family, "r, a, b, c, f, g or h")->required();
  gen->add_option("--k", k)->required();
  gen->add_option("--m", m)->required();
  gen->add_option("--r", r, "wrap shift, family r only");
  gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("-o,--output", out);

  auto* validate_cmd = app.add_subcommand("validate", "check the hexagonal tiling axioms");
  validate_cmd->add_option("file", input)->required();

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  tutte_cmd->add_option("file", input)->required();
  tutte_cmd->add_option("--engine", engine, "dc or subset")->check(CLI::IsMember({"dc", "subset"}));
  tutte_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  tutte_cmd->add_option("--cache", cache_dir, "cache directory");
  tutte_cmd->add_flag("--no-cache", no_cache);
  tutte_cmd->add_option("--memo-entries", memo_entries, "memo table cap")->check(CLI::PositiveNumber);
  tutte_cmd->add_option("-o,--output", out);

  auto* ranksize_cmd = app.add_subcommand("ranksize", "rank-size table");
  ranksize_cmd->add_option("file", input)->required();
  ranksize_cmd->add_option("--max-size", max_size);
  ranksize_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);
  ranksize_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ranksize_cmd->add_option("-o,--output", out);

  auto* cycles_cmd = app.add_subcommand("cycles", "shortest essential cycles");
  cycles_cmd->add_option("file", input)->required();
  cycles_cmd->add_flag("--shortest", shortest, "length and count (the default)");
  cycles_cmd->add_flag("--list", list, "print the cycles");

  auto* census_cmd = app.add_subcommand("census", "edge-set census by rank, size, components and normality");
  census_cmd->add_option("file", input)->required();
  census_cmd->add_option("--max-size", max_size)->required();
  census_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);
  census_cmd->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* distinguish_cmd = app.add_subcommand("distinguish", "first differing rank-size coefficient");
  distinguish_cmd->add_option("first", input)->required();
  distinguish_cmd->add_option("second", input2)->required();
  distinguish_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* bijection_cmd = app.add_subcommand("bijection", "check a stratum bijection against H_{k,m,0}");
  bijection_cmd->add_option("--case", case_number)->required()->check(CLI::Range(1, 3));
  bijection_cmd->add_option("--k", k)->required();
  bijection_cmd->add_option("--m", m)->required();
  bijection_cmd->add_option("--r", r, "shift of the rival torus in case 1");
  bijection_cmd->add_option("--rank", rank_arg);
  bijection_cmd->add_option("--size", size_arg);
  bijection_cmd->add_option("--offset", offset, "perturb the row map");
  bijection_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* case4_cmd = app.add_subcommand("case4", "groups A, B, C of sets with a hexagon");
  case4_cmd->add_option("file", input)->required();
  case4_cmd->add_option("--k", case_k, "defaults to the tiling's k");
  case4_cmd->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic number");
  chromatic_cmd->add_option("file", input)->required();

  auto* export_cmd = app.add_subcommand("export", "re-emit a graph as JSON, DOT or rank-size CSV");
  export_cmd->add_option("file", input)->required();
  export_cmd->add_option("--format", format, "json, dot or csv")->required()->check(
      CLI::IsMember({"json", "dot", "csv"}));
  export_cmd->add_option("--max-size", max_size, "csv only");
  export_cmd->add_option("-o,--output", out);

  auto* word_cmd = app.add_subcommand("word", "canonical word of an edge set");
  word_cmd->add_option("file", input)->required();
  word_cmd->add_option("--edges", edges_text, "comma separated edge ids")->required();

  auto* instance_cmd = app.add_subcommand("instance", "edge set traced by a word");
  instance_cmd->add_option("file", input)->required();
  instance_cmd->add_option("--word", word_text)->required();
  instance_cmd->add_option("--origin", origin);
  instance_cmd->add_option("--north", north, "edge read as N at the origin; default its north slot");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "computed vs tabulated l, count and chromatic number");
  reproduce_cmd->add_option("--families", families, "family letters to sweep");
  reproduce_cmd->add_option("--break-family", break_family, "alter one family's construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    if (*gen) {
      TilingSpec spec{parse_family(std::string(1, family)), k, m, r};
      Tiling t = build(spec);
      emit(format == "dot" ? to_dot(t.graph, &t) : dump(tiling_to_json(t)), out);
      return kOk;
    }
    if (*validate_cmd) {
      LoadedGraph g = load(input);
      ValidationReport rep = validate(g.graph);
      if (!rep.is_tiling) {
        std::cout << label(input, g) << ": not a hexagonal tiling: " << rep.reason << "\n";
        return kMismatch;
      }
      std::cout << label(input, g) << ": valid, " << g.graph.vertex_count() << " vertices, "
                << rep.hexagons.size() << " hexagons\n";
      return kOk;
    }
    if (*tutte_cmd) {
      LoadedGraph g = load(input);
      std::optional<DiskCache> cache;
      std::string cert;
      std::optional<BivariatePolynomial> poly;
      if (!no_cache) {
        cache.emplace(cache_dir.empty() ? DiskCache::default_root() : fs::path(cache_dir));
        cert = canonical_certificate(g.graph);
        poly = cache->get(cert);
      }
      if (!poly) {
        if (engine == "subset") {
          EnumerationOptions opt;
          opt.workers = workers;
          poly = tutte_subset(g.graph, opt);
        } else {
          TutteOptions opt;
          opt.workers = workers;
          opt.cache_max_entries = memo_entries;
          poly = tutte_dc(g.graph, opt);
        }
        if (cache) cache->put(cert, *poly);
      }
      emit(format == "text" ? to_string(*poly) + "\n" : dump(polynomial_to_json(*poly)), out);
      return kOk;
    }
    if (*ranksize_cmd) {
      LoadedGraph g = load(input);
      EnumerationOptions opt{workers, budget};
      RankSizeTable t = rank_size(g.graph, max_size < 0 ? std::nullopt : std::optional<int>(max_size), opt);
      emit(format == "json" ? dump(rank_size_json(t)) : rank_size_csv(t), out);
      return kOk;
    }
    if (*cycles_cmd) {
      Tiling t = load_tiling(input);
      EssentialCensus c = shortest_essential(t, list);
      std::cout << name(t.spec) << ": l = " << c.length << ", count = " << c.count << "\n";
      auto ref = reference_essential_profile(t.spec);
      if (!ref || !ref->count)
        std::cout << "no tabulated value\n";
      else
        std::cout << "table: l = " << ref->length << ", count = " << *ref->count
                  << (ref->length == c.length && *ref->count == c.count ? " (match)" : " (MISMATCH)") << "\n";
      for (const Cycle& cyc : c.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) std::cout << (i ? " " : "") << cyc[i];
        std::cout << "\n";
      }
      return kOk;
    }
    if (*census_cmd) {
      Tiling t = load_tiling(input);
      auto rows = census(t, max_size, {workers, budget});
      if (format == "json") {
        Json list = Json::array();
        for (const auto& row : rows)
          list.push_back({{"rank", row.rank}, {"size", row.size}, {"components", row.components},
                          {"normal", row.normal}, {"count", row.count.str()}});
        std::cout << dump(list);
      } else if (format == "csv") {
        std::cout << "rank,size,components,normal,count\n";
        for (const auto& row : rows)
          std::cout << row.rank << ',' << row.size << ',' << row.components << ',' << row.normal << ','
                    << row.count << '\n';
      } else {
        std::cout << "rank size components normal count\n";
        for (const auto& row : rows)
          std::cout << row.rank << ' ' << row.size << ' ' << row.components << ' '
                    << (row.normal ? "normal" : "essential") << ' ' << row.count << '\n';
      }
      return kOk;
    }
    if (*distinguish_cmd) {
      LoadedGraph a = load(input), b = load(input2);
      Distinction d = distinguish(a.graph, b.graph, workers, budget);
      if (!d.separated) {
        std::cout << "indistinguishable within budget (sizes <= " << d.max_size << ")\n";
        return kMismatch;
      }
      std::cout << label(input, a) << " vs " << label(input2, b) << ": coefficient (" << d.rank << "," << d.size
                << ") differs: " << d.first << " vs " << d.second << "\n";
      return kOk;
    }
    if (*bijection_cmd) {
      const Family rival[] = {Family::r, Family::a, Family::b};
      Tiling t1 = build({Family::r, k, m, 0});
      Tiling t2 = build({rival[case_number - 1], k, m, case_number == 1 ? r : 0});
      int rank = rank_arg < 0 ? 2 * m + 1 : rank_arg, size = size_arg < 0 ? 2 * m + 2 : size_arg;
      BijectionReport rep = verify_bijection(t1, t2, case_number, rank, size, offset, budget);
      std::cout << "case " << case_number << ": " << name(t1.spec) << " vs " << name(t2.spec) << " at rank " << rank
                << ", size " << size << "\n";
      for (const auto& s : rep.strata)
        std::cout << "  s = " << s.alpha << ": " << s.left << " vs " << s.right << ", failures " << s.forward_failures
                  << " forward, " << s.backward_failures << " backward\n";
      std::cout << "  sets with no empty layer: " << rep.unstratified << "\n";
      for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
      std::cout << (rep.ok ? "bijection verified\n" : "bijection FAILED\n");
      return rep.ok ? kOk : kMismatch;
    }
    if (*case4_cmd) {
      Tiling t = load_tiling(input);
      Case4Report rep = case4_decomposition(t, case_k ? case_k : t.spec.k, budget);
      std::cout << name(t.spec) << " k = " << rep.k << ": A = " << rep.a << ", B = " << rep.b << ", C = " << rep.c
                << ", other = " << rep.other << ", s = " << rep.s << "\n"
                << "(A+B+C)(2k-3) = " << rep.lhs << ", s(|E|-2k-2) = " << rep.rhs
                << (rep.identity_ok ? " (holds)" : " (FAILS)") << "\n";
      return rep.identity_ok ? kOk : kMismatch;
    }
    if (*chromatic_cmd) {
      std::cout << chromatic_number(load(input).graph) << "\n";
      return kOk;
    }
    if (*export_cmd) {
      LoadedGraph g = load(input);
      std::string text;
      if (format == "json")
        text = dump(g.tiling ? tiling_to_json(*g.tiling) : graph_to_json(g.graph));
      else if (format == "dot")
        text = to_dot(g.graph, g.tiling ? &*g.tiling : nullptr);
      else
        text = rank_size_csv(rank_size(g.graph, max_size < 0 ? std::nullopt : std::optional<int>(max_size),
                                       {workers, budget}));
      emit(text, out);
      return kOk;
    }
    if (*word_cmd) {
      Tiling t = load_tiling(input);
      std::vector<EdgeId> ids = parse_ids(edges_text);
      for (EdgeId e : ids)
        if (!t.graph.has_edge(e)) throw InputError("--edges: no edge " + std::to_string(e));
      CanonicalWord w = canonical_word(t, ids);
      Json j;
      j["word"] = to_string(w.word);
      Json os = Json::array();
      for (const Orientation& o : w.orientations) os.push_back({{"origin", o.origin}, {"north", o.north}});
      j["orientations"] = os;
      std::cout << dump(j);
      return kOk;
    }
    if (*instance_cmd) {
      Tiling t = load_tiling(input);
      if (origin < 0 || origin >= t.vertex_count()) throw InputError("--origin: no such vertex");
      Orientation o{origin, north < 0 ? t.slots[origin][kNorth] : north};
      EdgeSetRecord rec = instance(t, parse_word(word_text), o);
      Json j;
      j["edges"] = rec.edges;
      j["size"] = rec.size;
      j["rank"] = rec.rank;
      j["normal"] = is_normal(t, rec.edges);
      std::cout << dump(j);
      return kOk;
    }
    if (*reproduce_cmd) {
      if (families.empty()) throw InputError("--families: empty sweep");
      for (char c : families) parse_family(std::string(1, c));
      std::vector<Row> rows;
      for (const TilingSpec& s : sweep()) {
        if (families.find(to_char(s.family)) == std::string::npos) continue;
        Row row;
        row.name = name(s);
        row.ref = reference_essential_profile(s);
        row.ref_chi = reference_chromatic_number(s.family);
        try {
          bool broken = !break_family.empty() && break_family[0] == to_char(s.family);
          Tiling t = broken ? build(s, broken_quotient(s)) : build(s);
          row.valid = validate(t.graph).is_tiling && t.vertex_count() == expected_vertex_count(s);
          EssentialCensus c = shortest_essential(t);
          row.l = c.length;
          row.count = c.count;
          row.chi = chromatic_number(t.graph);
          row.match = row.valid && row.ref && row.ref->length == row.l &&
                      (!row.ref->count || *row.ref->count == row.count) && row.chi == row.ref_chi;
        } catch (const std::exception& e) {
          std::cerr << row.name << ": " << e.what() << "\n";
        }
        rows.push_back(row);
      }
      std::cout << "tiling        valid  l   l(table)  count  count(table)  chi  chi(table)  result\n";
      std::vector<std::string> bad;
      for (const Row& row : rows) {
        std::string ref_l = row.ref ? std::to_string(row.ref->length) : "-";
        std::string ref_c = row.ref && row.ref->count ? std::to_string(*row.ref->count) : "-";
        char line[160];
        std::snprintf(line, sizeof line, "%-13s %-6s %-3d %-9s %-6lld %-13s %-4d %-11d %s\n", row.name.c_str(),
                      row.valid ? "yes" : "no", row.l, ref_l.c_str(), row.count, ref_c.c_str(), row.chi,
                      row.ref_chi, row.match ? "match" : "MISMATCH");
        std::cout << line;
        if (!row.match) bad.push_back(row.name);
      }
      if (rows.empty()) throw InputError("--families: no sweep entry selected");
      for (const auto& b : bad) std::cout << "mismatch: " << b << "\n";
      return bad.empty() ? kOk : kMismatch;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
