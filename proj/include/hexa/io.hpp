#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "hexa/graph.hpp"
#include "hexa/polynomial.hpp"
#include "hexa/tiling.hpp"
#include "hexa/tutte.hpp"

namespace hexa {

using Json = nlohmann::ordered_json;

// {"vertices":[0,1,...], "edges":[[id,u,v],...]}
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

// Graph fields plus spec, coordinates, hexagons, matchings and exterior edges.
Json tiling_to_json(const Tiling& t);

// A graph file, optionally carrying a tiling spec. When the spec is present
// the tiling is rebuilt and its edges must match the file.
struct LoadedGraph {
  Multigraph graph;
  std::optional<Tiling> tiling;
};
LoadedGraph load_graph_json(const Json& j);

// {"terms":[{"x":i,"y":j,"c":"<decimal>"}]}, terms in decreasing x then y.
Json polynomial_to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const Json& j);

// Header "i,j,count"; rows with nonzero counts.
std::string rank_size_csv(const RankSizeTable& t);
Json rank_size_json(const RankSizeTable& t);

// Hexagons, when given, are listed as comments.
std::string to_dot(const Multigraph& g, const Tiling* t = nullptr);

// Parses text; syntax errors become InputError with line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Tutte polynomials on disk, one file per certificate hash. A hit is
// accepted only if the stored certificate equals the query.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path root);
  // HEXA_CACHE if set, else $HOME/.cache/hexa, else ./.hexa_cache.
  static std::filesystem::path default_root();

  std::optional<BivariatePolynomial> get(const std::string& certificate) const;
  void put(const std::string& certificate, const BivariatePolynomial& p) const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path file_for(const std::string& certificate) const;
  std::filesystem::path root_;
};

}  // namespace hexa
