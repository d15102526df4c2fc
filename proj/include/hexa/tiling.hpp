#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexa/graph.hpp"
#include "hexa/lattice.hpp"

namespace hexa {

enum class Family { r, a, b, c, f, g, h };

char to_char(Family f);
Family parse_family(std::string_view text);

struct TilingSpec {
  Family family = Family::r;
  int k = 0;
  int m = 0;
  int r = 0;  // family r only
  friend bool operator==(const TilingSpec&, const TilingSpec&) = default;
};

// "H_{3,2,0}", "H_{3,2,a}".
std::string name(const TilingSpec& s);
// Throws ParameterError naming the violated constraint.
void check_parameters(const TilingSpec& s);
int expected_vertex_count(const TilingSpec& s);

// Quotient of the lattice by a group generated by one translation and one
// further motion (a translation for tori, a glide for Klein bottles).
struct Quotient {
  enum class Kind { torus, horizontal_glide, vertical_glide } kind = Kind::torus;
  int width = 0;   // columns in the fundamental domain
  int height = 0;  // rows in the fundamental domain
  int shift = 0;   // torus: vertical offset of the horizontal period; glides: glide length
  int mirror = 0;  // glides: the reflected coordinate maps x -> mirror - x

  // Representative of p's orbit and the motion taking p to it.
  std::pair<LatticePoint, Motion> reduce(LatticePoint p) const;
  int vertex_count() const { return width * height; }
  int index(LatticePoint rep) const { return rep.i * height + rep.j; }
  LatticePoint point(int index) const { return {index / height, index % height}; }
};

Quotient quotient_for(const TilingSpec& s);

// Neighbour slots of a vertex in the frame of its representative.
enum Slot { kNorth = 0, kSide = 1, kSouth = 2 };
Slot slot_of(Label l);
Label label_of(Slot s, LatticePoint rep);

struct Tiling {
  TilingSpec spec;
  Quotient quotient;
  Multigraph graph;
  std::vector<LatticePoint> coords;             // representative of each vertex
  std::vector<std::array<EdgeId, 3>> slots;     // edge in slot N, side (E or W), S
  std::vector<std::array<Motion, 3>> hops;      // takes the lattice neighbour to the neighbour's representative
  std::vector<Cycle> hexagons;
  std::vector<EdgeId> matching;                 // P: horizontal edges
  std::vector<EdgeId> vertical_matching;        // P': empty if some vertical cycle is odd
  std::vector<EdgeId> exterior;                 // edges with no lift inside the fundamental domain
  std::vector<std::array<EdgeId, 3>> rotation;  // clockwise order in the representative's drawing

  int vertex_count() const { return graph.vertex_count(); }
  VertexId vertex_at(LatticePoint p) const;  // projection of any lattice point
  // Lattice edge -> edge of the tiling.
  EdgeId edge_at(LatticePoint p, LatticePoint q) const;
  bool is_horizontal(EdgeId e) const;
};

Tiling build(const TilingSpec& s);
// Same construction over an explicit quotient; used for negative controls.
Tiling build(const TilingSpec& s, const Quotient& q);

struct ValidationReport {
  bool is_tiling = false;
  std::string reason;  // empty when valid
  std::vector<Cycle> hexagons;
};

// Connected, cubic, girth 6, and some set of 6-cycles covers every 2-path once.
ValidationReport validate(const Multigraph& g);

int chromatic_number(const Multigraph& g);
Multigraph contract_matching(const Tiling& t);
bool is_locally_grid(const Multigraph& g);

struct EssentialProfile {
  int length = 0;
  std::optional<long long> count;  // some table cells are blank
};

// Table values for the shortest essential cycles; nullopt when the
// parameters fall in no row. The b sum limit is read as a ceiling.
std::optional<EssentialProfile> reference_essential_profile(const TilingSpec& s);
int reference_chromatic_number(Family f);

// Three smallest admissible parameter tuples per family, in lexicographic order.
std::vector<TilingSpec> sweep();

}  // namespace hexa
