#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hexa {

// Vertex of the infinite hexagonal tiling drawn as a brick wall on Z x Z:
// vertical edges everywhere, horizontal edge (i,j)-(i+1,j) iff i+j is even.
struct LatticePoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline bool has_east(LatticePoint p) { return ((p.i + p.j) & 1) == 0; }

std::array<LatticePoint, 3> lattice_neighbors(LatticePoint p);

// Label order N < E < S < W is the traversal order of encode().
enum class Label : std::uint8_t { N, E, S, W };

char to_char(Label l);
Label inverse(Label l);
LatticePoint delta(Label l);
bool is_horizontal(Label l);

// Throws MalformedWord when the step does not exist at p.
LatticePoint step(LatticePoint p, Label l);

struct LatticeEdge {
  LatticePoint a;  // a < b
  LatticePoint b;
  friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

LatticeEdge make_lattice_edge(LatticePoint p, LatticePoint q);

using Word = std::vector<Label>;

std::string to_string(const Word& w);
// Parses and enforces the alphabet rules; throws MalformedWord.
Word parse_word(std::string_view text);
// Rules: no leading W, no EE or WW, and the N/S parity conditions
// before and between horizontal labels.
bool satisfies_word_rules(const Word& w);

// Finite connected edge set of the lattice containing (0,0).
struct Shape {
  std::vector<LatticeEdge> edges;  // sorted, unique

  int size() const { return static_cast<int>(edges.size()); }
  std::vector<LatticePoint> vertices() const;
  int rank() const;
  bool contains_origin() const;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape make_shape(std::vector<LatticeEdge> edges);
bool is_connected(const Shape& s);

// Edges covered by the walk from (0,0).
Shape decode(const Word& w);
// Greedy traversal from (0,0): take the smallest-label unvisited edge; when
// none is left at the current vertex, walk a label-lexicographic shortest
// path to the nearest vertex that has one.
Word encode(const Shape& s);

// Automorphism (i,j) -> (a + eps*i, b + sig*j) of the lattice that keeps
// horizontal edges horizontal. Requires a+b even for eps=1, odd for eps=-1.
struct Motion {
  int a = 0;
  int b = 0;
  int eps = 1;
  int sig = 1;

  LatticePoint operator()(LatticePoint p) const { return {a + eps * p.i, b + sig * p.j}; }
  LatticeEdge operator()(const LatticeEdge& e) const { return make_lattice_edge((*this)(e.a), (*this)(e.b)); }
  bool preserves_lattice() const;
  friend bool operator==(const Motion&, const Motion&) = default;
};

Motion compose(const Motion& f, const Motion& g);  // f after g
Motion invert(const Motion& f);
Shape apply(const Motion& f, const Shape& s);

// Representative of the orbit of s under motions, among images containing
// (0,0); lexicographically smallest edge list.
Shape canonical_shape(const Shape& s);
// Number of motions mapping s onto itself.
int sym(const Shape& s);

// Orbit representatives of connected shapes with the given number of edges.
std::vector<Shape> connected_shapes(int size);

struct LadderPaths {
  std::uint64_t count = 0;
  int length = 0;
};
// Shortest paths across an i x j ladder, plain or displaced.
LadderPaths ladder_paths(int i, int j, bool displaced);

}  // namespace hexa
