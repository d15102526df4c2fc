#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hexa/graph.hpp"
#include "hexa/lattice.hpp"
#include "hexa/tiling.hpp"

namespace hexa {

// Origin vertex and the edge labelled N there. The east edge is the
// matching edge at the origin and the partner is its other end.
struct Orientation {
  VertexId origin = 0;
  EdgeId north = 0;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

EdgeId east_edge(const Tiling& t, const Orientation& o);
VertexId partner(const Tiling& t, const Orientation& o);
// All 4pq orientations: every vertex with either vertical edge as north.
std::vector<Orientation> all_orientations(const Tiling& t);

// Position of a walk in the lattice drawn from an orientation.
// to_rep takes lattice points near `at` to the current vertex's representative frame.
struct Frame {
  VertexId vertex = 0;
  LatticePoint at;
  Motion to_rep;
};

Frame start(const Tiling& t, const Orientation& o);
// Steps along the label; throws MalformedWord if the label is absent at the position.
EdgeId advance(const Tiling& t, Frame& f, Label l);
// Steps across a given edge and returns its label; throws InputError if not incident.
Label cross(const Tiling& t, Frame& f, EdgeId e);
// Orientation data induced at the current vertex: the edge labelled N and
// whether the matching edge there reads E (false: W).
EdgeId north_edge(const Tiling& t, const Frame& f);
bool east_reads_east(const Frame& f);

struct LabeledWalk {
  VertexId start = 0;
  std::vector<EdgeId> edges;
};

struct Transported {
  Frame frame;
  Word labels;
};

Transported transport(const Tiling& t, const Orientation& o, const LabeledWalk& walk);

// Edge set traced by the word from the orientation.
EdgeSetRecord instance(const Tiling& t, const Word& w, const Orientation& o);

struct Lift {
  Shape shape;
  std::map<VertexId, LatticePoint> position;
};

// Preconditions: a connected, normal, and |a| <= l_H + 3 for orient and
// canonical_word; o.origin in V(a). Throws PreconditionError.
std::map<VertexId, LatticePoint> orient(const Tiling& t, const Orientation& o, std::span<const EdgeId> a);
Lift lift(const Tiling& t, std::span<const EdgeId> a, const Orientation& o);

struct CanonicalWord {
  Word word;
  std::vector<Orientation> orientations;  // those whose instance is the set
};
CanonicalWord canonical_word(const Tiling& t, std::span<const EdgeId> a);

}  // namespace hexa
