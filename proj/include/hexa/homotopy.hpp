#pragma once

#include <span>
#include <vector>

#include "hexa/graph.hpp"
#include "hexa/lattice.hpp"
#include "hexa/tiling.hpp"

namespace hexa {

struct CycleClass {
  Cycle cycle;
  int length = 0;
  bool essential = false;
  LatticePoint displacement;  // end of the lift that starts at (0,0)
  Motion holonomy;            // deck motion carrying the start of the lift to its end
};

// Lifts the cycle to the lattice from its smallest vertex; essential iff the
// lift does not close. Throws InputError if c is not a simple cycle.
CycleClass classify_cycle(const Tiling& t, std::span<const EdgeId> c);

struct EssentialCensus {
  int length = 0;
  long long count = 0;
  std::vector<Cycle> cycles;  // filled only on request
};

// Breadth-first search in the lattice from one lift of every vertex; the
// nearest other lift of the same vertex closes a shortest essential cycle.
EssentialCensus shortest_essential(const Tiling& t, bool list_cycles = false);
int essential_length(const Tiling& t);

// Per edge: endpoints and the motion from v's representative frame to u's.
struct EdgeRelation {
  VertexId u = 0;
  VertexId v = 0;
  Motion v_to_u;
};
std::vector<EdgeRelation> edge_relations(const Tiling& t);

bool is_normal(const Tiling& t, std::span<const EdgeId> a);

// True iff some n-edge set contains an essential cycle together with an
// instance of the word's shape. Throws PreconditionError if the shape is acyclic.
bool forbidden_for(const Tiling& t, const Word& w, int n);

}  // namespace hexa
