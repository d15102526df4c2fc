#include "hexa/orientation.hpp"

#include <algorithm>
#include <deque>

#include "hexa/errors.hpp"
#include "hexa/homotopy.hpp"

namespace hexa {

EdgeId east_edge(const Tiling& t, const Orientation& o) { return t.slots[o.origin][kSide]; }

VertexId partner(const Tiling& t, const Orientation& o) { return t.graph.other_end(east_edge(t, o), o.origin); }

std::vector<Orientation> all_orientations(const Tiling& t) {
  std::vector<Orientation> out;
  out.reserve(2 * t.vertex_count());
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    out.push_back({v, t.slots[v][kNorth]});
    out.push_back({v, t.slots[v][kSouth]});
  }
  return out;
}

Frame start(const Tiling& t, const Orientation& o) {
  const auto& sl = t.slots.at(o.origin);
  if (o.north != sl[kNorth] && o.north != sl[kSouth])
    throw InputError("north edge " + std::to_string(o.north) + " is not a vertical edge at vertex " +
                     std::to_string(o.origin));
  LatticePoint p = t.coords[o.origin];
  int eps = has_east(p) ? 1 : -1;
  int sig = o.north == sl[kNorth] ? 1 : -1;
  return Frame{o.origin, {0, 0}, Motion{p.i, p.j, eps, sig}};
}

namespace {

Slot rep_slot(const Tiling& t, const Frame& f, LatticePoint next) {
  LatticePoint here = t.coords[f.vertex];
  LatticePoint there = f.to_rep(next);
  if (there.i == here.i) return there.j > here.j ? kNorth : kSouth;
  return kSide;
}

void move(const Tiling& t, Frame& f, LatticePoint next, Slot s) {
  const Motion& hop = t.hops[f.vertex][s];
  f.to_rep = compose(hop, f.to_rep);
  f.vertex = t.quotient.index(f.to_rep(next));
  f.at = next;
}

}  // namespace

EdgeId advance(const Tiling& t, Frame& f, Label l) {
  LatticePoint next = step(f.at, l);
  Slot s = rep_slot(t, f, next);
  EdgeId e = t.slots[f.vertex][s];
  move(t, f, next, s);
  return e;
}

Label cross(const Tiling& t, Frame& f, EdgeId e) {
  for (LatticePoint next : lattice_neighbors(f.at)) {
    Slot s = rep_slot(t, f, next);
    if (t.slots[f.vertex][s] != e) continue;
    Label l = next.j > f.at.j ? Label::N : next.j < f.at.j ? Label::S : next.i > f.at.i ? Label::E : Label::W;
    move(t, f, next, s);
    return l;
  }
  throw InputError("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(f.vertex));
}

EdgeId north_edge(const Tiling& t, const Frame& f) {
  return t.slots[f.vertex][rep_slot(t, f, {f.at.i, f.at.j + 1})];
}

bool east_reads_east(const Frame& f) { return has_east(f.at); }

Transported transport(const Tiling& t, const Orientation& o, const LabeledWalk& walk) {
  if (walk.start != o.origin) throw InputError("walk does not start at the orientation's origin");
  Transported out{start(t, o), {}};
  for (EdgeId e : walk.edges) out.labels.push_back(cross(t, out.frame, e));
  return out;
}

EdgeSetRecord instance(const Tiling& t, const Word& w, const Orientation& o) {
  Frame f = start(t, o);
  std::vector<EdgeId> edges;
  edges.reserve(w.size());
  for (Label l : w) edges.push_back(advance(t, f, l));
  return make_record(t.graph, std::move(edges));
}

namespace {

enum class LiftStatus { ok, disconnected, essential, missing_origin };

LiftStatus try_lift(const Tiling& t, std::span<const EdgeId> a, const Orientation& o, Lift& out) {
  std::map<VertexId, std::vector<EdgeId>> adj;
  for (EdgeId e : a) {
    const Edge& ed = t.graph.edge(e);
    adj[ed.u].push_back(e);
    if (ed.v != ed.u) adj[ed.v].push_back(e);
  }
  if (!a.empty() && !adj.count(o.origin)) return LiftStatus::missing_origin;
  std::map<VertexId, Frame> frames;
  frames[o.origin] = start(t, o);
  std::deque<VertexId> queue{o.origin};
  std::vector<LatticeEdge> edges;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : adj[x]) {
      Frame f = frames[x];
      cross(t, f, e);
      auto it = frames.find(f.vertex);
      if (it == frames.end()) {
        frames[f.vertex] = f;
        queue.push_back(f.vertex);
      } else if (it->second.at != f.at) {
        return LiftStatus::essential;
      }
      edges.push_back(make_lattice_edge(frames[x].at, f.at));
    }
  }
  if (frames.size() < std::max<std::size_t>(adj.size(), 1)) return LiftStatus::disconnected;
  out.shape = make_shape(std::move(edges));
  out.position.clear();
  for (const auto& [v, f] : frames) out.position[v] = f.at;
  return LiftStatus::ok;
}

void require_lift(LiftStatus s) {
  switch (s) {
    case LiftStatus::ok: return;
    case LiftStatus::disconnected: throw PreconditionError("edge set is not connected");
    case LiftStatus::essential: throw PreconditionError("edge set contains an essential cycle");
    case LiftStatus::missing_origin: throw PreconditionError("origin is not a vertex of the edge set");
  }
}

void require_small(const Tiling& t, std::span<const EdgeId> a) {
  // Girth 6 gives l_H >= 6, so small sets skip the cycle search.
  if (a.size() <= 9) return;
  int limit = essential_length(t) + 3;
  if (static_cast<int>(a.size()) > limit)
    throw PreconditionError("edge set has " + std::to_string(a.size()) + " edges; the limit is l_H + 3 = " +
                            std::to_string(limit));
}

}  // namespace

Lift lift(const Tiling& t, std::span<const EdgeId> a, const Orientation& o) {
  Lift out;
  require_lift(try_lift(t, a, o, out));
  return out;
}

std::map<VertexId, LatticePoint> orient(const Tiling& t, const Orientation& o, std::span<const EdgeId> a) {
  require_small(t, a);
  return lift(t, a, o).position;
}

CanonicalWord canonical_word(const Tiling& t, std::span<const EdgeId> a) {
  require_small(t, a);
  std::vector<EdgeId> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw PreconditionError("empty edge set");
  VertexId v0 = t.graph.edge(sorted.front()).u;
  Lift base = lift(t, sorted, Orientation{v0, t.slots[v0][kNorth]});

  CanonicalWord out;
  out.word = encode(canonical_shape(base.shape));
  for (const auto& [v, p] : base.position)
    for (Slot s : {kNorth, kSouth}) {
      Orientation o{v, t.slots[v][s]};
      if (instance(t, out.word, o).edges == sorted) out.orientations.push_back(o);
    }
  return out;
}

}  // namespace hexa
