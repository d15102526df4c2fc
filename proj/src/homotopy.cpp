#include "hexa/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hexa/errors.hpp"
#include "hexa/motion_union_find.hpp"
#include "hexa/orientation.hpp"

namespace hexa {

CycleClass classify_cycle(const Tiling& t, std::span<const EdgeId> c) {
  std::vector<EdgeId> edges(c.begin(), c.end());
  std::sort(edges.begin(), edges.end());
  if (edges.empty() || std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("not a cycle: empty or repeated edges");
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    const Edge& ed = t.graph.edge(e);
    at[ed.u].push_back(e);
    at[ed.v].push_back(e);
  }
  for (const auto& [v, list] : at)
    if (list.size() != 2) throw InputError("not a cycle: vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(list.size()) + " in the set");
  if (make_record(t.graph, edges).components != 1) throw InputError("not a cycle: the set is disconnected");

  VertexId v0 = at.begin()->first;
  Orientation o{v0, t.slots[v0][kNorth]};
  Frame f = start(t, o);
  const Motion initial = f.to_rep;
  EdgeId e = std::min(at[v0][0], at[v0][1]);
  for (std::size_t n = 0; n < edges.size(); ++n) {
    cross(t, f, e);
    const auto& pair = at[f.vertex];
    e = pair[0] == e ? pair[1] : pair[0];
  }
  CycleClass out;
  out.cycle = edges;
  out.length = static_cast<int>(edges.size());
  out.displacement = f.at;
  out.holonomy = compose(invert(f.to_rep), initial);
  out.essential = f.at != LatticePoint{0, 0};
  return out;
}

namespace {

struct Reach {
  int length = 0;  // 0: none found
  long long paths = 0;
  std::vector<LatticePoint> ends;
  std::map<LatticePoint, std::pair<int, std::vector<LatticePoint>>> layers;  // distance, predecessors
};

Reach search_from(const Tiling& t, VertexId v, int cap) {
  Reach out;
  LatticePoint origin = t.coords[v];
  std::map<LatticePoint, long long> count{{origin, 1}};
  out.layers[origin] = {0, {}};
  std::vector<LatticePoint> layer{origin};
  for (int d = 0; d < cap && !layer.empty(); ++d) {
    std::map<LatticePoint, long long> next;
    for (LatticePoint p : layer)
      for (LatticePoint q : lattice_neighbors(p)) {
        auto it = out.layers.find(q);
        if (it != out.layers.end() && it->second.first <= d) continue;
        next[q] += count[p];
        auto& entry = out.layers[q];
        entry.first = d + 1;
        entry.second.push_back(p);
      }
    layer.clear();
    for (const auto& [q, c] : next) {
      count[q] = c;
      layer.push_back(q);
      if (t.vertex_at(q) == v) {
        out.length = d + 1;
        out.paths += c;
        out.ends.push_back(q);
      }
    }
    if (out.length) break;
  }
  return out;
}

}  // namespace

EssentialCensus shortest_essential(const Tiling& t, bool list_cycles) {
  const int n = t.vertex_count();
  const int cap = 2 * n + 2;
  EssentialCensus out;
  long long total = 0;
  std::vector<Reach> reaches(n);
  for (VertexId v = 0; v < n; ++v) {
    reaches[v] = search_from(t, v, out.length ? out.length : cap);
    const Reach& r = reaches[v];
    if (!r.length) continue;
    if (!out.length || r.length < out.length) {
      out.length = r.length;
      total = 0;
    }
    if (r.length == out.length) total += r.paths;
  }
  if (!out.length) throw PreconditionError("no essential cycle within the search radius");
  out.count = total / (2 * out.length);
  if (list_cycles) {
    std::set<Cycle> found;
    for (VertexId v = 0; v < n; ++v) {
      const Reach& r = reaches[v];
      if (r.length != out.length) continue;
      std::vector<LatticePoint> path;
      auto back = [&](auto&& self, LatticePoint p) -> void {
        if (p == t.coords[v]) {
          Cycle c;
          for (std::size_t x = 1; x < path.size(); ++x) c.push_back(t.edge_at(path[x - 1], path[x]));
          c.push_back(t.edge_at(path.back(), p));
          std::sort(c.begin(), c.end());
          found.insert(c);
          return;
        }
        path.push_back(p);
        for (LatticePoint q : r.layers.at(p).second) self(self, q);
        path.pop_back();
      };
      for (LatticePoint end : r.ends) back(back, end);
    }
    out.cycles.assign(found.begin(), found.end());
  }
  return out;
}

int essential_length(const Tiling& t) { return shortest_essential(t).length; }

std::vector<EdgeRelation> edge_relations(const Tiling& t) {
  std::vector<EdgeRelation> out(t.graph.max_edge_id() + 1);
  for (const Edge& e : t.graph.edges()) {
    const auto& sl = t.slots[e.u];
    int s = static_cast<int>(std::find(sl.begin(), sl.end(), e.id) - sl.begin());
    out[e.id] = {e.u, e.v, invert(t.hops[e.u][s])};
  }
  return out;
}

bool is_normal(const Tiling& t, std::span<const EdgeId> a) {
  MotionUnionFind uf(t.vertex_count());
  for (EdgeId e : a) {
    const Edge& ed = t.graph.edge(e);
    const auto& sl = t.slots[ed.u];
    int s = static_cast<int>(std::find(sl.begin(), sl.end(), e) - sl.begin());
    if (!uf.unite(ed.u, ed.v, invert(t.hops[ed.u][s]))) return false;
  }
  return true;
}

bool forbidden_for(const Tiling& t, const Word& w, int n) {
  Shape b = decode(w);
  if (b.rank() == b.size()) throw PreconditionError("the word's shape has no cycle");
  if (n > t.graph.edge_count()) return false;
  if (n < essential_length(t)) return false;

  std::set<std::vector<EdgeId>> copies;
  for (const Orientation& o : all_orientations(t)) copies.insert(instance(t, w, o).edges);
  std::vector<Cycle> essential;
  for (const Cycle& c : enumerate_cycles(t.graph, n))
    if (classify_cycle(t, c).essential) essential.push_back(c);

  for (const auto& copy : copies)
    for (const Cycle& z : essential) {
      std::vector<EdgeId> both;
      std::set_union(copy.begin(), copy.end(), z.begin(), z.end(), std::back_inserter(both));
      if (static_cast<int>(both.size()) <= n) return true;
    }
  return false;
}

}  // namespace hexa
