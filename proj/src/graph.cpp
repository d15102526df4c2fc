#include "hexa/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hexa/errors.hpp"
#include "hexa/union_find.hpp"

namespace hexa {

Multigraph::Multigraph(int vertex_count) : incident_(vertex_count) {}

VertexId Multigraph::add_vertex() {
  incident_.emplace_back();
  return vertex_count() - 1;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  EdgeId id = static_cast<EdgeId>(slot_.size());
  add_edge_with_id(id, u, v);
  return id;
}

void Multigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  if (id < 0) throw InputError("negative edge id");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw InputError("edge " + std::to_string(id) + " has an endpoint outside the vertex range");
  if (has_edge(id)) throw InputError("duplicate edge id " + std::to_string(id));
  if (static_cast<std::size_t>(id) >= slot_.size()) slot_.resize(id + 1, -1);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), id,
                              [](const Edge& e, EdgeId x) { return e.id < x; });
  std::size_t at = pos - edges_.begin();
  edges_.insert(pos, Edge{id, u, v});
  for (std::size_t i = at; i < edges_.size(); ++i) slot_[edges_[i].id] = static_cast<int>(i);
  incident_[u].push_back(id);
  incident_[v].push_back(id);
}

bool Multigraph::has_edge(EdgeId id) const {
  return id >= 0 && static_cast<std::size_t>(id) < slot_.size() && slot_[id] >= 0;
}

const Edge& Multigraph::edge(EdgeId id) const {
  if (!has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
  return edges_[slot_[id]];
}

VertexId Multigraph::other_end(EdgeId id, VertexId v) const {
  const Edge& e = edge(id);
  return e.u == v ? e.v : e.u;
}

namespace {

Multigraph rebuild(int n, const std::vector<Edge>& edges) {
  Multigraph g(n);
  for (const Edge& e : edges) g.add_edge_with_id(e.id, e.u, e.v);
  return g;
}

}  // namespace

Multigraph Multigraph::without_edge(EdgeId id) const {
  edge(id);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_)
    if (e.id != id) kept.push_back(e);
  return rebuild(vertex_count(), kept);
}

Multigraph Multigraph::contracted(EdgeId id) const {
  const Edge target = edge(id);
  if (target.is_loop()) return without_edge(id);
  VertexId keep = std::min(target.u, target.v);
  VertexId gone = std::max(target.u, target.v);
  auto remap = [&](VertexId x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_)
    if (e.id != id) kept.push_back(Edge{e.id, remap(e.u), remap(e.v)});
  return rebuild(vertex_count() - 1, kept);
}

Multigraph Multigraph::without_vertices(std::span<const VertexId> doomed) const {
  std::vector<int> newid(vertex_count(), 0);
  for (VertexId v : doomed) newid[v] = -1;
  int n = 0;
  for (int& x : newid) x = x < 0 ? -1 : n++;
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (newid[e.u] < 0 || newid[e.v] < 0) continue;
    kept.push_back(Edge{e.id, newid[e.u], newid[e.v]});
  }
  return rebuild(n, kept);
}

Multigraph Multigraph::relabelled(std::span<const int> perm) const {
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.push_back(Edge{e.id, perm[e.u], perm[e.v]});
  return rebuild(vertex_count(), moved);
}

int rank(const Multigraph& g, std::span<const EdgeId> a) {
  RollbackUnionFind uf(g.vertex_count());
  for (EdgeId id : a) {
    const Edge& e = g.edge(id);
    uf.unite(e.u, e.v);
  }
  return uf.merges();
}

EdgeSetRecord make_record(const Multigraph& g, std::vector<EdgeId> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  RollbackUnionFind uf(g.vertex_count());
  std::vector<char> touched(g.vertex_count(), 0);
  int touched_count = 0;
  for (EdgeId id : a) {
    const Edge& e = g.edge(id);
    for (VertexId x : {e.u, e.v})
      if (!touched[x]) touched[x] = 1, ++touched_count;
    uf.unite(e.u, e.v);
  }
  EdgeSetRecord rec;
  rec.size = static_cast<int>(a.size());
  rec.rank = uf.merges();
  rec.components = touched_count - rec.rank;
  rec.edges = std::move(a);
  return rec;
}

int component_count(const Multigraph& g) {
  RollbackUnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return g.vertex_count() - uf.merges();
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

namespace {

// Shortest cycle length and one edge on it.
std::pair<int, EdgeId> shortest_cycle(const Multigraph& g) {
  int best = kInfiniteGirth;
  EdgeId witness = -1;
  for (const Edge& e : g.edges())
    if (e.is_loop()) return {1, e.id};
  const int n = g.vertex_count();
  std::vector<int> dist(n), via(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(via.begin(), via.end(), -1);
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (EdgeId id : g.incident(u)) {
        if (id == via[u]) continue;
        VertexId w = g.other_end(id, u);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via[w] = id;
          queue.push_back(w);
        } else if (dist[u] + dist[w] + 1 < best) {
          best = dist[u] + dist[w] + 1;
          witness = id;
        }
      }
    }
  }
  return {best, witness};
}

}  // namespace

int girth(const Multigraph& g) { return shortest_cycle(g).first; }

EdgeId edge_on_shortest_cycle(const Multigraph& g) { return shortest_cycle(g).second; }

std::vector<Cycle> enumerate_cycles(const Multigraph& g, int max_len) {
  std::vector<Cycle> out;
  for (const Edge& e : g.edges())
    if (e.is_loop() && max_len >= 1) out.push_back({e.id});

  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<EdgeId> path;
  // Cycles are rooted at their smallest vertex and reported once by
  // insisting the first edge id is below the closing edge id.
  auto dfs = [&](auto&& self, VertexId root, VertexId u) -> void {
    for (EdgeId id : g.incident(u)) {
      const Edge& e = g.edge(id);
      if (e.is_loop()) continue;
      if (!path.empty() && id == path.back()) continue;
      VertexId w = g.other_end(id, u);
      if (w == root) {
        if (!path.empty() && path.front() < id && static_cast<int>(path.size()) + 1 <= max_len) {
          Cycle c = path;
          c.push_back(id);
          std::sort(c.begin(), c.end());
          out.push_back(std::move(c));
        }
        continue;
      }
      if (w < root || on_path[w] || static_cast<int>(path.size()) + 1 >= max_len) continue;
      on_path[w] = 1;
      path.push_back(id);
      self(self, root, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

int edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges())
    if (!e.is_loop()) ++w[e.u][e.v], ++w[e.v][e.u];

  // Stoer-Wagner.
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  while (alive.size() > 1) {
    const std::size_t k = alive.size();
    std::vector<long long> key(k, 0);
    std::vector<char> added(k, 0);
    std::size_t prev = 0, last = 0;
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t pick = k;
      for (std::size_t i = 0; i < k; ++i)
        if (!added[i] && (pick == k || key[i] > key[pick])) pick = i;
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 == k) best = std::min(best, key[pick]);
      for (std::size_t i = 0; i < k; ++i)
        if (!added[i]) key[i] += w[alive[pick]][alive[i]];
    }
    int s = alive[prev], t = alive[last];
    for (int x = 0; x < n; ++x) {
      w[s][x] += w[t][x];
      w[x][s] = w[s][x];
    }
    w[s][s] = 0;
    alive.erase(alive.begin() + last);
  }
  return static_cast<int>(best);
}

}  // namespace hexa
