#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace hexa {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on dense vertex ids 0..n-1. Edge ids are
// caller-visible and survive deletion and contraction unchanged.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  // Loops appear twice.
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incident_[v].size()); }
  VertexId other_end(EdgeId id, VertexId v) const;
  EdgeId max_edge_id() const { return static_cast<EdgeId>(slot_.size()) - 1; }

  Multigraph without_edge(EdgeId id) const;
  // Endpoint v of the edge is merged into u; vertices above v shift down by one.
  Multigraph contracted(EdgeId id) const;
  Multigraph without_vertices(std::span<const VertexId> doomed) const;
  // Same edges, vertices relabelled by perm (new id = perm[old]).
  Multigraph relabelled(std::span<const int> perm) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<int> slot_;  // edge id -> index in edges_, -1 if absent
  std::vector<std::vector<EdgeId>> incident_;
};

// Cached statistics of an edge subset.
struct EdgeSetRecord {
  std::vector<EdgeId> edges;  // sorted
  int size = 0;
  int rank = 0;
  int components = 0;  // among vertices touched by the set
};

// Size of a spanning forest of (V(A), A). Unknown ids raise InputError.
int rank(const Multigraph& g, std::span<const EdgeId> a);
EdgeSetRecord make_record(const Multigraph& g, std::vector<EdgeId> a);
int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();
int girth(const Multigraph& g);
// An edge lying on some shortest cycle, or -1 for forests.
EdgeId edge_on_shortest_cycle(const Multigraph& g);

using Cycle = std::vector<EdgeId>;  // sorted edge ids
std::vector<Cycle> enumerate_cycles(const Multigraph& g, int max_len);

int edge_connectivity(const Multigraph& g);

// Equal iff the graphs are isomorphic, loops and multiplicities included.
std::string canonical_certificate(const Multigraph& g);

}  // namespace hexa
