#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hexa/errors.hpp"
#include "hexa/graph.hpp"

using namespace hexa;

namespace {

Multigraph cycle_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph path_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph random_multigraph(std::mt19937& rng, int n, int m) {
  Multigraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int e = 0; e < m; ++e) g.add_edge(pick(rng), pick(rng));
  return g;
}

Multigraph shuffled(const Multigraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  Multigraph out(g.vertex_count());
  for (const Edge& e : edges) {
    if (rng() & 1) out.add_edge(perm[e.u], perm[e.v]);
    else out.add_edge(perm[e.v], perm[e.u]);
  }
  return out;
}

// Every simple cycle via edge subsets: connected, all degrees 2.
std::set<Cycle> naive_cycles(const Multigraph& g, int max_len) {
  std::set<Cycle> out;
  const int m = g.edge_count();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<EdgeId> a;
    std::vector<int> deg(g.vertex_count(), 0);
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) {
        const Edge& e = g.edges()[b];
        a.push_back(e.id);
        deg[e.u]++;
        deg[e.v]++;
      }
    if (static_cast<int>(a.size()) > max_len) continue;
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; })) continue;
    EdgeSetRecord rec = make_record(g, a);
    if (rec.components == 1) out.insert(rec.edges);
  }
  return out;
}

}  // namespace

TEST_CASE("rank of small edge sets") {
  Multigraph tri = cycle_graph(3);
  CHECK(rank(tri, std::vector<EdgeId>{}) == 0);
  CHECK(rank(tri, std::vector<EdgeId>{0, 1, 2}) == 2);
  CHECK(rank(tri, std::vector<EdgeId>{0}) == 1);
  CHECK_THROWS_AS(rank(tri, std::vector<EdgeId>{7}), InputError);
}

TEST_CASE("rank is monotone and bounded") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph g = random_multigraph(rng, 6, 9);
    std::vector<EdgeId> a;
    int prev = 0;
    for (const Edge& e : g.edges()) {
      a.push_back(e.id);
      int r = rank(g, a);
      CHECK(r >= prev);
      CHECK(r <= static_cast<int>(a.size()));
      CHECK(r <= g.vertex_count() - 1);
      prev = r;
    }
    CHECK(prev == g.vertex_count() - component_count(g));
    EdgeSetRecord rec = make_record(g, a);
    CHECK(rec.rank == prev);
  }
}

TEST_CASE("deletion keeps edge ids") {
  Multigraph g = cycle_graph(4);
  Multigraph h = g.without_edge(1);
  CHECK(h.edge_count() == 3);
  CHECK(h.has_edge(0));
  CHECK(!h.has_edge(1));
  CHECK(h.edge(2).u == 2);
  Multigraph c = g.contracted(0);
  CHECK(c.vertex_count() == 3);
  CHECK(c.has_edge(3));
  CHECK(c.edge(3).u == 2);
  CHECK(c.edge(3).v == 0);
}

TEST_CASE("loops count twice in the degree") {
  Multigraph g(1);
  g.add_edge(0, 0);
  CHECK(g.degree(0) == 2);
  CHECK(girth(g) == 1);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(3)) == 3);
  CHECK(girth(cycle_graph(6)) == 6);
  CHECK(girth(path_graph(4)) == kInfiniteGirth);
  CHECK(girth(complete_graph(4)) == 3);
  Multigraph dbl(2);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  CHECK(girth(dbl) == 2);
  CHECK(edge_on_shortest_cycle(path_graph(4)) == -1);
}

TEST_CASE("cycle enumeration") {
  CHECK(enumerate_cycles(cycle_graph(6), 6).size() == 1);
  CHECK(enumerate_cycles(cycle_graph(6), 5).empty());
  CHECK(enumerate_cycles(complete_graph(4), 3).size() == 4);
  CHECK(enumerate_cycles(complete_graph(4), 4).size() == 7);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = random_multigraph(rng, 5 + trial % 3, 6 + trial % 7);
    for (int len : {3, 5, 12}) {
      auto fast = enumerate_cycles(g, len);
      std::set<Cycle> slow = naive_cycles(g, len);
      std::set<Cycle> fast_set(fast.begin(), fast.end());
      CHECK(fast.size() == fast_set.size());
      CHECK(fast_set == slow);
    }
  }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(path_graph(3)) == 1);
  CHECK(edge_connectivity(cycle_graph(6)) == 2);
  CHECK(edge_connectivity(complete_graph(5)) == 4);
  Multigraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK(edge_connectivity(two) == 0);
}

TEST_CASE("canonical certificate") {
  std::mt19937 rng(3);
  Multigraph c6 = cycle_graph(6);
  CHECK(canonical_certificate(c6) == canonical_certificate(shuffled(c6, rng)));
  CHECK(canonical_certificate(c6) != canonical_certificate(path_graph(6)));
  Multigraph one(2), two(2);
  one.add_edge(0, 1);
  two.add_edge(0, 1);
  two.add_edge(0, 1);
  CHECK(canonical_certificate(one) != canonical_certificate(two));
  Multigraph loop_a(2), loop_b(2);
  loop_a.add_edge(0, 0);
  loop_a.add_edge(0, 1);
  loop_b.add_edge(0, 1);
  loop_b.add_edge(1, 1);
  CHECK(canonical_certificate(loop_a) == canonical_certificate(loop_b));

  for (int trial = 0; trial < 120; ++trial) {
    Multigraph g = random_multigraph(rng, 7, 11);
    CHECK(canonical_certificate(g) == canonical_certificate(shuffled(g, rng)));
  }
  // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
  Multigraph prism(6), k33(6);
  for (int i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(3 + i, 3 + (i + 1) % 3);
    prism.add_edge(i, i + 3);
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  }
  CHECK(canonical_certificate(prism) != canonical_certificate(k33));
  CHECK(canonical_certificate(k33) == canonical_certificate(shuffled(k33, rng)));
}
