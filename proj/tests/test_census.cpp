#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hexa/census.hpp"
#include "hexa/errors.hpp"
#include "hexa/homotopy.hpp"
#include "hexa/orientation.hpp"
#include "hexa/tutte.hpp"

using namespace hexa;

namespace {

int naive_rank(const Tiling& t, const std::vector<EdgeId>& a) {
  std::vector<int> parent(t.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int r = 0;
  for (EdgeId e : a) {
    int u = find(t.graph.edge(e).u), v = find(t.graph.edge(e).v);
    if (u != v) parent[u] = v, ++r;
  }
  return r;
}

// Normal iff no cycle of the subgraph lifts to an open path.
bool naive_normal(const Tiling& t, const std::vector<EdgeId>& a) {
  Multigraph g(t.vertex_count());
  for (EdgeId e : a) g.add_edge_with_id(e, t.graph.edge(e).u, t.graph.edge(e).v);
  for (const Cycle& c : enumerate_cycles(g, static_cast<int>(a.size())))
    if (classify_cycle(t, c).essential) return false;
  return true;
}

std::vector<EdgeId> all_edges(const Tiling& t) {
  std::vector<EdgeId> ids;
  for (const Edge& e : t.graph.edges()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Every set of `size` edges that contains some cell.
std::set<std::vector<EdgeId>> with_a_cell(const Tiling& t, int size) {
  std::set<std::vector<EdgeId>> out;
  const auto ids = all_edges(t);
  for (const Cycle& h : t.hexagons) {
    std::set<EdgeId> cell(h.begin(), h.end());
    std::vector<EdgeId> rest;
    for (EdgeId e : ids)
      if (!cell.count(e)) rest.push_back(e);
    const int extra = size - static_cast<int>(h.size());
    std::vector<int> pick(extra);
    std::iota(pick.begin(), pick.end(), 0);
    const int n = static_cast<int>(rest.size());
    while (true) {
      std::vector<EdgeId> a(h.begin(), h.end());
      for (int i : pick) a.push_back(rest[i]);
      std::sort(a.begin(), a.end());
      out.insert(a);
      int i = extra - 1;
      while (i >= 0 && pick[i] == n - extra + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("census rows partition every size") {
  Tiling t = build({Family::r, 3, 2, 0});
  auto rows = census(t, 6);
  const int edges = t.graph.edge_count();
  for (int s = 0; s <= 6; ++s) {
    BigInt total = 0;
    for (const CensusRow& r : rows)
      if (r.size == s) total += r.count;
    CHECK(total == BigInt(subset_count(edges, s)));
  }
  CHECK(census_count(rows, 1, 1, 1, true) == 27);
  CHECK(census_count(rows, 1, 1) == 27);
  CHECK(census_count(rows, 5, 6, {}, true) == 9);
  CHECK(census_count(rows, 5, 6, {}, false) == 12);
  CHECK(census_count(rows, 5, 6) == 21);
}

TEST_CASE("census agrees with direct classification") {
  Tiling t = build({Family::a, 3, 2, 0});
  auto rows = census(t, 4);
  for (int s = 1; s <= 4; ++s) {
    std::map<std::pair<int, bool>, long long> expect;
    for_each_subset(t, s, [&](const SubsetVisit& v) {
      std::vector<EdgeId> a(v.edges.begin(), v.edges.end());
      CHECK(v.rank == naive_rank(t, a));
      ++expect[{v.rank, v.normal}];
    });
    for (auto [key, n] : expect) CHECK(census_count(rows, key.first, s, {}, key.second) == n);
  }
  CHECK(census(t, 4, {2, 200'000'000}) == rows);
}

TEST_CASE("normal counts agree across tilings of the same order") {
  Tiling h = build({Family::r, 3, 2, 0});
  Tiling g = build({Family::a, 3, 2, 0});
  auto a = census(h, 6), b = census(g, 6);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(census_count(a, n - 1, n, {}, true) == census_count(b, n - 1, n, {}, true));
    for (int c = 1; c <= n; ++c) CHECK(census_count(a, n - 1, n, c, true) == census_count(b, n - 1, n, c, true));
  }
  // The shortest essential cycles separate them at (5,6).
  CHECK(census_count(a, 5, 6, {}, false) == 12);
  CHECK(census_count(b, 5, 6, {}, false) == 11);
}

TEST_CASE("word formula matches the census") {
  for (const TilingSpec& s : {TilingSpec{Family::r, 3, 2, 0}, TilingSpec{Family::a, 3, 2, 0}}) {
    CAPTURE(name(s));
    Tiling t = build(s);
    const int l = essential_length(t);
    auto rows = census(t, l);
    CHECK(word_count_formula(t, 1, 1) == t.graph.edge_count());
    for (int size = 1; size <= l; ++size)
      for (int rank = 1; rank <= std::min(size, l - 1); ++rank)
        CHECK(word_count_formula(t, rank, size) == census_count(rows, rank, size, 1, true));
    for (int n = 1; n <= l; ++n) CHECK(word_count_formula(t, n) == census_count(rows, n - 1, n, 1, true));
    CHECK_THROWS_AS(word_count_formula(t, l + 1), PreconditionError);
    CHECK_THROWS_AS(word_count_formula(t, l, l), PreconditionError);
  }
}

TEST_CASE("motif counts") {
  Tiling h = build({Family::r, 3, 2, 0});
  Tiling g = build({Family::a, 3, 2, 0});
  const Word hexagon = parse_word("ENNWSS");
  CHECK(motif_count(h, hexagon, 6, 5) == 9);
  BigInt x = motif_count(h, hexagon, 7, 6), y = motif_count(g, hexagon, 7, 6);
  CHECK(x == y);
  CHECK(x == 9 * 21);  // a cell plus any other edge
  CHECK_THROWS_AS(motif_count(h, parse_word("NNE"), 7, 6), PreconditionError);
  CHECK_THROWS_AS(motif_count(h, hexagon, 12, 11), PreconditionError);
}

TEST_CASE("strata") {
  Tiling t = build({Family::r, 3, 2, 0});
  auto layers = column_layers(t);
  REQUIRE(layers.size() == 2);
  CHECK(stratum_of(layers, std::vector<EdgeId>{}) == 0);
  std::set<EdgeId> l0(layers[0].begin(), layers[0].end()), l1(layers[1].begin(), layers[1].end());
  int seen = 0;
  for (const Cycle& c : t.hexagons) {
    bool hits0 = std::any_of(c.begin(), c.end(), [&](EdgeId e) { return l0.count(e) > 0; });
    bool hits1 = std::any_of(c.begin(), c.end(), [&](EdgeId e) { return l1.count(e) > 0; });
    if (hits0 && !hits1) {
      CHECK(stratum_of(layers, c) == 1);
      ++seen;
    }
  }
  CHECK(seen > 0);
  Strata s = strata(t, 5, 6);
  std::size_t total = s.undefined.size();
  for (auto& [alpha, sets] : s.by_alpha) total += sets.size();
  CHECK(total == 9);
  CHECK_THROWS_AS(column_layers(build({Family::c, 6, 1, 0})), PreconditionError);
}

TEST_CASE("stratum bijections") {
  Tiling h420 = build({Family::r, 4, 2, 0});
  auto same = verify_bijection(h420, h420, 1, 5, 6);
  CHECK(same.ok);
  auto one = verify_bijection(h420, build({Family::r, 4, 2, 1}), 1, 5, 6);
  CHECK(one.ok);
  CHECK(one.violations.empty());
  for (const StratumCheck& c : one.strata) {
    CHECK(c.left == c.right);
    CHECK(c.forward_failures == 0);
    CHECK(c.backward_failures == 0);
  }
  auto broken = verify_bijection(h420, build({Family::r, 4, 2, 1}), 1, 5, 6, 1);
  CHECK_FALSE(broken.ok);
  CHECK_FALSE(broken.violations.empty());
  CHECK_THROWS_AS(verify_bijection(h420, build({Family::a, 3, 2, 0}), 2, 5, 6), InputError);
  CHECK_THROWS_AS(verify_bijection(build({Family::r, 4, 2, 1}), h420, 1, 5, 6), InputError);
}

TEST_CASE("groups of sets containing a cell") {
  for (const TilingSpec& s : {TilingSpec{Family::r, 3, 2, 0}, TilingSpec{Family::a, 3, 2, 0}}) {
    CAPTURE(name(s));
    Tiling t = build(s);
    const int k = 3;
    Case4Report r = case4_decomposition(t, k);
    std::uint64_t a = 0, b = 0, c = 0, other = 0;
    for (const auto& set : with_a_cell(t, 2 * k + 3)) {
      int rank = naive_rank(t, set);
      if (!naive_normal(t, set)) ++c;
      else if (rank == 2 * k + 2) ++a;
      else if (rank == 2 * k + 1) ++b;
      else ++other;
    }
    CHECK(r.a == a);
    CHECK(r.b == b);
    CHECK(r.c == c);
    CHECK(r.other == other);
    std::uint64_t s8 = 0;
    for (const auto& set : with_a_cell(t, 2 * k + 2))
      if (naive_rank(t, set) == 2 * k + 1 && naive_normal(t, set)) ++s8;
    CHECK(r.s == s8);
    CHECK(r.lhs == BigInt((a + b + c) * (2 * k - 3)));
    CHECK(r.rhs == BigInt(s8 * (t.graph.edge_count() - 2 * k - 2)));
    CHECK(r.identity_ok == (r.lhs == r.rhs));
  }
}

TEST_CASE("distinguish separates at the first coefficient") {
  Tiling h = build({Family::r, 3, 2, 0});
  Tiling g = build({Family::a, 3, 2, 0});
  Distinction d = distinguish(h.graph, g.graph, 1);
  CHECK(d.separated);
  CHECK(d.rank == 5);
  CHECK(d.size == 6);
  CHECK(d.first == 21);
  CHECK(d.second == 20);
  CHECK_FALSE(distinguish(h.graph, h.graph, 1, 2'000'000).separated);
}

TEST_CASE("budgets") {
  Tiling t = build({Family::r, 3, 2, 0});
  CHECK_THROWS_AS(census(t, 12, {1, 1000}), BudgetError);
  CHECK_THROWS_AS(for_each_subset(t, 9, [](const SubsetVisit&) {}, 1000), BudgetError);
  CHECK_THROWS_AS(case4_decomposition(t, 3, 1000), BudgetError);
}
