#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "doctest.h"
#include "hexa/census.hpp"
#include "hexa/errors.hpp"
#include "hexa/homotopy.hpp"
#include "hexa/orientation.hpp"

using namespace hexa;

namespace {

// A cycle is contractible iff it bounds a disc made of cells: solve for a
// face set with the cycle as boundary, then test Euler characteristic 1.
class FaceOracle {
 public:
  explicit FaceOracle(const Tiling& t) : t_(t), faces_of_(t.graph.max_edge_id() + 1) {
    for (std::size_t f = 0; f < t.hexagons.size(); ++f)
      for (EdgeId e : t.hexagons[f]) faces_of_[e].push_back(static_cast<int>(f));
  }

  bool essential(const Cycle& z) const {
    std::set<EdgeId> in(z.begin(), z.end());
    const int nf = static_cast<int>(t_.hexagons.size());
    std::vector<std::vector<std::pair<int, int>>> dual(nf);
    for (const Edge& e : t_.graph.edges()) {
      auto& fs = faces_of_[e.id];
      int differ = in.count(e.id) ? 1 : 0;
      dual[fs[0]].push_back({fs[1], differ});
      dual[fs[1]].push_back({fs[0], differ});
    }
    std::vector<int> side(nf, -1);
    side[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      for (auto [g, d] : dual[f]) {
        int want = side[f] ^ d;
        if (side[g] < 0) {
          side[g] = want;
          q.push_back(g);
        } else if (side[g] != want) {
          return true;  // not even a boundary mod 2
        }
      }
    }
    return !(disc(side, 0) || disc(side, 1));
  }

 private:
  bool disc(const std::vector<int>& side, int which) const {
    std::set<VertexId> v;
    std::set<EdgeId> e;
    int f = 0;
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i] != which) continue;
      ++f;
      for (EdgeId x : t_.hexagons[i]) {
        e.insert(x);
        v.insert(t_.graph.edge(x).u);
        v.insert(t_.graph.edge(x).v);
      }
    }
    return f > 0 && static_cast<int>(v.size()) - static_cast<int>(e.size()) + f == 1;
  }

  const Tiling& t_;
  std::vector<std::vector<int>> faces_of_;
};

Multigraph restricted(const Tiling& t, const std::vector<EdgeId>& a) {
  Multigraph g(t.vertex_count());
  for (EdgeId e : a) g.add_edge_with_id(e, t.graph.edge(e).u, t.graph.edge(e).v);
  return g;
}

}  // namespace

TEST_CASE("cells are contractible") {
  for (const TilingSpec& s : sweep()) {
    Tiling t = build(s);
    FaceOracle oracle(t);
    for (const Cycle& c : t.hexagons) {
      CycleClass k = classify_cycle(t, c);
      CHECK_FALSE(k.essential);
      CHECK(k.displacement == LatticePoint{0, 0});
      CHECK(k.holonomy == Motion{});
      CHECK_FALSE(oracle.essential(c));
    }
  }
}

TEST_CASE("essential cycle census against the face oracle") {
  for (const TilingSpec& s : sweep()) {
    CAPTURE(name(s));
    Tiling t = build(s);
    FaceOracle oracle(t);
    EssentialCensus census = shortest_essential(t, true);
    const int reach = t.vertex_count() <= 40 ? census.length + 2 : census.length;
    int shortest = 0;
    long long count = 0;
    for (const Cycle& c : enumerate_cycles(t.graph, reach)) {
      bool ess = oracle.essential(c);
      REQUIRE(classify_cycle(t, c).essential == ess);
      if (!ess) continue;
      int len = static_cast<int>(c.size());
      if (!shortest || len < shortest) shortest = len, count = 0;
      if (len == shortest) ++count;
    }
    CHECK(census.length == shortest);
    CHECK(census.count == count);
    CHECK(census.cycles.size() == static_cast<std::size_t>(count));
    std::set<EdgeId> exterior(t.exterior.begin(), t.exterior.end());
    for (const Cycle& c : census.cycles) {
      CHECK(oracle.essential(c));
      CHECK(std::any_of(c.begin(), c.end(), [&](EdgeId e) { return exterior.count(e) > 0; }));
    }
    CHECK(essential_length(t) == census.length);
  }
}

TEST_CASE("tabulated shortest essential cycles") {
  int mismatches = 0;
  for (const TilingSpec& s : sweep()) {
    CAPTURE(name(s));
    auto ref = reference_essential_profile(s);
    REQUIRE(ref.has_value());
    EssentialCensus c = shortest_essential(build(s));
    CHECK(c.length == ref->length);
    if (ref->count && *ref->count != c.count) ++mismatches;
  }
  // One table cell disagrees with direct enumeration (H_{3,2,1}: 9 against
  // 6); the face oracle above confirms the enumerated value.
  CHECK(mismatches == 1);
  CHECK(shortest_essential(build({Family::r, 3, 2, 1})).count == 9);
}

TEST_CASE("classify_cycle rejects non-cycles") {
  Tiling t = build({Family::r, 3, 2, 0});
  CHECK_THROWS_AS(classify_cycle(t, std::vector<EdgeId>{}), InputError);
  CHECK_THROWS_AS(classify_cycle(t, std::vector<EdgeId>{0, 0}), InputError);
  Cycle path(t.hexagons[0].begin(), t.hexagons[0].end() - 1);
  CHECK_THROWS_AS(classify_cycle(t, path), InputError);
  Cycle two = t.hexagons[0];
  for (const Cycle& c : t.hexagons) {
    bool disjoint = true;
    for (EdgeId e : c)
      for (EdgeId f : t.hexagons[0])
        if (t.graph.edge(e).u == t.graph.edge(f).u || t.graph.edge(e).u == t.graph.edge(f).v ||
            t.graph.edge(e).v == t.graph.edge(f).u || t.graph.edge(e).v == t.graph.edge(f).v)
          disjoint = false;
    if (disjoint) {
      two.insert(two.end(), c.begin(), c.end());
      break;
    }
  }
  REQUIRE(two.size() == 12);
  CHECK_THROWS_AS(classify_cycle(t, two), InputError);
}

TEST_CASE("is_normal against cycle enumeration") {
  std::mt19937 rng(5);
  for (const TilingSpec& s : {TilingSpec{Family::r, 3, 2, 0}, TilingSpec{Family::a, 3, 2, 0},
                              TilingSpec{Family::c, 6, 1, 0}, TilingSpec{Family::h, 2, 4, 0}}) {
    CAPTURE(name(s));
    Tiling t = build(s);
    FaceOracle oracle(t);
    std::vector<EdgeId> ids;
    for (const Edge& e : t.graph.edges()) ids.push_back(e.id);
    auto seeds = shortest_essential(t, true).cycles;
    int normal = 0, essential = 0;
    for (int trial = 0; trial < 300; ++trial) {
      std::shuffle(ids.begin(), ids.end(), rng);
      int size = std::uniform_int_distribution<int>(1, 14)(rng);
      std::set<EdgeId> pick(ids.begin(), ids.begin() + size);
      // Half the trials start from a shortest essential cycle and add noise.
      if (trial & 1) {
        const Cycle& z = seeds[rng() % seeds.size()];
        pick = {z.begin(), z.end()};
        pick.insert(ids.begin(), ids.begin() + size / 2);
        std::shuffle(ids.begin(), ids.end(), rng);
        pick.erase(ids.front());
      }
      std::vector<EdgeId> a(pick.begin(), pick.end());
      size = static_cast<int>(a.size());
      bool has_essential = false;
      for (const Cycle& c : enumerate_cycles(restricted(t, a), size)) has_essential |= oracle.essential(c);
      CHECK(is_normal(t, a) == !has_essential);
      (has_essential ? essential : normal)++;
    }
    CHECK(normal > 0);
    CHECK(essential > 0);
  }
}

TEST_CASE("forbidden edge-sets against exhaustive search") {
  Tiling t = build({Family::r, 3, 2, 0});
  const Word hexagon = parse_word("ENNWSS");
  for (int n = 6; n <= 9; ++n) {
    CAPTURE(n);
    bool exists = false;
    for_each_subset(t, n, [&](const SubsetVisit& v) { exists |= v.full_cells > 0 && !v.normal; });
    CHECK(forbidden_for(t, hexagon, n) == exists);
  }
  CHECK_THROWS_AS(forbidden_for(t, parse_word("NNE"), 7), PreconditionError);
}

TEST_CASE("edge relations match the tiling frames") {
  Tiling t = build({Family::a, 3, 2, 0});
  auto rel = edge_relations(t);
  for (const Edge& e : t.graph.edges()) {
    // Mapping the representative of v into u's frame lands on a lattice neighbour of u.
    LatticePoint p = rel[e.id].v_to_u(t.coords[e.v]);
    auto nb = lattice_neighbors(t.coords[e.u]);
    CHECK(std::find(nb.begin(), nb.end(), p) != nb.end());
  }
}
