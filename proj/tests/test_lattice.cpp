#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hexa/errors.hpp"
#include "hexa/graph.hpp"
#include "hexa/lattice.hpp"

using namespace hexa;

namespace {

// Square lattice with horizontal edges deleted unless the left end has even i+j.
bool oracle_edge(LatticePoint p, LatticePoint q) {
  if (p.i == q.i) return std::abs(p.j - q.j) == 1;
  if (p.j != q.j || std::abs(p.i - q.i) != 1) return false;
  LatticePoint left = p.i < q.i ? p : q;
  return (((left.i + left.j) % 2) + 2) % 2 == 0;
}

std::set<LatticePoint> oracle_neighbors(LatticePoint p) {
  std::set<LatticePoint> out;
  for (LatticePoint q : {LatticePoint{p.i + 1, p.j}, LatticePoint{p.i - 1, p.j}, LatticePoint{p.i, p.j + 1},
                         LatticePoint{p.i, p.j - 1}})
    if (oracle_edge(p, q)) out.insert(q);
  return out;
}

bool legal_walk(const Word& w) {
  LatticePoint p{0, 0};
  for (Label l : w) {
    LatticePoint d = delta(l);
    LatticePoint q{p.i + d.i, p.j + d.j};
    if (!oracle_edge(p, q)) return false;
    p = q;
  }
  return true;
}

// All motions with bounded translation; enough for shapes near the origin.
int brute_sym(const Shape& s, int bound) {
  int count = 0;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int eps : {1, -1})
        for (int sig : {1, -1}) {
          Motion f{a, b, eps, sig};
          if (f.preserves_lattice() && apply(f, s) == s) ++count;
        }
  return count;
}

Shape shape_of(const char* word) { return decode(parse_word(word)); }

}  // namespace

TEST_CASE("lattice neighbours match the deletion rule") {
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) {
      LatticePoint p{i, j};
      auto nb = lattice_neighbors(p);
      std::set<LatticePoint> got(nb.begin(), nb.end());
      CHECK(got.size() == 3);
      CHECK(got == oracle_neighbors(p));
    }
  auto nb = lattice_neighbors({0, 0});
  std::set<LatticePoint> got(nb.begin(), nb.end());
  CHECK(got == std::set<LatticePoint>{{0, 1}, {1, 0}, {0, -1}});
}

TEST_CASE("every lattice vertex lies on three hexagons") {
  std::map<LatticePoint, int> id;
  Multigraph g;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) id[{i, j}] = g.add_vertex();
  for (auto [p, u] : id)
    for (LatticePoint q : lattice_neighbors(p))
      if (p < q && id.count(q)) g.add_edge(u, id[q]);
  int origin = id[{0, 0}];
  int through = 0;
  for (const Cycle& c : enumerate_cycles(g, 6)) {
    bool hits = false;
    for (EdgeId e : c) hits |= g.edge(e).u == origin || g.edge(e).v == origin;
    if (hits) {
      CHECK(c.size() == 6);
      ++through;
    }
  }
  CHECK(through == 3);
}

TEST_CASE("word rules agree with lattice walks") {
  for (int len = 0; len <= 8; ++len) {
    int total = 1;
    for (int t = 0; t < len; ++t) total *= 4;
    for (int code = 0; code < total; ++code) {
      Word w;
      for (int t = 0, c = code; t < len; ++t, c /= 4) w.push_back(static_cast<Label>(c % 4));
      CHECK(satisfies_word_rules(w) == legal_walk(w));
    }
  }
  CHECK_THROWS_AS(parse_word("W"), MalformedWord);
  CHECK_THROWS_AS(parse_word("EE"), MalformedWord);
  CHECK_THROWS_AS(parse_word("NE"), MalformedWord);
  CHECK_THROWS_AS(parse_word("NX"), MalformedWord);
  CHECK(to_string(parse_word("ENNWSS")) == "ENNWSS");
}

TEST_CASE("decode") {
  Shape n = shape_of("N");
  CHECK(n.size() == 1);
  CHECK(n.rank() == 1);
  CHECK(n.edges[0] == make_lattice_edge({0, 0}, {0, 1}));
  Shape empty = decode({});
  CHECK(empty.size() == 0);
  CHECK(empty.rank() == 0);
  CHECK(shape_of("ENENNWSNESESS") == shape_of("ENENESSNNWNWS"));
  Shape hex = shape_of("ENNWSS");
  CHECK(hex.size() == 6);
  CHECK(hex.rank() == 5);
  CHECK_THROWS_AS(decode(Word{Label::N, Label::E}), MalformedWord);
}

TEST_CASE("encode round trips exhaustively up to seven edges") {
  CHECK(to_string(encode(shape_of("N"))) == "N");
  std::size_t checked = 0;
  for (int n = 0; n <= 7; ++n) {
    for (const Shape& s : connected_shapes(n)) {
      // Every placement of the class with a vertex at the origin.
      std::vector<LatticePoint> verts = s.edges.empty() ? std::vector<LatticePoint>{{0, 0}} : s.vertices();
      for (LatticePoint p : verts) {
        int eps = has_east(p) ? 1 : -1;
        for (int sig : {1, -1}) {
          Shape t = apply(Motion{-eps * p.i, -sig * p.j, eps, sig}, s);
          Word w = encode(t);
          REQUIRE(satisfies_word_rules(w));
          REQUIRE(decode(w) == t);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("shape classes") {
  CHECK(connected_shapes(1).size() == 2);
  for (int n = 1; n <= 5; ++n)
    for (const Shape& s : connected_shapes(n)) {
      CHECK(s.size() == n);
      CHECK(is_connected(s));
      CHECK(canonical_shape(s) == s);
    }
}

TEST_CASE("sym against bounded brute force") {
  CHECK(sym(shape_of("E")) == 4);
  CHECK(sym(shape_of("N")) == 2);
  CHECK(sym(shape_of("ENNWSS")) == 4);
  CHECK(sym(shape_of("ENNN")) == 1);
  for (int n = 1; n <= 6; ++n)
    for (const Shape& s : connected_shapes(n)) {
      int v = sym(s);
      CHECK(v == brute_sym(s, 2 * n + 2));
      CHECK((v == 1 || v == 2 || v == 4));
    }
  // One-edge classes: sum of 4pq/sym equals the 3pq edges of a cubic graph on 2pq vertices.
  int pq = 6, sum = 0;
  for (const Shape& s : connected_shapes(1)) sum += 4 * pq / sym(s);
  CHECK(sum == 3 * pq);
}

TEST_CASE("motions") {
  Motion f{1, 2, -1, 1}, g{2, 0, 1, -1};
  CHECK(f.preserves_lattice());
  CHECK(g.preserves_lattice());
  CHECK(!Motion{1, 0, 1, 1}.preserves_lattice());
  LatticePoint p{3, -2};
  CHECK(compose(f, g)(p) == f(g(p)));
  CHECK(invert(f)(f(p)) == p);
  CHECK(compose(f, invert(f)) == Motion{});
}

TEST_CASE("ladder paths") {
  CHECK(ladder_paths(4, 2, true).count == 15);
  CHECK(ladder_paths(4, 2, true).length == 11);
  CHECK(ladder_paths(1, 1, false).count == 2);
  CHECK(ladder_paths(1, 1, false).length == 3);
  CHECK(ladder_paths(3, 5, false).count == ladder_paths(5, 3, false).count);
  CHECK_THROWS_AS(ladder_paths(0, 2, false), InputError);
}
