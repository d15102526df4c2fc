#include <random>
#include <set>

#include "doctest.h"
#include "hexa/errors.hpp"
#include "hexa/homotopy.hpp"
#include "hexa/orientation.hpp"

using namespace hexa;

namespace {

Label random_step(LatticePoint p, std::mt19937& rng) {
  Label side = has_east(p) ? Label::E : Label::W;
  Label choice[3] = {Label::N, Label::S, side};
  return choice[std::uniform_int_distribution<int>(0, 2)(rng)];
}

Word random_walk(int length, std::mt19937& rng) {
  Word w;
  LatticePoint p{0, 0};
  for (int i = 0; i < length; ++i) {
    Label l = random_step(p, rng);
    w.push_back(l);
    p = step(p, l);
  }
  return w;
}

// Lattice walk around the brick above or below the horizontal edge at p.
Word brick_loop(LatticePoint p, bool up) {
  Label v = up ? Label::N : Label::S, back = up ? Label::S : Label::N;
  Label h = has_east(p) ? Label::E : Label::W;
  return {h, v, v, inverse(h), back, back};
}

LabeledWalk walk_edges(const Tiling& t, const Orientation& o, const Word& w) {
  Frame f = start(t, o);
  LabeledWalk out{o.origin, {}};
  for (Label l : w) out.edges.push_back(advance(t, f, l));
  return out;
}

}  // namespace

TEST_CASE("orientations") {
  for (const TilingSpec& s : sweep()) {
    Tiling t = build(s);
    auto all = all_orientations(t);
    CHECK(all.size() == static_cast<std::size_t>(2 * t.vertex_count()));
    CHECK(std::set<Orientation>(all.begin(), all.end()).size() == all.size());
    for (const Orientation& o : all) {
      Frame f = start(t, o);
      CHECK(north_edge(t, f) == o.north);
      CHECK(f.at == LatticePoint{0, 0});
      CHECK(east_reads_east(f));
      const Edge& e = t.graph.edge(east_edge(t, o));
      CHECK((e.u == o.origin || e.v == o.origin));
      CHECK(partner(t, o) != o.origin);
      CHECK(t.is_horizontal(east_edge(t, o)));
    }
  }
  Tiling t = build({Family::r, 3, 2, 0});
  CHECK_THROWS_AS(start(t, {0, t.slots[0][kSide]}), InputError);
}

TEST_CASE("hexagon words trace cells") {
  const Word hexagon = parse_word("ENNWSS");
  for (const TilingSpec& s : sweep()) {
    CAPTURE(name(s));
    Tiling t = build(s);
    std::set<Cycle> cells(t.hexagons.begin(), t.hexagons.end());
    std::set<Cycle> traced;
    for (const Orientation& o : all_orientations(t)) {
      EdgeSetRecord rec = instance(t, hexagon, o);
      CHECK(rec.size == 6);
      CHECK(cells.count(rec.edges) == 1);
      traced.insert(rec.edges);
    }
    CHECK(traced == cells);
  }
}

TEST_CASE("transport is path independent on contractible pairs") {
  std::mt19937 rng(1234);
  std::vector<Tiling> tilings;
  for (const TilingSpec& s : sweep()) tilings.push_back(build(s));
  int failures = 0, trials = 0;
  for (; trials < 1200; ++trials) {
    const Tiling& t = tilings[trials % tilings.size()];
    auto all = all_orientations(t);
    const Orientation o = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    Word w1 = random_walk(std::uniform_int_distribution<int>(1, 12)(rng), rng);
    // Same endpoint in the lattice: splice a closed brick loop into the walk.
    std::size_t cut = std::uniform_int_distribution<std::size_t>(0, w1.size())(rng);
    LatticePoint at{0, 0};
    for (std::size_t i = 0; i < cut; ++i) at = step(at, w1[i]);
    Word loop = brick_loop(at, rng() & 1);
    Word w2(w1.begin(), w1.begin() + cut);
    w2.insert(w2.end(), loop.begin(), loop.end());
    w2.insert(w2.end(), w1.begin() + cut, w1.end());

    Transported a = transport(t, o, walk_edges(t, o, w1));
    Transported b = transport(t, o, walk_edges(t, o, w2));
    bool same = a.frame.vertex == b.frame.vertex && a.frame.at == b.frame.at &&
                north_edge(t, a.frame) == north_edge(t, b.frame) &&
                east_reads_east(a.frame) == east_reads_east(b.frame);
    same = same && a.labels == w1 && b.labels == w2;
    failures += !same;
  }
  CHECK(trials >= 1000);
  CHECK(failures == 0);
}

TEST_CASE("transport rejects foreign edges") {
  Tiling t = build({Family::r, 3, 2, 0});
  Orientation o{0, t.slots[0][kNorth]};
  EdgeId far = -1;
  for (const Edge& e : t.graph.edges())
    if (e.u != 0 && e.v != 0) far = e.id;
  CHECK_THROWS_AS(transport(t, o, {0, {far}}), InputError);
  CHECK_THROWS_AS(transport(t, o, {1, {}}), InputError);
}

TEST_CASE("canonical words recover their sets") {
  std::mt19937 rng(99);
  Tiling t = build({Family::r, 4, 3, 0});
  const int l = essential_length(t);
  auto all = all_orientations(t);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Word w = random_walk(std::uniform_int_distribution<int>(1, 14)(rng), rng);
    const Orientation o = all[rng() % all.size()];
    EdgeSetRecord rec = instance(t, w, o);
    if (rec.size > l + 3 || rec.size != decode(w).size() || !is_normal(t, rec.edges)) continue;
    CanonicalWord c = canonical_word(t, rec.edges);
    Shape shape = decode(c.word);
    CHECK(shape.size() == rec.size);
    CHECK(shape.rank() == rec.rank);
    CHECK(satisfies_word_rules(c.word));
    CHECK(c.orientations.size() == static_cast<std::size_t>(sym(shape)));
    for (const Orientation& x : c.orientations) CHECK(instance(t, c.word, x).edges == rec.edges);
    // The word does not depend on the orientation used to reach the set.
    CHECK(canonical_shape(decode(w)) == canonical_shape(shape));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("instances of short words are normal with the shape's rank and size") {
  for (const TilingSpec& s : {TilingSpec{Family::r, 3, 2, 0}, TilingSpec{Family::a, 3, 2, 0},
                              TilingSpec{Family::b, 4, 3, 0}, TilingSpec{Family::c, 6, 1, 0}}) {
    CAPTURE(name(s));
    Tiling t = build(s);
    const int l = essential_length(t);
    for (int size = l - 1; size <= l; ++size)
      for (const Shape& shape : connected_shapes(size)) {
        if (shape.rank() != l - 1) continue;
        Word w = encode(shape);
        for (const Orientation& o : all_orientations(t)) {
          EdgeSetRecord rec = instance(t, w, o);
          CHECK(rec.size == shape.size());
          CHECK(rec.rank == shape.rank());
          CHECK(is_normal(t, rec.edges));
        }
      }
  }
}

TEST_CASE("orient and lift preconditions") {
  Tiling t = build({Family::r, 3, 2, 0});
  EssentialCensus c = shortest_essential(t, true);
  REQUIRE(!c.cycles.empty());
  const Cycle& z = c.cycles.front();
  VertexId v = t.graph.edge(z.front()).u;
  Orientation o{v, t.slots[v][kNorth]};
  CHECK_THROWS_AS(orient(t, o, z), PreconditionError);
  CHECK_THROWS_AS(canonical_word(t, z), PreconditionError);

  std::vector<EdgeId> everything;
  for (const Edge& e : t.graph.edges()) everything.push_back(e.id);
  CHECK_THROWS_AS(orient(t, o, everything), PreconditionError);

  EdgeSetRecord hex = instance(t, parse_word("ENNWSS"), o);
  auto pos = orient(t, o, hex.edges);
  CHECK(pos.size() == 6);
  CHECK(pos.at(v) == LatticePoint{0, 0});
  Orientation elsewhere{t.graph.edge(z.back()).v, 0};
  for (const Orientation& x : all_orientations(t))
    if (!pos.count(x.origin)) elsewhere = x;
  CHECK_THROWS_AS(orient(t, elsewhere, hex.edges), PreconditionError);
}
