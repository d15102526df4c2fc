#include "hexa/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hexa/errors.hpp"

namespace hexa {

std::array<LatticePoint, 3> lattice_neighbors(LatticePoint p) {
  LatticePoint side = has_east(p) ? LatticePoint{p.i + 1, p.j} : LatticePoint{p.i - 1, p.j};
  return {LatticePoint{p.i, p.j + 1}, side, LatticePoint{p.i, p.j - 1}};
}

char to_char(Label l) { return "NESW"[static_cast<int>(l)]; }

Label inverse(Label l) {
  switch (l) {
    case Label::N: return Label::S;
    case Label::S: return Label::N;
    case Label::E: return Label::W;
    case Label::W: return Label::E;
  }
  return l;
}

LatticePoint delta(Label l) {
  switch (l) {
    case Label::N: return {0, 1};
    case Label::E: return {1, 0};
    case Label::S: return {0, -1};
    case Label::W: return {-1, 0};
  }
  return {};
}

bool is_horizontal(Label l) { return l == Label::E || l == Label::W; }

LatticePoint step(LatticePoint p, Label l) {
  if (l == Label::E && !has_east(p))
    throw MalformedWord("no E edge at (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  if (l == Label::W && has_east(p))
    throw MalformedWord("no W edge at (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  LatticePoint d = delta(l);
  return {p.i + d.i, p.j + d.j};
}

LatticeEdge make_lattice_edge(LatticePoint p, LatticePoint q) {
  return p < q ? LatticeEdge{p, q} : LatticeEdge{q, p};
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Label l : w) s.push_back(to_char(l));
  return s;
}

bool satisfies_word_rules(const Word& w) {
  if (!w.empty() && w.front() == Label::W) return false;
  for (std::size_t t = 1; t < w.size(); ++t)
    if (is_horizontal(w[t]) && w[t] == w[t - 1]) return false;
  int vertical = 0;
  bool seen_horizontal = false;
  Label last = Label::E;
  for (Label l : w) {
    if (!is_horizontal(l)) {
      ++vertical;
      continue;
    }
    bool odd = vertical % 2 == 1;
    if (!seen_horizontal) {
      if (odd != (l == Label::W)) return false;
    } else if (odd != (l == last)) {
      return false;
    }
    seen_horizontal = true;
    last = l;
    vertical = 0;
  }
  return true;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    switch (text[t]) {
      case 'N': w.push_back(Label::N); break;
      case 'E': w.push_back(Label::E); break;
      case 'S': w.push_back(Label::S); break;
      case 'W': w.push_back(Label::W); break;
      default:
        throw MalformedWord("unexpected character '" + std::string(1, text[t]) + "' at position " +
                            std::to_string(t));
    }
  }
  if (!satisfies_word_rules(w)) throw MalformedWord("word '" + std::string(text) + "' violates the alphabet rules");
  return w;
}

std::vector<LatticePoint> Shape::vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(2 * edges.size());
  for (const auto& e : edges) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Union-find over the shape's vertex list.
int count_components(const std::vector<LatticePoint>& verts, const std::vector<LatticeEdge>& edges) {
  std::vector<int> parent(verts.size());
  for (std::size_t x = 0; x < parent.size(); ++x) parent[x] = static_cast<int>(x);
  auto index = [&](LatticePoint p) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = static_cast<int>(verts.size());
  for (const auto& e : edges) {
    int a = find(index(e.a)), b = find(index(e.b));
    if (a != b) parent[a] = b, --comps;
  }
  return comps;
}

}  // namespace

int Shape::rank() const {
  auto verts = vertices();
  return static_cast<int>(verts.size()) - count_components(verts, edges);
}

bool Shape::contains_origin() const {
  if (edges.empty()) return true;
  auto verts = vertices();
  return std::binary_search(verts.begin(), verts.end(), LatticePoint{0, 0});
}

Shape make_shape(std::vector<LatticeEdge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Shape{std::move(edges)};
}

bool is_connected(const Shape& s) { return count_components(s.vertices(), s.edges) <= 1; }

Shape decode(const Word& w) {
  std::vector<LatticeEdge> edges;
  LatticePoint p{0, 0};
  for (Label l : w) {
    LatticePoint q = step(p, l);
    edges.push_back(make_lattice_edge(p, q));
    p = q;
  }
  return make_shape(std::move(edges));
}

namespace {

Label label_of(LatticePoint from, LatticePoint to) {
  if (to.j > from.j) return Label::N;
  if (to.j < from.j) return Label::S;
  return to.i > from.i ? Label::E : Label::W;
}

}  // namespace

Word encode(const Shape& s) {
  if (s.edges.empty()) return {};
  if (!s.contains_origin()) throw InputError("shape does not contain (0,0)");
  if (!is_connected(s)) throw InputError("shape is not connected");

  // Neighbours inside the shape, in label order.
  std::map<LatticePoint, std::vector<std::pair<Label, LatticePoint>>> adj;
  for (const auto& e : s.edges) {
    adj[e.a].emplace_back(label_of(e.a, e.b), e.b);
    adj[e.b].emplace_back(label_of(e.b, e.a), e.a);
  }
  for (auto& [p, list] : adj) std::sort(list.begin(), list.end());

  std::set<LatticeEdge> unvisited(s.edges.begin(), s.edges.end());
  auto has_unvisited = [&](LatticePoint p) {
    for (auto [l, q] : adj[p])
      if (unvisited.count(make_lattice_edge(p, q))) return true;
    return false;
  };

  Word w;
  LatticePoint p{0, 0};
  while (!unvisited.empty()) {
    bool moved = false;
    for (auto [l, q] : adj[p]) {
      if (unvisited.erase(make_lattice_edge(p, q))) {
        w.push_back(l);
        p = q;
        moved = true;
        break;
      }
    }
    if (moved) continue;
    // Breadth-first in label order gives the lexicographically least shortest path.
    std::map<LatticePoint, std::pair<LatticePoint, Label>> parent;
    std::deque<LatticePoint> queue{p};
    parent[p] = {p, Label::N};
    LatticePoint target = p;
    while (!queue.empty()) {
      LatticePoint u = queue.front();
      queue.pop_front();
      if (u != p && has_unvisited(u)) {
        target = u;
        break;
      }
      for (auto [l, q] : adj[u])
        if (!parent.count(q)) {
          parent[q] = {u, l};
          queue.push_back(q);
        }
    }
    Word path;
    for (LatticePoint x = target; x != p; x = parent[x].first) path.push_back(parent[x].second);
    std::reverse(path.begin(), path.end());
    w.insert(w.end(), path.begin(), path.end());
    p = target;
  }
  return w;
}

bool Motion::preserves_lattice() const {
  if (std::abs(eps) != 1 || std::abs(sig) != 1) return false;
  bool even = ((a + b) & 1) == 0;
  return eps == 1 ? even : !even;
}

Motion compose(const Motion& f, const Motion& g) {
  return Motion{f.a + f.eps * g.a, f.b + f.sig * g.b, f.eps * g.eps, f.sig * g.sig};
}

Motion invert(const Motion& f) { return Motion{-f.eps * f.a, -f.sig * f.b, f.eps, f.sig}; }

Shape apply(const Motion& f, const Shape& s) {
  std::vector<LatticeEdge> edges;
  edges.reserve(s.edges.size());
  for (const auto& e : s.edges) edges.push_back(f(e));
  return make_shape(std::move(edges));
}

namespace {

// Motions sending vertex p to the origin.
std::array<Motion, 2> motions_to_origin(LatticePoint p) {
  int eps = has_east(p) ? 1 : -1;
  return {Motion{-eps * p.i, -p.j, eps, 1}, Motion{-eps * p.i, p.j, eps, -1}};
}

}  // namespace

Shape canonical_shape(const Shape& s) {
  if (s.edges.empty()) return s;
  Shape best;
  bool first = true;
  for (LatticePoint p : s.vertices())
    for (const Motion& f : motions_to_origin(p)) {
      Shape image = apply(f, s);
      if (first || image.edges < best.edges) {
        best = std::move(image);
        first = false;
      }
    }
  return best;
}

int sym(const Shape& s) {
  if (s.edges.empty()) return 4;
  if (!s.contains_origin()) throw InputError("shape does not contain (0,0)");
  // Every stabilising motion sends some vertex p to the origin; count
  // the motions that send s to its image under a fixed p -> origin map.
  int count = 0;
  for (LatticePoint p : s.vertices())
    for (const Motion& f : motions_to_origin(p))
      if (apply(f, s) == s) ++count;
  return count;
}

std::vector<Shape> connected_shapes(int size) {
  if (size < 0) throw InputError("negative shape size");
  std::set<std::vector<LatticeEdge>> level{{}};
  for (int n = 0; n < size; ++n) {
    std::set<std::vector<LatticeEdge>> next;
    for (const auto& edges : level) {
      Shape s{edges};
      std::vector<LatticePoint> verts = edges.empty() ? std::vector<LatticePoint>{{0, 0}} : s.vertices();
      for (LatticePoint p : verts)
        for (LatticePoint q : lattice_neighbors(p)) {
          LatticeEdge e = make_lattice_edge(p, q);
          if (std::binary_search(edges.begin(), edges.end(), e)) continue;
          std::vector<LatticeEdge> grown = edges;
          grown.push_back(e);
          next.insert(canonical_shape(make_shape(std::move(grown))).edges);
        }
    }
    level = std::move(next);
  }
  std::vector<Shape> out;
  out.reserve(level.size());
  for (const auto& edges : level) out.push_back(Shape{edges});
  return out;
}

LadderPaths ladder_paths(int i, int j, bool /*displaced*/) {
  if (i < 1 || j < 1) throw InputError("ladder dimensions must be positive");
  std::uint64_t c = 1;
  for (int t = 1; t <= j; ++t) c = c * static_cast<std::uint64_t>(i + t) / static_cast<std::uint64_t>(t);
  return {c, 2 * (i + j) - 1};
}

}  // namespace hexa
