#include "hexa/tiling.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "hexa/errors.hpp"
#include "hexa/union_find.hpp"

namespace hexa {

char to_char(Family f) { return "rabcfgh"[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'r': return Family::r;
      case 'a': return Family::a;
      case 'b': return Family::b;
      case 'c': return Family::c;
      case 'f': return Family::f;
      case 'g': return Family::g;
      case 'h': return Family::h;
    }
  }
  throw InputError("unknown family '" + std::string(text) + "' (expected one of r,a,b,c,f,g,h)");
}

std::string name(const TilingSpec& s) {
  std::string last = s.family == Family::r ? std::to_string(s.r) : std::string(1, to_char(s.family));
  return "H_{" + std::to_string(s.k) + "," + std::to_string(s.m) + "," + last + "}";
}

void check_parameters(const TilingSpec& s) {
  const int k = s.k, m = s.m, r = s.r;
  auto fail = [&](const std::string& clause) {
    throw ParameterError(name(s) + ": family " + std::string(1, to_char(s.family)) + " requires " + clause);
  };
  switch (s.family) {
    case Family::r:
      if (m >= 2) {
        if (k < 3) fail("k >= 3");
        if (r < 0 || r > k / 2) fail("0 <= r <= floor(k/2)");
      } else if (m == 1) {
        if (k <= 3) fail("k > 3 when m = 1");
        if (r < 2 || r > k / 2) fail("2 <= r <= floor(k/2) when m = 1");
      } else if (m == 0) {
        if (k <= 3) fail("k > 3 when m = 0");
        if (r < 3 || r > k) fail("3 <= r <= k when m = 0");
      } else {
        fail("m >= 0");
      }
      break;
    case Family::a:
      if (m < 2) fail("m >= 2");
      if (k < 3) fail("k >= 3");
      break;
    case Family::b:
      if (k % 2 != 0) fail("k even");
      if (m % 2 == 0) fail("m odd");
      if (m < 3) fail("m >= 3");
      if (k < 4) fail("k >= 4");
      break;
    case Family::c:
      if (m < 1) fail("m >= 1");
      if (k % 2 != 0) fail("k even");
      if (k < 6) fail("k >= 6");
      break;
    case Family::f:
      if (k % 2 == 0) fail("k odd");
      if (m < 0) fail("m >= 0");
      if (k < 7) fail("k >= 7");
      break;
    case Family::g:
      if (k < m + 1) fail("k >= m+1");
      if (m < 3) fail("m >= 3");
      break;
    case Family::h:
      if (k >= m - 1) fail("k < m-1");
      if (k < 2) fail("k >= 2");
      break;
  }
}

int expected_vertex_count(const TilingSpec& s) {
  switch (s.family) {
    case Family::f: return 2 * s.k * (s.m + 2);
    case Family::g: return 2 * (s.m + 1) * (s.k + 2);
    case Family::h: return 2 * (s.m + 1) * (s.k + 1);
    default: return 2 * s.k * (s.m + 1);
  }
}

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

}  // namespace

std::pair<LatticePoint, Motion> Quotient::reduce(LatticePoint p) const {
  Motion f;
  switch (kind) {
    case Kind::torus: {
      int n = floor_div(p.i, width);
      f = Motion{-n * width, -n * shift, 1, 1};
      break;
    }
    case Kind::horizontal_glide: {
      int n = floor_div(p.i, width);
      bool odd = n % 2 != 0;
      // glide^-n with glide (i,j) -> (i + width, mirror - j)
      f = Motion{-n * width, odd ? mirror : 0, 1, odd ? -1 : 1};
      break;
    }
    case Kind::vertical_glide: {
      int n = floor_div(p.j, height);
      bool odd = n % 2 != 0;
      // glide^-n with glide (i,j) -> (mirror - i, j + height)
      f = Motion{odd ? mirror : 0, -n * height, odd ? -1 : 1, 1};
      break;
    }
  }
  LatticePoint q = f(p);
  Motion wrap;
  if (kind == Kind::vertical_glide)
    wrap = Motion{floor_mod(q.i, width) - q.i, 0, 1, 1};
  else
    wrap = Motion{0, floor_mod(q.j, height) - q.j, 1, 1};
  f = compose(wrap, f);
  return {f(p), f};
}

Quotient quotient_for(const TilingSpec& s) {
  check_parameters(s);
  const int k = s.k, m = s.m;
  using K = Quotient::Kind;
  switch (s.family) {
    case Family::r:
      return {K::torus, m + 1, 2 * k, 2 * s.r + (m + 1) % 2, 0};
    case Family::a:
      return {K::horizontal_glide, m + 1, 2 * k, m + 1, (m + 1) % 2 + 2};
    case Family::b:
      return {K::horizontal_glide, m + 1, 2 * k, m + 1, (m + 1) % 2};
    case Family::c:
      return {K::vertical_glide, 2 * m + 2, k, k, (k + 1) % 2};
    case Family::f:
      return {K::vertical_glide, 2 * m + 4, k, k, (k + 1) % 2};
    case Family::g:
      return {K::vertical_glide, 2 * m + 2, k + 2, k + 2, (k + 3) % 2};
    case Family::h:
      return {K::horizontal_glide, k + 1, 2 * (m + 1), k + 1, (k + 1) % 2};
  }
  throw ParameterError("unknown family");
}

Slot slot_of(Label l) {
  switch (l) {
    case Label::N: return kNorth;
    case Label::S: return kSouth;
    default: return kSide;
  }
}

Label label_of(Slot s, LatticePoint rep) {
  switch (s) {
    case kNorth: return Label::N;
    case kSouth: return Label::S;
    default: return has_east(rep) ? Label::E : Label::W;
  }
}

namespace {

Label direction(LatticePoint from, LatticePoint to) {
  if (to.j == from.j + 1 && to.i == from.i) return Label::N;
  if (to.j == from.j - 1 && to.i == from.i) return Label::S;
  if (to.j == from.j && to.i == from.i + 1) return Label::E;
  if (to.j == from.j && to.i == from.i - 1) return Label::W;
  throw InputError("lattice points are not adjacent");
}

}  // namespace

VertexId Tiling::vertex_at(LatticePoint p) const { return quotient.index(quotient.reduce(p).first); }

EdgeId Tiling::edge_at(LatticePoint p, LatticePoint q) const {
  auto [rep, f] = quotient.reduce(p);
  Label l = direction(rep, f(q));
  if (hexa::is_horizontal(l) && (l == Label::E) != has_east(rep)) throw InputError("not a lattice edge");
  return slots[quotient.index(rep)][slot_of(l)];
}

bool Tiling::is_horizontal(EdgeId e) const {
  const Edge& ed = graph.edge(e);
  return slots[ed.u][kSide] == e;
}

Tiling build(const TilingSpec& s) { return build(s, quotient_for(s)); }

Tiling build(const TilingSpec& s, const Quotient& quotient) {
  Tiling t;
  t.spec = s;
  t.quotient = quotient;
  const Quotient& q = t.quotient;
  const int n = q.vertex_count();
  t.graph = Multigraph(n);
  t.coords.resize(n);
  t.slots.assign(n, {-1, -1, -1});
  t.hops.resize(n);
  for (int v = 0; v < n; ++v) t.coords[v] = q.point(v);

  std::vector<char> interior;
  for (int v = 0; v < n; ++v) {
    for (int sl = 0; sl < 3; ++sl) {
      LatticePoint p = t.coords[v];
      LatticePoint nb = step(p, label_of(static_cast<Slot>(sl), p));
      auto [rep, f] = q.reduce(nb);
      int u = q.index(rep);
      t.hops[v][sl] = f;
      Slot back = slot_of(direction(rep, f(p)));
      if (std::make_pair(v, sl) < std::make_pair(u, static_cast<int>(back))) {
        EdgeId id = t.graph.add_edge(v, u);
        t.slots[v][sl] = id;
        t.slots[u][back] = id;
        interior.push_back(f == Motion{});
      } else if (t.slots[v][sl] >= 0 && f == Motion{}) {
        interior[t.slots[v][sl]] = 1;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    for (int sl = 0; sl < 3; ++sl)
      if (t.slots[v][sl] < 0) throw ParameterError(name(s) + ": quotient does not close");

  for (const Edge& e : t.graph.edges()) {
    if (t.slots[e.u][kSide] == e.id) t.matching.push_back(e.id);
    if (!interior[e.id]) t.exterior.push_back(e.id);
  }

  // Cells: the bricks above and below every horizontal edge.
  std::set<Cycle> cells;
  for (EdgeId h : t.matching) {
    VertexId v = t.graph.edge(h).u;
    LatticePoint p = t.coords[v];
    LatticePoint left = has_east(p) ? p : LatticePoint{p.i - 1, p.j};
    for (int dir : {1, -1}) {
      LatticePoint c[6] = {left,
                           {left.i + 1, left.j},
                           {left.i + 1, left.j + dir},
                           {left.i + 1, left.j + 2 * dir},
                           {left.i, left.j + 2 * dir},
                           {left.i, left.j + dir}};
      Cycle cyc;
      for (int x = 0; x < 6; ++x) cyc.push_back(t.edge_at(c[x], c[(x + 1) % 6]));
      std::sort(cyc.begin(), cyc.end());
      cells.insert(cyc);
    }
  }
  t.hexagons.assign(cells.begin(), cells.end());

  // P': alternate around each vertical cycle.
  std::vector<char> seen(n, 0);
  bool all_even = true;
  for (int v = 0; v < n && all_even; ++v) {
    if (seen[v]) continue;
    std::vector<EdgeId> cyc;
    VertexId x = v;
    EdgeId in = t.slots[v][kSouth];
    do {
      seen[x] = 1;
      EdgeId out = t.slots[x][kNorth] == in ? t.slots[x][kSouth] : t.slots[x][kNorth];
      cyc.push_back(out);
      x = t.graph.other_end(out, x);
      in = out;
    } while (x != v);
    if (cyc.size() % 2 != 0) all_even = false;
    for (std::size_t i = 0; i < cyc.size(); i += 2) t.vertical_matching.push_back(cyc[i]);
  }
  if (!all_even) t.vertical_matching.clear();
  std::sort(t.vertical_matching.begin(), t.vertical_matching.end());

  t.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto& sl = t.slots[v];
    if (has_east(t.coords[v]))
      t.rotation[v] = {sl[kNorth], sl[kSide], sl[kSouth]};
    else
      t.rotation[v] = {sl[kNorth], sl[kSouth], sl[kSide]};
  }
  return t;
}

namespace {

// Exact cover of the 2-paths by 6-cycles (Knuth's Algorithm X on plain vectors).
class TwoPathCover {
 public:
  TwoPathCover(const Multigraph& g, const std::vector<Cycle>& cycles) : cycles_(cycles) {
    const int n = g.vertex_count();
    items_.assign(3 * n, {});
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      std::vector<int> covered;
      for (EdgeId e : cycles[c])
        for (EdgeId f : cycles[c]) {
          if (e >= f) continue;
          const Edge& a = g.edge(e);
          const Edge& b = g.edge(f);
          for (VertexId x : {a.u, a.v})
            if (x == b.u || x == b.v) covered.push_back(3 * x + pair_index(g, x, e, f));
        }
      options_.push_back(covered);
      for (int item : covered) items_[item].push_back(static_cast<int>(c));
    }
    used_.assign(3 * n, 0);
    blocked_.assign(cycles.size(), 0);
  }

  std::optional<std::vector<Cycle>> solve() {
    if (!search()) return std::nullopt;
    std::vector<Cycle> out;
    for (int c : chosen_) out.push_back(cycles_[c]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static int pair_index(const Multigraph& g, VertexId x, EdgeId e, EdgeId f) {
    auto inc = g.incident(x);
    int a = static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
    int b = static_cast<int>(std::find(inc.begin(), inc.end(), f) - inc.begin());
    if (a > b) std::swap(a, b);
    return a == 0 ? b - 1 : 2;  // (0,1)->0, (0,2)->1, (1,2)->2
  }

  bool search() {
    int best = -1;
    std::size_t best_count = 0;
    for (std::size_t item = 0; item < items_.size(); ++item) {
      if (used_[item]) continue;
      std::size_t live = 0;
      for (int c : items_[item]) live += blocked_[c] == 0;
      if (best < 0 || live < best_count) best = static_cast<int>(item), best_count = live;
      if (live == 0) return false;
    }
    if (best < 0) return true;
    for (int c : items_[best]) {
      if (blocked_[c]) continue;
      // choose c: mark its items, block every option sharing one
      for (int item : options_[c]) {
        used_[item] = 1;
        for (int d : items_[item]) ++blocked_[d];
      }
      chosen_.push_back(c);
      if (search()) return true;
      chosen_.pop_back();
      for (int item : options_[c]) {
        used_[item] = 0;
        for (int d : items_[item]) --blocked_[d];
      }
    }
    return false;
  }

  const std::vector<Cycle>& cycles_;
  std::vector<std::vector<int>> items_;
  std::vector<std::vector<int>> options_;
  std::vector<char> used_;
  std::vector<int> blocked_;
  std::vector<int> chosen_;
};

}  // namespace

ValidationReport validate(const Multigraph& g) {
  ValidationReport rep;
  if (g.vertex_count() == 0) {
    rep.reason = "empty graph";
    return rep;
  }
  if (!is_connected(g)) {
    rep.reason = "not connected";
    return rep;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) {
      rep.reason = "not cubic: vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
      return rep;
    }
  int gi = girth(g);
  if (gi != 6) {
    rep.reason = "girth is " + (gi == kInfiniteGirth ? std::string("infinite") : std::to_string(gi)) + ", not 6";
    return rep;
  }
  std::vector<Cycle> six = enumerate_cycles(g, 6);
  auto cover = TwoPathCover(g, six).solve();
  if (!cover) {
    rep.reason = "no collection of 6-cycles covers every 2-path exactly once";
    return rep;
  }
  rep.is_tiling = true;
  rep.hexagons = std::move(*cover);
  return rep;
}

int chromatic_number(const Multigraph& g) {
  const int n = g.vertex_count();
  for (const Edge& e : g.edges())
    if (e.is_loop()) throw PreconditionError("graph with a loop has no proper colouring");
  if (g.edge_count() == 0) return n == 0 ? 0 : 1;
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : g.edges()) adj[e.u].push_back(e.v), adj[e.v].push_back(e.u);

  // Breadth-first order keeps each vertex next to coloured neighbours.
  std::vector<VertexId> order;
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (VertexId w : adj[u])
        if (!seen[w]) seen[w] = 1, queue.push_back(w);
    }
  }
  std::vector<int> color(n, -1);
  std::function<bool(std::size_t, int)> extend = [&](std::size_t at, int colors) {
    if (at == order.size()) return true;
    VertexId v = order[at];
    for (int c = 0; c < colors; ++c) {
      bool ok = std::none_of(adj[v].begin(), adj[v].end(), [&](VertexId w) { return color[w] == c; });
      if (!ok) continue;
      color[v] = c;
      if (extend(at + 1, colors)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int c = 2; c <= 4; ++c) {
    std::fill(color.begin(), color.end(), -1);
    if (extend(0, c)) return c;
  }
  throw PreconditionError("no colouring with at most 4 colours; not a tiling");
}

Multigraph contract_matching(const Tiling& t) {
  const int n = t.vertex_count();
  std::vector<int> merged(n, -1);
  int next = 0;
  std::vector<EdgeId> sorted = t.matching;
  std::sort(sorted.begin(), sorted.end(), [&](EdgeId a, EdgeId b) {
    const Edge& x = t.graph.edge(a);
    const Edge& y = t.graph.edge(b);
    return std::min(x.u, x.v) < std::min(y.u, y.v);
  });
  for (EdgeId id : sorted) {
    const Edge& e = t.graph.edge(id);
    merged[e.u] = merged[e.v] = next++;
  }
  for (int& x : merged)
    if (x < 0) x = next++;
  Multigraph out(next);
  std::set<std::pair<int, int>> present;
  for (const Edge& e : t.graph.edges()) {
    int a = merged[e.u], b = merged[e.v];
    if (a == b) continue;
    if (!present.insert({std::min(a, b), std::max(a, b)}).second) continue;
    out.add_edge(a, b);
  }
  return out;
}

bool is_locally_grid(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return false;
  std::vector<std::set<VertexId>> nb(n);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (w == v) return false;
      nb[v].insert(w);
    }
    if (g.degree(v) != 4 || nb[v].size() != 4) return false;
  }
  auto meet = [&](VertexId a, VertexId b) {
    std::vector<VertexId> out;
    std::set_intersection(nb[a].begin(), nb[a].end(), nb[b].begin(), nb[b].end(), std::back_inserter(out));
    return out;
  };
  for (VertexId x = 0; x < n; ++x) {
    std::vector<VertexId> around(nb[x].begin(), nb[x].end());
    bool found = false;
    // The three cyclic orders of four neighbours, fixing the first.
    const int orders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (const auto& ord : orders) {
      VertexId xs[4];
      for (int i = 0; i < 4; ++i) xs[i] = around[ord[i]];
      std::set<VertexId> ys;
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) {
        auto next = meet(xs[i], xs[(i + 1) % 4]);
        auto across = meet(xs[i], xs[(i + 2) % 4]);
        if (next.size() != 2 || !std::count(next.begin(), next.end(), x)) ok = false;
        if (across != std::vector<VertexId>{x}) ok = false;
        if (ok) ys.insert(next[0] == x ? next[1] : next[0]);
      }
      if (ok && ys.size() == 4) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

}  // namespace

std::optional<EssentialProfile> reference_essential_profile(const TilingSpec& s) {
  const int k = s.k, m = s.m, r = s.r;
  const int h = (m + 1) / 2;
  switch (s.family) {
    case Family::r:
      if (k < m + 1) return EssentialProfile{2 * k, m + 1};
      if (k == m + 1) return EssentialProfile{2 * k, m + 1 + k * binom(m + 1, h - r)};
      if (r < h && h < k / 2) return EssentialProfile{2 * (m + 1), k * binom(m + 1, h - r)};
      if (h <= r && r <= k / 2) return EssentialProfile{2 * (m + 1 + r - h), k * binom(r + h, m)};
      return std::nullopt;
    case Family::a:
    case Family::b: {
      int l = std::min(2 * k, 2 * m + 2);
      long long many = 1LL << (m + 1);
      if (s.family == Family::b) {
        many = 2 * binom(m + 1, (m + 1) / 2);
        for (int j = 1; j <= (m - 1 + 3) / 4; ++j) many += 4 * binom(m + 1, (m + 1) / 2 - 2 * j);
      }
      if (k < m + 1) return EssentialProfile{l, m + 1};
      if (k > m + 1) return EssentialProfile{l, many};
      return EssentialProfile{l, m + 1 + many};
    }
    case Family::c: {
      int l = std::min(k + 1, 4 * m + 4);
      if (4 * m + 4 < k + 1) return EssentialProfile{l, (k / 2) * binom(2 * m + 2, m + 1)};
      if (4 * m + 4 > k + 1) return EssentialProfile{l, 2LL * k};
      return EssentialProfile{l, std::nullopt};
    }
    case Family::f: {
      int l = std::min(k, 4 * m + 8);
      if (4 * m + 8 < k) return EssentialProfile{l, ((k - 1) / 2) * binom(2 * m + 4, m + 2)};
      if (4 * m + 8 > k) return EssentialProfile{l, 2};
      return EssentialProfile{l, std::nullopt};
    }
    case Family::g:
      if (k > 2 * m + 1) return EssentialProfile{2 * (k - m) - 2 * ((m + 1) / 2) + 3, std::nullopt};
      if (k % 2 == 1) return EssentialProfile{k + 2, 2};
      return EssentialProfile{k + 3, 2LL * (k + 2)};
    case Family::h:
      return EssentialProfile{2 * k + 2, 1LL << (k + 1)};
  }
  return std::nullopt;
}

int reference_chromatic_number(Family f) {
  switch (f) {
    case Family::c:
    case Family::f:
    case Family::g: return 3;
    default: return 2;
  }
}

std::vector<TilingSpec> sweep() {
  using F = Family;
  return {
      {F::r, 3, 2, 0}, {F::r, 3, 2, 1}, {F::r, 3, 3, 0},
      {F::a, 3, 2, 0}, {F::a, 3, 3, 0}, {F::a, 3, 4, 0},
      {F::b, 4, 3, 0}, {F::b, 4, 5, 0}, {F::b, 4, 7, 0},
      {F::c, 6, 1, 0}, {F::c, 6, 2, 0}, {F::c, 6, 3, 0},
      {F::f, 7, 0, 0}, {F::f, 7, 1, 0}, {F::f, 7, 2, 0},
      {F::g, 4, 3, 0}, {F::g, 5, 3, 0}, {F::g, 5, 4, 0},
      {F::h, 2, 4, 0}, {F::h, 2, 5, 0}, {F::h, 2, 6, 0},
  };
}

}  // namespace hexa
