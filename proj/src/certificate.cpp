#include <algorithm>
#include <map>

#include "hexa/graph.hpp"
#include "hexa/union_find.hpp"

namespace hexa {

namespace {

struct Adjacency {
  int n = 0;
  std::vector<int> loops;
  std::vector<std::vector<std::pair<int, int>>> nbr;  // (neighbour, multiplicity)
  std::vector<int> mult;                              // n*n

  int at(int u, int v) const { return mult[u * n + v]; }
};

Adjacency dense(const Multigraph& g) {
  Adjacency a;
  a.n = g.vertex_count();
  a.loops.assign(a.n, 0);
  a.mult.assign(a.n * a.n, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++a.loops[e.u];
    } else {
      ++a.mult[e.u * a.n + e.v];
      ++a.mult[e.v * a.n + e.u];
    }
  }
  a.nbr.resize(a.n);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v)
      if (a.at(u, v)) a.nbr[u].emplace_back(v, a.at(u, v));
  return a;
}

int cell_count(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

// Equitable refinement. New colours are ranks of (old colour, neighbour
// colour profile), so the result depends only on the isomorphism class.
std::vector<int> refine(const Adjacency& g, std::vector<int> color) {
  int cells = cell_count(color);
  while (true) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::map<int, int> profile;
      for (auto [w, m] : g.nbr[v]) profile[color[w]] += m;
      auto& s = sig[v];
      s.push_back(color[v]);
      for (auto [c, m] : profile) s.push_back(c), s.push_back(m);
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < g.n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    int now = static_cast<int>(sorted.size());
    if (now == cells) return color;
    cells = now;
  }
}

std::vector<int> individualize(const std::vector<int>& color, int v) {
  std::vector<int> key(color.size());
  for (std::size_t x = 0; x < color.size(); ++x)
    key[x] = 2 * color[x] + (static_cast<int>(x) == v ? 0 : 1);
  std::vector<int> sorted = key;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& k : key) k = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin());
  return key;
}

void put_varint(std::string& out, unsigned value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

std::string encode(const Adjacency& g, const std::vector<int>& position) {
  std::vector<int> vertex_at(g.n);
  for (int v = 0; v < g.n; ++v) vertex_at[position[v]] = v;
  std::string out;
  put_varint(out, static_cast<unsigned>(g.n));
  for (int i = 0; i < g.n; ++i) put_varint(out, static_cast<unsigned>(g.loops[vertex_at[i]]));
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) put_varint(out, static_cast<unsigned>(g.at(vertex_at[i], vertex_at[j])));
  return out;
}

bool are_twins(const Adjacency& g, int v, int w) {
  if (g.loops[v] != g.loops[w]) return false;
  for (int x = 0; x < g.n; ++x) {
    if (x == v || x == w) continue;
    if (g.at(v, x) != g.at(w, x)) return false;
  }
  return true;
}

class Search {
 public:
  explicit Search(const Adjacency& g) : g_(g) {}

  std::string run() {
    std::vector<int> color(g_.n);
    for (int v = 0; v < g_.n; ++v) color[v] = g_.loops[v] * (g_.n + 1) + degree(v);
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : color) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    visit(refine(g_, color));
    return best_;
  }

 private:
  int degree(int v) const {
    int d = 2 * g_.loops[v];
    for (auto [w, m] : g_.nbr[v]) d += m;
    return d;
  }

  void visit(const std::vector<int>& color) {
    const int cells = cell_count(color);
    if (cells == g_.n) {
      leaf(color);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> members;
    for (int v = 0; v < g_.n; ++v)
      if (color[v] == target) members.push_back(v);

    std::vector<int> explored;
    for (int v : members) {
      bool redundant = false;
      for (int u : explored)
        if (are_twins(g_, u, v) || same_orbit(u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      explored.push_back(v);
      prefix_.push_back(v);
      visit(refine(g_, individualize(color, v)));
      prefix_.pop_back();
    }
  }

  void leaf(const std::vector<int>& position) {
    std::string cert = encode(g_, position);
    if (best_position_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_position_ = position;
    } else if (cert == best_) {
      // position^-1 o best_position maps the graph onto itself.
      std::vector<int> vertex_at(g_.n);
      for (int v = 0; v < g_.n; ++v) vertex_at[best_position_[v]] = v;
      std::vector<int> gamma(g_.n);
      for (int v = 0; v < g_.n; ++v) gamma[v] = vertex_at[position[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit test under found automorphisms that fix the current prefix.
  bool same_orbit(int a, int b) const {
    RollbackUnionFind uf(g_.n);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < g_.n; ++v) uf.unite(v, gamma[v]);
    }
    return any && uf.find(a) == uf.find(b);
  }

  const Adjacency& g_;
  std::string best_;
  std::vector<int> best_position_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> prefix_;
};

}  // namespace

std::string canonical_certificate(const Multigraph& g) {
  Adjacency a = dense(g);
  return Search(a).run();
}

}  // namespace hexa
