#include "hexa/tutte.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "hexa/errors.hpp"
#include "hexa/union_find.hpp"

namespace hexa {

std::uint64_t RankSizeTable::at(int rank, int size) const {
  if (rank < 0 || size < 0 || rank >= static_cast<int>(counts.size())) return 0;
  if (size > max_size) throw BudgetError("size " + std::to_string(size) + " was not enumerated");
  return counts[rank][size];
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t binomial(int m, int s) {
  if (s < 0 || s > m) return 0;
  s = std::min(s, m - s);
  long double c = 1;
  for (int i = 1; i <= s; ++i) {
    c = c * (m - s + i) / i;
    if (c > static_cast<long double>(kSaturated)) return kSaturated;
  }
  return static_cast<std::uint64_t>(c + 0.5L);
}

// Depth-first include/exclude over the edges with an undoable union-find.
class SubsetWalker {
 public:
  SubsetWalker(const Multigraph& g, int max_size)
      : g_(g), uf_(g.vertex_count()), max_size_(max_size),
        counts_(g.vertex_count() + 1, std::vector<std::uint64_t>(max_size + 1, 0)) {}

  void run_prefix(unsigned prefix, int bits) {
    int size = 0;
    for (int b = 0; b < bits; ++b)
      if (prefix >> b & 1) {
        const Edge& e = g_.edges()[b];
        uf_.unite(e.u, e.v);
        ++size;
      }
    if (size <= max_size_) walk(bits, size);
    uf_.rollback(0);
  }

  const std::vector<std::vector<std::uint64_t>>& counts() const { return counts_; }

 private:
  void walk(int index, int size) {
    const int m = g_.edge_count();
    if (index == m || size == max_size_) {
      ++counts_[uf_.merges()][size];
      return;
    }
    walk(index + 1, size);
    const Edge& e = g_.edges()[index];
    std::size_t mark = uf_.checkpoint();
    uf_.unite(e.u, e.v);
    walk(index + 1, size + 1);
    uf_.rollback(mark);
  }

  const Multigraph& g_;
  RollbackUnionFind uf_;
  int max_size_;
  std::vector<std::vector<std::uint64_t>> counts_;
};

}  // namespace

std::uint64_t subset_count(int m, int size) { return binomial(m, size); }

std::uint64_t subset_count_up_to(int m, int max_size) {
  std::uint64_t sum = 0;
  for (int s = 0; s <= std::min(m, max_size); ++s) sum = std::min(kSaturated, sum + binomial(m, s));
  return sum;
}

RankSizeTable rank_size(const Multigraph& g, std::optional<int> max_size, const EnumerationOptions& opt) {
  const int m = g.edge_count();
  if (!max_size && m > kSubsetEdgeCap)
    throw BudgetError("full rank-size table needs |E| <= " + std::to_string(kSubsetEdgeCap) + ", got " +
                      std::to_string(m));
  int top = std::min(max_size.value_or(m), m);
  if (top < 0) throw InputError("negative size bound");
  std::uint64_t visits = subset_count_up_to(m, top);
  if (visits > opt.budget)
    throw BudgetError("enumeration needs " + std::to_string(visits) + " subsets; budget is " +
                      std::to_string(opt.budget));

  int bits = 0;
  int workers = std::max(1, opt.workers);
  while ((1 << bits) < 4 * workers && bits < std::min(m, 12)) ++bits;
  if (workers == 1) bits = 0;

  RankSizeTable table;
  table.max_size = top;
  table.counts.assign(g.vertex_count() + 1, std::vector<std::uint64_t>(top + 1, 0));
  std::mutex merge;
  std::atomic<unsigned> next{0};
  auto work = [&] {
    SubsetWalker walker(g, top);
    for (unsigned p; (p = next++) < (1u << bits);) walker.run_prefix(p, bits);
    std::lock_guard lock(merge);
    for (std::size_t r = 0; r < table.counts.size(); ++r)
      for (int s = 0; s <= top; ++s) table.counts[r][s] += walker.counts()[r][s];
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return table;
}

std::uint64_t coefficient(const Multigraph& g, int rank, int size, const EnumerationOptions& opt) {
  if (rank > size || rank < 0 || size > g.edge_count()) return 0;
  return rank_size(g, size, opt).at(rank, size);
}

BivariatePolynomial rank_size_polynomial(const RankSizeTable& t) {
  BivariatePolynomial p;
  for (std::size_t r = 0; r < t.counts.size(); ++r)
    for (std::size_t s = 0; s < t.counts[r].size(); ++s) p.add_term(static_cast<int>(r), static_cast<int>(s), t.counts[r][s]);
  return p;
}

BivariatePolynomial rank_size_from_tutte(const BivariatePolynomial& tutte, int full_rank) {
  const auto xy = BivariatePolynomial::monomial(1, 1);
  const auto xy1 = xy + BivariatePolynomial::constant(1);
  const auto y1 = BivariatePolynomial::y() + BivariatePolynomial::constant(1);
  BivariatePolynomial out;
  for (const auto& [e, c] : tutte.terms()) {
    auto [i, j] = e;
    if (i > full_rank) throw InputError("x degree exceeds the rank of the graph");
    out += BivariatePolynomial::constant(c) * xy.pow(full_rank - i) * xy1.pow(i) * y1.pow(j);
  }
  return out;
}

BivariatePolynomial tutte_from_rank_size(const RankSizeTable& t, int full_rank) {
  const int sizes = t.max_size;
  std::vector<BivariatePolynomial> xs(full_rank + 1), ys(sizes + 1);
  const auto xm = BivariatePolynomial::x() - BivariatePolynomial::constant(1);
  const auto ym = BivariatePolynomial::y() - BivariatePolynomial::constant(1);
  xs[0] = ys[0] = BivariatePolynomial::constant(1);
  for (int i = 1; i <= full_rank; ++i) xs[i] = xs[i - 1] * xm;
  for (int j = 1; j <= sizes; ++j) ys[j] = ys[j - 1] * ym;
  BivariatePolynomial out;
  for (int r = 0; r <= full_rank && r < static_cast<int>(t.counts.size()); ++r)
    for (int s = r; s <= sizes; ++s) {
      std::uint64_t n = t.counts[r][s];
      if (n) out += BivariatePolynomial::constant(n) * xs[full_rank - r] * ys[s - r];
    }
  return out;
}

BivariatePolynomial tutte_subset(const Multigraph& g, const EnumerationOptions& opt) {
  if (g.edge_count() > kSubsetEdgeCap)
    throw BudgetError("subset expansion is capped at " + std::to_string(kSubsetEdgeCap) + " edges, got " +
                      std::to_string(g.edge_count()));
  EnumerationOptions full = opt;
  full.budget = std::numeric_limits<std::uint64_t>::max();
  RankSizeTable t = rank_size(g, std::nullopt, full);
  return tutte_from_rank_size(t, g.vertex_count() - component_count(g));
}

namespace {

// Bridges by iterative lowpoint search; parallel edges are never bridges.
std::vector<EdgeId> bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int clock = 0;
  struct Item {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId s = 0; s < n; ++s) {
    if (order[s] >= 0) continue;
    std::vector<Item> stack{{s, -1, 0}};
    order[s] = low[s] = clock++;
    while (!stack.empty()) {
      Item& top = stack.back();
      auto inc = g.incident(top.v);
      if (top.next < inc.size()) {
        EdgeId e = inc[top.next++];
        if (e == top.via) continue;
        VertexId w = g.other_end(e, top.v);
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[top.v] = std::min(low[top.v], order[w]);
        }
      } else {
        Item done = top;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > order[p]) out.push_back(done.via);
        }
      }
    }
  }
  return out;
}

// Graph on the vertices touched by edges only, and its components.
std::vector<Multigraph> edge_components(const Multigraph& g) {
  RollbackUnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<int> degree(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) ++degree[e.u], ++degree[e.v];
  std::unordered_map<int, std::vector<VertexId>> groups;
  std::vector<int> root_order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!degree[v]) continue;
    int r = uf.find(v);
    if (!groups.count(r)) root_order.push_back(r);
    groups[r].push_back(v);
  }
  std::vector<Multigraph> out;
  for (int r : root_order) {
    std::vector<int> id(g.vertex_count(), -1);
    int n = 0;
    for (VertexId v : groups[r]) id[v] = n++;
    Multigraph c(n);
    for (const Edge& e : g.edges())
      if (id[e.u] >= 0) c.add_edge_with_id(e.id, id[e.u], id[e.v]);
    out.push_back(std::move(c));
  }
  return out;
}

BivariatePolynomial geometric_y(int from, int count) {
  BivariatePolynomial p;
  for (int t = 0; t < count; ++t) p.add_term(0, from + t, 1);
  return p;
}

class Engine {
 public:
  explicit Engine(const TutteOptions& opt) : opt_(opt) {}

  BivariatePolynomial solve(const Multigraph& g, int depth) {
    ++calls_;
    if (g.edge_count() == 0) return BivariatePolynomial::constant(1);

    int loops = 0;
    for (const Edge& e : g.edges()) loops += e.is_loop();
    if (loops) {
      Multigraph rest = g;
      for (const Edge& e : g.edges())
        if (e.is_loop()) rest = rest.without_edge(e.id);
      return BivariatePolynomial::monomial(0, loops) * solve(rest, depth);
    }

    std::vector<Multigraph> parts = edge_components(g);
    if (parts.size() > 1) {
      BivariatePolynomial product = BivariatePolynomial::constant(1);
      for (const Multigraph& p : parts) product = product * solve(p, depth);
      return product;
    }
    const Multigraph& h = parts.front();

    std::vector<EdgeId> cut = bridges(h);
    if (!cut.empty()) {
      Multigraph rest = h;
      for (EdgeId e : cut) rest = rest.contracted(e);
      return BivariatePolynomial::monomial(static_cast<int>(cut.size()), 0) * solve(rest, depth);
    }

    std::string key;
    const bool cacheable = h.edge_count() <= opt_.cache_max_edges;
    if (cacheable) {
      key = canonical_certificate(h);
      std::shared_lock lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }

    EdgeId pivot = edge_on_shortest_cycle(h);
    const Edge pe = h.edge(pivot);
    std::vector<EdgeId> bundle;
    for (EdgeId e : h.incident(pe.u)) {
      const Edge& x = h.edge(e);
      if ((x.u == pe.u && x.v == pe.v) || (x.u == pe.v && x.v == pe.u)) bundle.push_back(e);
    }
    std::sort(bundle.begin(), bundle.end());
    bundle.erase(std::unique(bundle.begin(), bundle.end()), bundle.end());
    const int k = static_cast<int>(bundle.size());

    Multigraph deleted = h;
    for (EdgeId e : bundle) deleted = deleted.without_edge(e);
    Multigraph contracted = h.contracted(pivot);
    for (EdgeId e : bundle)
      if (e != pivot) contracted = contracted.without_edge(e);

    BivariatePolynomial result;
    if (!is_connected(deleted)) {
      BivariatePolynomial factor = BivariatePolynomial::x() + geometric_y(1, k - 1);
      result = factor * solve(contracted, depth + 1);
    } else {
      BivariatePolynomial factor = geometric_y(0, k);
      if ((1 << depth) < opt_.workers) {
        auto left = std::async(std::launch::async, [&] { return solve(deleted, depth + 1); });
        BivariatePolynomial right = factor * solve(contracted, depth + 1);
        result = left.get() + right;
      } else {
        result = solve(deleted, depth + 1) + factor * solve(contracted, depth + 1);
      }
    }

    if (cacheable) {
      std::unique_lock lock(mutex_);
      if (memo_.size() >= opt_.cache_max_entries)
        throw BudgetError("memo table full: " + std::to_string(memo_.size()) + " entries, " +
                          std::to_string(calls_.load()) + " calls, " + std::to_string(hits_.load()) + " hits");
      memo_.emplace(std::move(key), result);
    }
    return result;
  }

  TutteStats stats() const {
    std::shared_lock lock(mutex_);
    return {calls_.load(), hits_.load(), memo_.size()};
  }

 private:
  TutteOptions opt_;
  std::unordered_map<std::string, BivariatePolynomial> memo_;
  mutable std::shared_mutex mutex_;
  std::atomic<std::uint64_t> calls_{0};
  std::atomic<std::uint64_t> hits_{0};
};

}  // namespace

BivariatePolynomial tutte_dc(const Multigraph& g, const TutteOptions& opt, TutteStats* stats) {
  Engine engine(opt);
  BivariatePolynomial t = engine.solve(g, 0);
  if (stats) *stats = engine.stats();
  return t;
}

BigInt spanning_tree_count(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (!is_connected(g)) return 0;
  if (n == 1) return 1;
  const int d = n - 1;  // drop the last row and column
  std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u < d) a[e.u][e.u] += 1;
    if (e.v < d) a[e.v][e.v] += 1;
    if (e.u < d && e.v < d) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  // Bareiss elimination.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < d; ++k) {
    if (a[k][k] == 0) {
      int swap = k + 1;
      while (swap < d && a[swap][k] == 0) ++swap;
      if (swap == d) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[d - 1][d - 1];
  return sign < 0 ? BigInt(-det) : det;
}

}  // namespace hexa
