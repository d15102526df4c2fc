#include "hexa/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "hexa/errors.hpp"
#include "hexa/homotopy.hpp"
#include "hexa/motion_union_find.hpp"
#include "hexa/orientation.hpp"
#include "hexa/tutte.hpp"

namespace hexa {

namespace {

// Include/exclude state over the tiling's edges, every step undoable.
class Walker {
 public:
  explicit Walker(const Tiling& t)
      : relations_(edge_relations(t)), uf_(t.vertex_count()), degree_(t.vertex_count(), 0),
        cells_of_(t.graph.max_edge_id() + 1), fill_(t.hexagons.size(), 0) {
    for (std::size_t c = 0; c < t.hexagons.size(); ++c)
      for (EdgeId e : t.hexagons[c]) cells_of_[e].push_back(static_cast<int>(c));
    for (const Edge& e : t.graph.edges()) order_.push_back(e.id);
    std::sort(order_.begin(), order_.end());
  }

  int edge_count() const { return static_cast<int>(order_.size()); }
  EdgeId edge(int index) const { return order_[index]; }

  void push(EdgeId e) {
    const EdgeRelation& r = relations_[e];
    marks_.push_back(uf_.checkpoint());
    uf_.unite(r.u, r.v, r.v_to_u);
    touched_ += degree_[r.u]++ == 0;
    if (r.v != r.u) touched_ += degree_[r.v]++ == 0;
    for (int c : cells_of_[e]) full_ += ++fill_[c] == 6;
    edges_.push_back(e);
  }

  void pop() {
    EdgeId e = edges_.back();
    edges_.pop_back();
    const EdgeRelation& r = relations_[e];
    uf_.rollback(marks_.back());
    marks_.pop_back();
    touched_ -= --degree_[r.u] == 0;
    if (r.v != r.u) touched_ -= --degree_[r.v] == 0;
    for (int c : cells_of_[e]) full_ -= fill_[c]-- == 6;
  }

  SubsetVisit visit() const {
    return {edges_, uf_.merges(), touched_ - uf_.merges(), uf_.conflicts() == 0, full_};
  }
  int size() const { return static_cast<int>(edges_.size()); }
  int rank() const { return uf_.merges(); }
  int components() const { return touched_ - uf_.merges(); }
  bool normal() const { return uf_.conflicts() == 0; }

  // Visits every set whose size lies in [lo, hi] among supersets built from index `from` on.
  template <class Fn>
  void walk(int from, int lo, int hi, Fn& fn) {
    if (size() >= lo) fn(*this);
    if (size() == hi) return;
    const int last = edge_count() - std::max(1, lo - size());
    for (int i = from; i <= last; ++i) {
      push(order_[i]);
      walk(i + 1, lo, hi, fn);
      pop();
    }
  }

 private:
  std::vector<EdgeRelation> relations_;
  MotionUnionFind uf_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> cells_of_;
  std::vector<int> fill_;
  std::vector<EdgeId> order_;
  std::vector<EdgeId> edges_;
  std::vector<std::size_t> marks_;
  int touched_ = 0;
  int full_ = 0;
};

void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what) {
  if (needed > budget)
    throw BudgetError(what + " needs " + std::to_string(needed) + " subsets; budget is " + std::to_string(budget));
}

}  // namespace

std::vector<CensusRow> census(const Tiling& t, int max_size, const CensusOptions& opt) {
  const int m = t.graph.edge_count();
  const int n = t.vertex_count();
  if (max_size < 0) throw InputError("negative size bound");
  max_size = std::min(max_size, m);
  require_budget(subset_count_up_to(m, max_size), opt.budget, "census to size " + std::to_string(max_size));

  // counts[size][rank][components][normal]
  auto slot = [&](int s, int r, int c, bool ok) { return ((s * (n + 1) + r) * (n + 1) + c) * 2 + ok; };
  const std::size_t cells = static_cast<std::size_t>(max_size + 1) * (n + 1) * (n + 1) * 2;
  std::vector<std::uint64_t> total(cells, 0);
  total[slot(0, 0, 0, true)] = 1;

  std::mutex merge;
  std::atomic<int> next{0};
  auto work = [&] {
    std::vector<std::uint64_t> local(cells, 0);
    Walker w(t);
    auto record = [&](const Walker& x) { ++local[slot(x.size(), x.rank(), x.components(), x.normal())]; };
    for (int first; max_size > 0 && (first = next++) < m;) {
      w.push(w.edge(first));
      w.walk(first + 1, 1, max_size, record);
      w.pop();
    }
    std::lock_guard lock(merge);
    for (std::size_t i = 0; i < cells; ++i) total[i] += local[i];
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < opt.workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::vector<CensusRow> rows;
  for (int s = 0; s <= max_size; ++s)
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c)
        for (bool ok : {false, true})
          if (std::uint64_t x = total[slot(s, r, c, ok)]) rows.push_back({r, s, c, ok, x});
  return rows;
}

BigInt census_count(std::span<const CensusRow> rows, int rank, int size, std::optional<int> components,
                    std::optional<bool> normal) {
  BigInt sum = 0;
  for (const CensusRow& row : rows)
    if (row.rank == rank && row.size == size && (!components || row.components == *components) &&
        (!normal || row.normal == *normal))
      sum += row.count;
  return sum;
}

void for_each_subset(const Tiling& t, int size, const std::function<void(const SubsetVisit&)>& fn,
                     std::uint64_t budget) {
  const int m = t.graph.edge_count();
  if (size < 0 || size > m) return;
  require_budget(subset_count(m, size), budget, "enumeration of " + std::to_string(size) + "-edge sets");
  Walker w(t);
  auto call = [&](const Walker& x) { fn(x.visit()); };
  w.walk(0, size, size, call);
}

BigInt word_count_formula(const Tiling& t, int n) { return word_count_formula(t, n - 1, n); }

BigInt word_count_formula(const Tiling& t, int rank, int size) {
  if (size < 1) throw InputError("size must be positive");
  const int l = essential_length(t);
  if (size > l) throw PreconditionError("size " + std::to_string(size) + " exceeds l_H = " + std::to_string(l));
  // A tree of l edges can close up into an essential cycle.
  if (rank > l - 1)
    throw PreconditionError("rank " + std::to_string(rank) + " exceeds l_H - 1 = " + std::to_string(l - 1));
  const int four_pq = 2 * t.vertex_count();
  BigInt sum = 0;
  for (const Shape& s : connected_shapes(size)) {
    if (s.rank() != rank) continue;
    const int k = sym(s);
    if (four_pq % k) throw std::logic_error("4pq is not divisible by sym");
    sum += four_pq / k;
  }
  return sum;
}

BigInt motif_count(const Tiling& t, const Word& w, int n, int r, std::uint64_t budget) {
  const Shape b = decode(w);
  if (b.rank() == b.size()) throw PreconditionError("the word's shape has no cycle");
  const int limit = essential_length(t) + 3;
  if (n > limit)
    throw PreconditionError("n = " + std::to_string(n) + " exceeds l_H + 3 = " + std::to_string(limit));
  if (forbidden_for(t, w, n))
    throw PreconditionError("a forbidden edge-set of size " + std::to_string(n) + " exists for this word");

  std::set<std::vector<EdgeId>> copies;
  for (const Orientation& o : all_orientations(t)) {
    EdgeSetRecord rec = instance(t, w, o);
    if (rec.size == b.size() && is_normal(t, rec.edges)) copies.insert(rec.edges);
  }
  const int m = t.graph.edge_count();
  if (n < b.size()) return 0;
  require_budget(copies.size() * subset_count(m - b.size(), n - b.size()), budget, "motif count");

  std::set<std::vector<EdgeId>> found;
  std::vector<EdgeId> all;
  for (const Edge& e : t.graph.edges()) all.push_back(e.id);
  std::sort(all.begin(), all.end());
  for (const auto& copy : copies) {
    std::vector<EdgeId> rest;
    std::set_difference(all.begin(), all.end(), copy.begin(), copy.end(), std::back_inserter(rest));
    std::vector<EdgeId> extra;
    auto extend = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(copy.size() + extra.size()) == n) {
        std::vector<EdgeId> a = copy;
        a.insert(a.end(), extra.begin(), extra.end());
        std::sort(a.begin(), a.end());
        if (rank(t.graph, a) == r && is_normal(t, a)) found.insert(std::move(a));
        return;
      }
      for (std::size_t i = from; i < rest.size(); ++i) {
        extra.push_back(rest[i]);
        self(self, i + 1);
        extra.pop_back();
      }
    };
    extend(extend, 0);
  }
  return found.size();
}

namespace {

void require_columns(const Tiling& t) {
  Family f = t.spec.family;
  if (f != Family::r && f != Family::a && f != Family::b)
    throw PreconditionError("column layers are defined for families r, a and b only");
}

}  // namespace

std::vector<std::vector<EdgeId>> column_layers(const Tiling& t) {
  require_columns(t);
  std::vector<std::vector<EdgeId>> layers(t.spec.m);
  for (int alpha = 0; alpha < t.spec.m; ++alpha) {
    for (int x = 0; x < t.quotient.height; ++x)
      if (has_east({alpha, x})) layers[alpha].push_back(t.edge_at({alpha, x}, {alpha + 1, x}));
    std::sort(layers[alpha].begin(), layers[alpha].end());
  }
  return layers;
}

std::optional<int> stratum_of(const std::vector<std::vector<EdgeId>>& layers, std::span<const EdgeId> a) {
  for (std::size_t alpha = 0; alpha < layers.size(); ++alpha) {
    bool hit = std::any_of(a.begin(), a.end(), [&](EdgeId e) {
      return std::binary_search(layers[alpha].begin(), layers[alpha].end(), e);
    });
    if (!hit) return static_cast<int>(alpha);
  }
  return std::nullopt;
}

Strata strata(const Tiling& t, int rank, int size, std::uint64_t budget) {
  auto layers = column_layers(t);
  Strata out;
  for_each_subset(
      t, size,
      [&](const SubsetVisit& v) {
        if (v.rank != rank || !v.normal) return;
        std::vector<EdgeId> a(v.edges.begin(), v.edges.end());
        if (auto s = stratum_of(layers, a))
          out.by_alpha[*s].push_back(std::move(a));
        else
          out.undefined.push_back(std::move(a));
      },
      budget);
  return out;
}

namespace {

struct RowMap {
  int height = 0;
  int alpha = 0;
  std::function<int(int)> rows;

  LatticePoint operator()(LatticePoint p) const {
    if (p.i > alpha) return p;
    return {p.i, ((rows(p.j) % height) + height) % height};
  }
};

std::string point_text(LatticePoint p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

// Image of an edge set under a row map, or an explanation of the failure.
std::optional<std::vector<EdgeId>> map_set(const Tiling& from, const Tiling& to, std::span<const EdgeId> a,
                                           const RowMap& f, std::string& why) {
  std::vector<EdgeId> out;
  for (EdgeId e : a) {
    const Edge& ed = from.graph.edge(e);
    LatticePoint p = f(from.coords[ed.u]), q = f(from.coords[ed.v]);
    VertexId u = to.quotient.index(p), v = to.quotient.index(q);
    EdgeId image = -1;
    for (EdgeId x : to.graph.incident(u))
      if (to.graph.other_end(x, u) == v) image = x;
    if (image < 0) {
      why = "edge " + point_text(from.coords[ed.u]) + "-" + point_text(from.coords[ed.v]) + " maps to non-edge " +
            point_text(p) + "-" + point_text(q);
      return std::nullopt;
    }
    out.push_back(image);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    why = "two edges share an image";
    return std::nullopt;
  }
  return out;
}

std::string set_text(const Tiling& t, std::span<const EdgeId> a) {
  std::string s = "{";
  for (EdgeId e : a) {
    const Edge& ed = t.graph.edge(e);
    if (s.size() > 1) s += " ";
    s += point_text(t.coords[ed.u]) + "-" + point_text(t.coords[ed.v]);
  }
  return s + "}";
}

}  // namespace

BijectionReport verify_bijection(const Tiling& t1, const Tiling& t2, int case_number, int rank, int size,
                                 int psi_offset, std::uint64_t budget) {
  const Family rival[] = {Family::r, Family::a, Family::b};
  if (case_number < 1 || case_number > 3) throw InputError("bijection case must be 1, 2 or 3");
  if (t1.spec.family != Family::r || t1.spec.r != 0) throw InputError("first tiling must be H_{k,m,0}");
  if (t2.spec.family != rival[case_number - 1] || t2.spec.k != t1.spec.k || t2.spec.m != t1.spec.m)
    throw InputError(std::string("case ") + std::to_string(case_number) + " needs H_{k,m," +
                     (case_number == 1 ? "r" : case_number == 2 ? "a" : "b") + "} with the same k and m; got " +
                     name(t2.spec));

  const int k = t1.spec.k;
  const int shift = t2.spec.r;
  std::function<int(int)> forward, backward;
  switch (case_number) {
    case 1:
      forward = [=](int j) { return j - 2 * shift + psi_offset; };
      backward = [=](int j) { return j - psi_offset + 2 * shift; };
      break;
    case 2:
      forward = [=](int j) { return 2 * k - 1 - j + 3 + psi_offset; };
      backward = [=](int j) { return 2 * k - 1 - (j - psi_offset) + 3; };
      break;
    default:
      forward = [=](int j) { return 2 * k - j + psi_offset; };
      backward = [=](int j) { return 2 * k - (j - psi_offset); };
  }

  BijectionReport report;
  report.case_number = case_number;
  report.rank = rank;
  report.size = size;
  auto layers1 = column_layers(t1), layers2 = column_layers(t2);
  const int m = t1.spec.m;
  report.strata.resize(m);
  for (int alpha = 0; alpha < m; ++alpha) report.strata[alpha].alpha = alpha;

  auto note = [&](std::string text) {
    if (report.violations.size() < 20) report.violations.push_back(std::move(text));
  };

  // Checks one direction: image exists, lands in the same stratum with the
  // same rank, stays normal, and maps back to the original set.
  auto sweep = [&](const Tiling& from, const Tiling& to, const auto& from_layers, const auto& to_layers,
                   const std::function<int(int)>& go, const std::function<int(int)>& back, bool left) {
    for_each_subset(
        from, size,
        [&](const SubsetVisit& v) {
          if (v.rank != rank || !v.normal) return;
          auto alpha = stratum_of(from_layers, v.edges);
          if (!alpha) {
            ++report.unstratified;
            return;
          }
          StratumCheck& check = report.strata[*alpha];
          (left ? check.left : check.right)++;
          std::uint64_t& failures = left ? check.forward_failures : check.backward_failures;
          const std::string where = (left ? "forward " : "backward ") + set_text(from, v.edges) + ": ";
          std::string why;
          auto image = map_set(from, to, v.edges, {to.quotient.height, *alpha, go}, why);
          if (!image) {
            ++failures;
            note(where + why);
            return;
          }
          if (hexa::rank(to.graph, *image) != rank || !is_normal(to, *image)) {
            ++failures;
            note(where + "image changes rank or normality");
            return;
          }
          if (stratum_of(to_layers, *image) != alpha) {
            ++failures;
            note(where + "image leaves the stratum");
            return;
          }
          auto round = map_set(to, from, *image, {from.quotient.height, *alpha, back}, why);
          if (!round || !std::equal(round->begin(), round->end(), v.edges.begin(), v.edges.end())) {
            ++failures;
            note(where + "round trip does not return the set");
          }
        },
        budget);
  };
  sweep(t1, t2, layers1, layers2, forward, backward, true);
  sweep(t2, t1, layers2, layers1, backward, forward, false);

  report.ok = true;
  for (const StratumCheck& c : report.strata) {
    if (c.forward_failures || c.backward_failures) report.ok = false;
    if (c.left != c.right) {
      report.ok = false;
      note("stratum " + std::to_string(c.alpha) + " sizes differ: " + std::to_string(c.left) + " vs " +
           std::to_string(c.right));
    }
  }
  return report;
}

Case4Report case4_decomposition(const Tiling& t, int k, std::uint64_t budget) {
  if (k < 2) throw InputError("k must be at least 2");
  Case4Report out;
  out.k = k;
  for_each_subset(
      t, 2 * k + 3,
      [&](const SubsetVisit& v) {
        if (!v.full_cells) return;
        if (!v.normal)
          ++out.c;
        else if (v.rank == 2 * k + 2)
          ++out.a;
        else if (v.rank == 2 * k + 1)
          ++out.b;
        else
          ++out.other;
      },
      budget);
  for_each_subset(
      t, 2 * k + 2,
      [&](const SubsetVisit& v) { out.s += v.normal && v.rank == 2 * k + 1 && v.full_cells > 0; }, budget);
  out.lhs = BigInt(out.a + out.b + out.c) * (2 * k - 3);
  out.rhs = BigInt(out.s) * (t.graph.edge_count() - 2 * k - 2);
  out.identity_ok = out.lhs == out.rhs;
  return out;
}

Distinction distinguish(const Multigraph& g1, const Multigraph& g2, int workers, std::uint64_t budget) {
  const int top = std::min(g1.edge_count(), g2.edge_count());
  int max_size = 0;
  while (max_size < top && subset_count_up_to(g1.edge_count(), max_size + 1) <= budget &&
         subset_count_up_to(g2.edge_count(), max_size + 1) <= budget)
    ++max_size;
  EnumerationOptions opt;
  opt.workers = workers;
  opt.budget = budget;
  RankSizeTable a = rank_size(g1, max_size, opt), b = rank_size(g2, max_size, opt);
  Distinction out;
  out.max_size = max_size;
  const int ranks = static_cast<int>(std::max(a.counts.size(), b.counts.size()));
  for (int s = 0; s <= max_size; ++s)
    for (int r = 0; r < ranks; ++r) {
      std::uint64_t x = a.at(r, s), y = b.at(r, s);
      if (x != y) {
        out.separated = true;
        out.rank = r;
        out.size = s;
        out.first = x;
        out.second = y;
        return out;
      }
    }
  return out;
}

}  // namespace hexa
