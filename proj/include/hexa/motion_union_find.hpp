#pragma once

#include <utility>
#include <vector>

#include "hexa/lattice.hpp"

namespace hexa {

// Rollback union-find whose nodes carry a motion into the frame of their
// root. Closing a cycle whose holonomy is not the identity is a conflict;
// for tilings that is exactly an essential cycle.
class MotionUnionFind {
 public:
  explicit MotionUnionFind(int n = 0) : parent_(n), size_(n, 1), rel_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  // Root of x and the motion from x's frame to the root's frame.
  std::pair<int, Motion> find(int x) const {
    Motion t;
    while (parent_[x] != x) {
      t = compose(rel_[x], t);
      x = parent_[x];
    }
    return {x, t};
  }

  // Joins x and y given the motion from y's frame to x's frame.
  // Returns false when the edge closes a cycle with non-trivial holonomy.
  bool unite(int x, int y, const Motion& y_to_x) {
    auto [rx, tx] = find(x);
    auto [ry, ty] = find(y);
    if (rx == ry) {
      bool ok = ty == compose(tx, y_to_x);
      history_.push_back({-1, !ok});
      if (!ok) ++conflicts_;
      return ok;
    }
    if (size_[rx] >= size_[ry]) {
      rel_[ry] = compose(compose(tx, y_to_x), invert(ty));
      parent_[ry] = rx;
      size_[rx] += size_[ry];
      history_.push_back({ry, false});
    } else {
      rel_[rx] = compose(compose(ty, invert(y_to_x)), invert(tx));
      parent_[rx] = ry;
      size_[ry] += size_[rx];
      history_.push_back({rx, false});
    }
    ++merges_;
    return true;
  }

  void undo() {
    auto [child, conflict] = history_.back();
    history_.pop_back();
    if (conflict) --conflicts_;
    if (child < 0) return;
    int root = parent_[child];
    size_[root] -= size_[child];
    parent_[child] = child;
    rel_[child] = Motion{};
    --merges_;
  }

  std::size_t checkpoint() const { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) undo();
  }
  int merges() const { return merges_; }
  int conflicts() const { return conflicts_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<Motion> rel_;
  std::vector<std::pair<int, bool>> history_;
  int merges_ = 0;
  int conflicts_ = 0;
};

}  // namespace hexa
