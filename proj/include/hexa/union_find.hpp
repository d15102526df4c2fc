#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace hexa {

// Union by size without path compression, so every union can be undone.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n = 0) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Returns true if two classes were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return false;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    ++merges_;
    return true;
  }

  void undo() {
    int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    --merges_;
  }

  std::size_t checkpoint() const { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) undo();
  }
  int merges() const { return merges_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int merges_ = 0;
};

}  // namespace hexa
