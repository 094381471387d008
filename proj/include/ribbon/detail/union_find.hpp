#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ribbon::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) { reset(n); }

  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    sets_ = n;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) parent_[y] = x; else parent_[x] = y;
    --sets_;
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_ = 0;
};

}  // namespace ribbon::detail
