#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace shidoku {

/// Disjoint sets over 0..n-1 where every set's root is its smallest member,
/// so the result of a sequence of unions does not depend on their order.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  std::size_t size() const { return parent_.size(); }

  /// Component id per element; components are numbered in order of their
  /// smallest member.
  std::vector<std::size_t> component_ids() {
    std::vector<std::size_t> ids(parent_.size());
    std::vector<std::size_t> id_of_root(parent_.size(), static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      const std::size_t root = find(i);
      if (id_of_root[root] == static_cast<std::size_t>(-1)) id_of_root[root] = next++;
      ids[i] = id_of_root[root];
    }
    return ids;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace shidoku
