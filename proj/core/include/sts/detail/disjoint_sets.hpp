#ifndef STS_DETAIL_DISJOINT_SETS_HPP
#define STS_DETAIL_DISJOINT_SETS_HPP

#include <numeric>
#include <vector>

namespace sts::detail {

// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns the size of the merged set.
  int unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return size_[x];
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return size_[x];
  }

  int set_size(int x) { return size_[find(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace sts::detail

#endif  // STS_DETAIL_DISJOINT_SETS_HPP
