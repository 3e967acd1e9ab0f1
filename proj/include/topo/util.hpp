#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

// Error raised by parsing and by operations whose preconditions fail.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

  bool same(int a, int b) { return find(a) == find(b); }

  // Numbers the classes 0..k-1 in order of their smallest member and
  // returns the per-element class index.
  std::vector<int> classes(int* count_out = nullptr) {
    std::vector<int> cls(parent_.size(), -1);
    int next = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      int r = find(i);
      if (cls[r] < 0) cls[r] = next++;
      cls[i] = cls[r];
    }
    if (count_out) *count_out = next;
    return cls;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace topo
