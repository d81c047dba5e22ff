#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace actlab {

using Idx = int;

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

// All set partitions of {0..n-1} as restricted growth strings, in
// lexicographic order (the one-block partition first, the discrete one
// last). The visitor gets the block id of each element; return false to
// stop early.
void for_each_partition(int n,
                        const std::function<bool(const std::vector<int>&)>& visit);

// Nonempty subsets of {0..n-1} as sorted index vectors ordered by
// (size, lexicographic). Return false to stop early.
void for_each_subset(int n,
                     const std::function<bool(const std::vector<Idx>&)>& visit);

// Groups {0..n-1} into blocks listed in first-use order of block ids.
std::vector<std::vector<Idx>> blocks_of(const std::vector<int>& block_ids);

// Renames block ids so they appear in first-use order starting at 0.
std::vector<int> normalize_block_ids(const std::vector<int>& block_ids);

}  // namespace actlab
