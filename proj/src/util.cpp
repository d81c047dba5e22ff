#include "actlab/util.hpp"

#include <algorithm>

namespace actlab {

namespace {

bool partition_rec(int n, int pos, int max_used, std::vector<int>& blocks,
                   const std::function<bool(const std::vector<int>&)>& visit) {
  if (pos == n) return visit(blocks);
  for (int b = 0; b <= max_used + 1; ++b) {
    blocks[pos] = b;
    if (!partition_rec(n, pos + 1, std::max(max_used, b), blocks, visit))
      return false;
  }
  return true;
}

bool subset_rec(int n, int size, int start, std::vector<Idx>& cur,
                const std::function<bool(const std::vector<Idx>&)>& visit) {
  if (static_cast<int>(cur.size()) == size) return visit(cur);
  for (int x = start; x < n; ++x) {
    cur.push_back(x);
    if (!subset_rec(n, size, x + 1, cur, visit)) return false;
    cur.pop_back();
  }
  return true;
}

}  // namespace

void for_each_partition(int n,
                        const std::function<bool(const std::vector<int>&)>& visit) {
  if (n <= 0) return;
  std::vector<int> blocks(n, 0);
  partition_rec(n, 1, 0, blocks, visit);
}

void for_each_subset(int n,
                     const std::function<bool(const std::vector<Idx>&)>& visit) {
  std::vector<Idx> cur;
  for (int size = 1; size <= n; ++size) {
    cur.clear();
    if (!subset_rec(n, size, 0, cur, visit)) return;
  }
}

std::vector<std::vector<Idx>> blocks_of(const std::vector<int>& block_ids) {
  std::vector<int> norm = normalize_block_ids(block_ids);
  int count = norm.empty() ? 0 : *std::max_element(norm.begin(), norm.end()) + 1;
  std::vector<std::vector<Idx>> out(count);
  for (Idx x = 0; x < static_cast<Idx>(norm.size()); ++x)
    out[norm[x]].push_back(x);
  return out;
}

std::vector<int> normalize_block_ids(const std::vector<int>& block_ids) {
  std::vector<int> rename(block_ids.size(), -1);
  std::vector<int> out(block_ids.size());
  int next = 0;
  for (size_t i = 0; i < block_ids.size(); ++i) {
    int b = block_ids[i];
    if (rename[b] < 0) rename[b] = next++;
    out[i] = rename[b];
  }
  return out;
}

}  // namespace actlab
