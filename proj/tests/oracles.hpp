#pragma once

// Independent brute-force oracles used by the tests. These deliberately
// avoid the library's own algorithms: monoid enumeration goes through plain
// table filtering with pairwise isomorphism dedup, and the decomposition
// oracle walks the chain relation literally.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/monoid.hpp"

namespace actlab::oracles {

// All associative tables of order n with identity at index 0, no dedup.
inline std::vector<std::vector<Idx>> naive_labeled_monoid_tables(int n) {
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> t(static_cast<size_t>(n) * n, -1);
  for (int j = 0; j < n; ++j) t[j] = j;
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i) * n] = i;
  std::vector<int> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) cells.push_back(i * n + j);
  auto at = [&](Idx x, Idx y) { return t[static_cast<size_t>(x) * n + y]; };
  auto associative = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) return false;
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      if (associative()) out.push_back(t);
      return;
    }
    for (Idx v = 0; v < n; ++v) {
      t[cells[k]] = v;
      rec(k + 1);
    }
    t[cells[k]] = -1;
  };
  rec(0);
  return out;
}

inline bool tables_isomorphic(int n, const std::vector<Idx>& a,
                              const std::vector<Idx>& b) {
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[0] != 0) continue;  // identity stays at slot 0
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = perm[a[static_cast<size_t>(i) * n + j]] ==
             b[static_cast<size_t>(perm[i]) * n + perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Count of isomorphism classes by naive pairwise comparison.
inline int naive_monoid_class_count(int n) {
  std::vector<std::vector<Idx>> reps;
  for (const auto& t : naive_labeled_monoid_tables(n)) {
    bool fresh = true;
    for (const auto& r : reps)
      if (tables_isomorphic(n, t, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(t);
  }
  return static_cast<int>(reps.size());
}

// Literal chain-relation closure: x reaches y when some chain
// x = a1 s1, a1 t1 = a2 s2, ..., ak tk = y exists. Walk pivot elements
// breadth-first: start from every a1 whose orbit contains x, step to any
// pivot whose orbit meets the current one, and collect every orbit element
// of a reached pivot.
inline std::vector<int> chain_closure_components(const FiniteAct& A) {
  const int m = A.size();
  const int n = A.monoid()->size();
  std::vector<std::set<Idx>> orbit(m);
  for (Idx x = 0; x < m; ++x)
    for (Idx s = 0; s < n; ++s) orbit[x].insert(A.act(x, s));
  auto orbits_meet = [&](Idx x, Idx y) {
    for (Idx z : orbit[x])
      if (orbit[y].count(z)) return true;
    return false;
  };
  std::vector<int> comp(m, -1);
  int next = 0;
  for (Idx start = 0; start < m; ++start) {
    if (comp[start] >= 0) continue;
    // pivots covering `start`
    std::vector<char> pivot_reached(m, 0);
    std::vector<Idx> frontier;
    for (Idx p = 0; p < m; ++p)
      if (orbit[p].count(start)) {
        pivot_reached[p] = 1;
        frontier.push_back(p);
      }
    while (!frontier.empty()) {
      Idx p = frontier.back();
      frontier.pop_back();
      for (Idx q = 0; q < m; ++q)
        if (!pivot_reached[q] && orbits_meet(p, q)) {
          pivot_reached[q] = 1;
          frontier.push_back(q);
        }
    }
    for (Idx p = 0; p < m; ++p)
      if (pivot_reached[p])
        for (Idx y : orbit[p])
          if (comp[y] < 0) comp[y] = next;
    ++next;
  }
  return comp;
}

// Every equivariant map by scanning all |B|^|A| assignments.
inline long long brute_force_hom_count(const FiniteAct& A, const FiniteAct& B) {
  const int m = A.size();
  long long count = 0;
  std::vector<Idx> f(m, 0);
  for (;;) {
    if (is_equivariant(A, B, f)) ++count;
    int k = m - 1;
    while (k >= 0 && f[k] == B.size() - 1) f[k--] = 0;
    if (k < 0) break;
    ++f[k];
  }
  return count;
}

}  // namespace actlab::oracles
