#include "actlab/decompose.hpp"

#include "actlab/errors.hpp"

namespace actlab {

Decomposition components(const FiniteAct& A) {
  const int m = A.size();
  const int n = A.monoid()->size();
  UnionFind uf(m);
  for (Idx x = 0; x < m; ++x)
    for (Idx s = 0; s < n; ++s) uf.unite(x, A.act(x, s));
  std::vector<int> roots(m);
  for (Idx x = 0; x < m; ++x) roots[x] = uf.find(x);
  Decomposition d{A, normalize_block_ids(roots), 0};
  for (int c : d.component_of)
    d.component_count = std::max(d.component_count, c + 1);
  return d;
}

bool is_indecomposable(const FiniteAct& A) {
  return components(A).component_count == 1;
}

std::optional<std::pair<Idx, Idx>> one_step_joined(const FiniteAct& A, Idx x,
                                                   Idx y) {
  const int m = A.size();
  if (x < 0 || x >= m || y < 0 || y >= m)
    throw ValidationError("one_step_joined: element out of range");
  const int n = A.monoid()->size();
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t)
      if (A.act(x, s) == A.act(y, t)) return std::make_pair(s, t);
  return std::nullopt;
}

}  // namespace actlab
