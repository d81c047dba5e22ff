#pragma once

#include <optional>
#include <utility>

#include "actlab/act.hpp"

namespace actlab {

/// The unique splitting of an act into indecomposable components.
///
/// Components are the connected components of the undirected graph with an
/// edge {x, x·s} for every carrier element x and monoid element s. This
/// graph closure equals the transitive chain relation a ~ b ("there are
/// pivots a_1..a_k and monoid elements with a = a_1 s_1, a_1 t_1 = a_2 s_2,
/// ..., a_k t_k = b"): each chain step stays inside the union of the pivot
/// orbits, which the edges cover, and conversely x and x·s always satisfy a
/// one-step chain. So both relations have the same classes.
struct Decomposition {
  FiniteAct owner;
  std::vector<int> component_of;  // ids normalized to first-use order
  int component_count = 0;

  std::vector<std::vector<Idx>> component_elems() const {
    return blocks_of(component_of);
  }
};

/// Union-find over the action edges.
Decomposition components(const FiniteAct& A);

bool is_indecomposable(const FiniteAct& A);

/// Some (s, s') with x·s = y·s', scanning s then s' from index 0, so the
/// lexicographically first witness; absent when none exists.
std::optional<std::pair<Idx, Idx>> one_step_joined(const FiniteAct& A, Idx x,
                                                   Idx y);

}  // namespace actlab
