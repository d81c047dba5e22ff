#pragma once

#include <functional>
#include <optional>

#include "actlab/decompose.hpp"

namespace actlab {

/// A partial extension problem: the ambient act B, a closed subset C of it,
/// and an equivariant partial map from C into the target act.
struct ExtensionProblem {
  FiniteAct ambient;
  std::vector<Idx> sub;      // sorted, action-closed in ambient
  FiniteAct target;
  std::vector<Idx> partial;  // partial[i] = image of sub[i]
};

/// Validates closedness of `sub` and equivariance of `partial` on it.
ExtensionProblem make_extension_problem(FiniteAct ambient, std::vector<Idx> sub,
                                        FiniteAct target,
                                        std::vector<Idx> partial);

struct SearchLimits {
  long long max_nodes = 10'000'000;
};

/// Streams every equivariant map source -> target (injective ones only when
/// monos_only). Backtracking decides component generators first; deciding
/// f(x) forces f(x·s) for every s. Return false from the visitor to stop.
void for_each_hom(const FiniteAct& source, const FiniteAct& target,
                  bool monos_only,
                  const std::function<bool(const std::vector<Idx>&)>& visit,
                  const SearchLimits& limits = {});

std::vector<ActHom> homomorphisms(const FiniteAct& source,
                                  const FiniteAct& target,
                                  const SearchLimits& limits = {});
std::vector<ActHom> monomorphisms(const FiniteAct& source,
                                  const FiniteAct& target,
                                  const SearchLimits& limits = {});
long long count_homomorphisms(const FiniteAct& source, const FiniteAct& target,
                              const SearchLimits& limits = {});

/// First total map extending the problem's partial map, searching ambient
/// components independently (they never constrain each other); absent when
/// some component admits no completion.
std::optional<ActHom> extend_hom(const ExtensionProblem& p,
                                 const SearchLimits& limits = {});

/// A hom B -> (sub as act) restricting to the identity on sub, or absent.
std::optional<ActHom> is_retract(const FiniteAct& B,
                                 const std::vector<Idx>& sub_elems,
                                 const SearchLimits& limits = {});

/// Equivariant bijection exists; decided by canonical forms for small
/// carriers, by monomorphism search between equal-size acts otherwise.
bool are_isomorphic(const FiniteAct& A, const FiniteAct& B);

/// Sorted distinct image elements of a map.
std::vector<Idx> image_elems(const std::vector<Idx>& map);

}  // namespace actlab
