#include "actlab/inject.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "actlab/errors.hpp"

namespace actlab {

const char* notion_name(Notion n) {
  switch (n) {
    case Notion::injective: return "injective";
    case Notion::weakly: return "weakly";
    case Notion::inc: return "inc";
    case Notion::ind: return "ind";
    case Notion::pind: return "pind";
    case Notion::c_upto: return "c";
    case Notion::cc: return "cc";
    case Notion::quasi: return "quasi";
    case Notion::pseudo_upto: return "pseudo";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::holds: return "true";
    case Outcome::fails: return "false";
    case Outcome::holds_within_bounds: return "true-within-bounds";
  }
  return "?";
}

bool ExtendOracle::extendable(const ExtensionProblem& p) const {
  return extend_hom(p).has_value();
}

const ExtendOracle& ExtendOracle::real() {
  static ExtendOracle oracle;
  return oracle;
}

bool InvertedExtendOracle::extendable(const ExtensionProblem& p) const {
  return !ExtendOracle::extendable(p);
}

namespace {

using ProblemVisitor = std::function<bool(ExtensionProblem&&)>;

// Streams, for every subact C of the ambient act B, every hom (or mono)
// C -> Q as an extension problem. Returns false when the visitor stopped.
bool problems_from_ambient(const FiniteAct& B, const FiniteAct& Q,
                           const std::vector<std::vector<Idx>>& subs,
                           bool monos_only, const ProblemVisitor& visit,
                           const InjectLimits& limits) {
  for (const std::vector<Idx>& C : subs) {
    FiniteAct Cact = subact_as_act(B, C);
    bool keep = true;
    for_each_hom(Cact, Q, monos_only,
                 [&](const std::vector<Idx>& f) {
                   keep = visit(make_extension_problem(B, C, Q, f));
                   return keep;
                 },
                 limits.search);
    if (!keep) return false;
  }
  return true;
}

std::vector<std::vector<Idx>> cyclic_subact_sets(const FiniteAct& B) {
  std::set<std::vector<Idx>> dedup;
  for (Idx x = 0; x < B.size(); ++x) dedup.insert(generated_elems(B, {x}));
  std::vector<std::vector<Idx>> out(dedup.begin(), dedup.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<Idx>& a, const std::vector<Idx>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

bool for_each_cyclic_problem(const FiniteAct& Q, bool cyclic_sub_only,
                             const ProblemVisitor& visit,
                             const InjectLimits& limits) {
  const MonoidPtr& S = Q.monoid();
  for (const RightCongruence& rho : all_right_congruences(S)) {
    FiniteAct B = cyclic_act(S, rho);
    auto subs = cyclic_sub_only ? cyclic_subact_sets(B)
                                : subact_sets(B, limits.subacts);
    if (!problems_from_ambient(B, Q, subs, false, visit, limits)) return false;
  }
  return true;
}

InjectivityVerdict run_criterion(
    Notion notion, const ExtendOracle& oracle,
    const std::function<bool(const ProblemVisitor&)>& generate) {
  InjectivityVerdict v{notion, Outcome::holds, std::nullopt, std::nullopt};
  generate([&](ExtensionProblem&& p) {
    if (!oracle.extendable(p)) {
      v.value = Outcome::fails;
      v.witness = std::move(p);
      return false;
    }
    return true;
  });
  return v;
}

// The inclusion of Q into Q-with-a-fresh-zero; splitting it back onto Q is
// possible exactly when Q already has a zero. When Q has one the ambient act
// is Q itself and the problem is trivially extendable.
ExtensionProblem zero_test_problem(const FiniteAct& Q) {
  FiniteAct amb = adjoin_zero(Q);
  std::vector<Idx> sub(Q.size());
  std::iota(sub.begin(), sub.end(), 0);
  std::vector<Idx> partial = sub;
  return make_extension_problem(std::move(amb), std::move(sub), Q,
                                std::move(partial));
}

}  // namespace

InjectivityVerdict is_injective(const FiniteAct& Q, const ExtendOracle& oracle,
                                const InjectLimits& limits) {
  return run_criterion(Notion::injective, oracle, [&](const ProblemVisitor& visit) {
    if (!visit(zero_test_problem(Q))) return false;
    return for_each_cyclic_problem(Q, false, visit, limits);
  });
}

InjectivityVerdict is_inc_injective(const FiniteAct& Q,
                                    const ExtendOracle& oracle,
                                    const InjectLimits& limits) {
  return run_criterion(Notion::inc, oracle, [&](const ProblemVisitor& visit) {
    return for_each_cyclic_problem(Q, false, visit, limits);
  });
}

InjectivityVerdict is_cc_injective(const FiniteAct& Q,
                                   const ExtendOracle& oracle,
                                   const InjectLimits& limits) {
  return run_criterion(Notion::cc, oracle, [&](const ProblemVisitor& visit) {
    return for_each_cyclic_problem(Q, true, visit, limits);
  });
}

InjectivityVerdict is_weakly_injective(const FiniteAct& Q,
                                       const ExtendOracle& oracle,
                                       const InjectLimits& limits) {
  return run_criterion(Notion::weakly, oracle, [&](const ProblemVisitor& visit) {
    FiniteAct B = regular_act(Q.monoid());
    std::vector<std::vector<Idx>> subs;
    for (const RightIdeal& I : all_right_ideals(Q.monoid()))
      subs.push_back(I.elems);
    return problems_from_ambient(B, Q, subs, false, visit, limits);
  });
}

InjectivityVerdict is_quasi_injective(const FiniteAct& Q,
                                      const ExtendOracle& oracle,
                                      const InjectLimits& limits) {
  // A map from a subact of Q into Q extends to Q iff it extends over each
  // component of Q separately (components missed by the subact take the
  // inclusion), so quantify per component.
  return run_criterion(Notion::quasi, oracle, [&](const ProblemVisitor& visit) {
    for (const std::vector<Idx>& K : components(Q).component_elems()) {
      FiniteAct Kact = subact_as_act(Q, K);
      if (!problems_from_ambient(Kact, Q, subact_sets(Kact, limits.subacts),
                                 false, visit, limits))
        return false;
    }
    return true;
  });
}

std::pair<FiniteAct, ActHom> injective_extension(const FiniteAct& A,
                                                 const InjectLimits& limits) {
  FiniteAct A0 = adjoin_zero(A);
  FiniteAct F = cofree_act(A.monoid(), A0.labels(), limits.cofree_guard);
  const int n = A.monoid()->size();
  const int k = A0.size();
  std::vector<Idx> emb(A.size());
  for (Idx a = 0; a < A.size(); ++a) {
    int enc = 0;
    for (Idx t = 0; t < n; ++t) enc = enc * k + A0.act(a, t);
    emb[a] = enc;
  }
  ActHom hom = make_hom(A, F, emb);
  if (static_cast<int>(image_elems(emb).size()) != A.size())
    throw ValidationError("injective_extension: embedding not injective");
  return {std::move(F), std::move(hom)};
}

std::vector<std::vector<int>> act_congruences(const FiniteAct& A,
                                              int carrier_guard) {
  if (A.size() > carrier_guard)
    throw SizeGuardError("act_congruences: carrier exceeds " +
                         std::to_string(carrier_guard));
  const int n = A.monoid()->size();
  std::vector<std::vector<int>> out;
  for_each_partition(A.size(), [&](const std::vector<int>& blocks) {
    for (Idx x = 0; x < A.size(); ++x)
      for (Idx y = x + 1; y < A.size(); ++y) {
        if (blocks[x] != blocks[y]) continue;
        for (Idx s = 0; s < n; ++s)
          if (blocks[A.act(x, s)] != blocks[A.act(y, s)]) return true;
      }
    out.push_back(normalize_block_ids(blocks));
    return true;
  });
  return out;
}

bool is_essential_extension(const FiniteAct& E, const std::vector<Idx>& copy,
                            int carrier_guard) {
  for (const std::vector<int>& theta : act_congruences(E, carrier_guard)) {
    bool diagonal_on_copy = true;
    for (size_t i = 0; i < copy.size() && diagonal_on_copy; ++i)
      for (size_t j = i + 1; j < copy.size() && diagonal_on_copy; ++j)
        diagonal_on_copy = theta[copy[i]] != theta[copy[j]];
    if (!diagonal_on_copy) continue;
    int blocks = *std::max_element(theta.begin(), theta.end()) + 1;
    if (blocks != E.size()) return false;
  }
  return true;
}

std::pair<FiniteAct, ActHom> injective_envelope(const FiniteAct& A,
                                                const InjectLimits& limits) {
  auto [F, emb] = injective_extension(A, limits);
  if (F.size() > 64)
    throw SizeGuardError("injective_envelope: extension carrier exceeds 64");

  std::vector<uint64_t> orbit_masks;
  for (Idx x = 0; x < F.size(); ++x) {
    uint64_t mask = 0;
    for (Idx y : generated_elems(F, {x})) mask |= uint64_t{1} << y;
    if (std::find(orbit_masks.begin(), orbit_masks.end(), mask) ==
        orbit_masks.end())
      orbit_masks.push_back(mask);
  }
  uint64_t start = 0;
  for (Idx a = 0; a < A.size(); ++a) start |= uint64_t{1} << emb.map[a];

  // Closed supersets of the embedded copy, smallest carrier first.
  auto size_of = [](uint64_t mask) { return __builtin_popcountll(mask); };
  using State = std::pair<int, uint64_t>;
  std::priority_queue<State, std::vector<State>, std::greater<State>> frontier;
  std::set<uint64_t> seen;
  frontier.emplace(size_of(start), start);
  seen.insert(start);
  while (!frontier.empty()) {
    auto [sz, mask] = frontier.top();
    frontier.pop();
    std::vector<Idx> elems;
    for (Idx x = 0; x < F.size(); ++x)
      if (mask >> x & 1) elems.push_back(x);
    FiniteAct E = subact_as_act(F, elems, A.name() + "_env");
    std::vector<Idx> copy(A.size());
    for (Idx a = 0; a < A.size(); ++a)
      copy[a] = static_cast<Idx>(
          std::lower_bound(elems.begin(), elems.end(), emb.map[a]) -
          elems.begin());
    if (is_injective(E, ExtendOracle::real(), limits).holds() &&
        is_essential_extension(E, copy, limits.congruence_carrier_max)) {
      ActHom into = make_hom(A, E, copy);
      return {std::move(E), std::move(into)};
    }
    for (uint64_t om : orbit_masks) {
      uint64_t next = mask | om;
      if (next == mask) continue;
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > limits.envelope_states_max)
          throw SizeGuardError("injective_envelope: state limit exceeded");
        frontier.emplace(size_of(next), next);
      }
    }
  }
  throw EnvelopeError("injective_envelope: no injective essential subact of '" +
                      F.name() + "' contains '" + A.name() + "'");
}

namespace {

InjectivityVerdict ind_criterion(Notion notion, const FiniteAct& Q,
                                 const ExtendOracle& oracle,
                                 const InjectLimits& limits) {
  auto [F, emb] = injective_extension(Q, limits);
  InjectivityVerdict v{notion, Outcome::holds, std::nullopt, std::nullopt};
  for (const std::vector<Idx>& D : subact_sets(Q, limits.subacts)) {
    if (!is_indecomposable(subact_as_act(Q, D))) continue;
    std::vector<std::pair<Idx, Idx>> pairs;  // (element of F, image in Q)
    for (Idx d : D) pairs.emplace_back(emb.map[d], d);
    std::sort(pairs.begin(), pairs.end());
    std::vector<Idx> sub, partial;
    for (auto& [fx, d] : pairs) {
      sub.push_back(fx);
      partial.push_back(d);
    }
    auto problem = make_extension_problem(F, sub, Q, partial);
    if (!oracle.extendable(problem)) {
      v.value = Outcome::fails;
      v.witness = std::move(problem);
      return v;
    }
  }
  return v;
}

enum class Flavor { ind, pind, c, pseudo };

InjectivityVerdict upto_falsifier(Notion notion, Flavor flavor,
                                  const FiniteAct& Q, int bound,
                                  const ExtendOracle& oracle,
                                  const InjectLimits& limits,
                                  const std::vector<FiniteAct>* pool) {
  std::vector<FiniteAct> local;
  if (!pool) {
    local = acts_up_to(Q.monoid(), bound);
    pool = &local;
  }
  const bool monos = flavor == Flavor::pind || flavor == Flavor::pseudo;
  InjectivityVerdict v{notion, Outcome::holds_within_bounds, std::nullopt,
                       bound};
  for (const FiniteAct& B : *pool) {
    if (B.size() > bound) continue;
    std::vector<std::vector<Idx>> subs;
    for (const std::vector<Idx>& C : subact_sets(B, limits.subacts)) {
      if (flavor == Flavor::ind || flavor == Flavor::pind) {
        if (!is_indecomposable(subact_as_act(B, C))) continue;
      } else if (flavor == Flavor::c) {
        bool cyclic = false;
        for (Idx x : C) {
          if (generated_elems(B, {x}) == C) {
            cyclic = true;
            break;
          }
        }
        if (!cyclic) continue;
      }
      subs.push_back(C);
    }
    bool keep = problems_from_ambient(
        B, Q, subs, monos,
        [&](ExtensionProblem&& p) {
          if (!oracle.extendable(p)) {
            v.value = Outcome::fails;
            v.witness = std::move(p);
            return false;
          }
          return true;
        },
        limits);
    if (!keep) break;
  }
  return v;
}

}  // namespace

InjectivityVerdict is_ind_injective(const FiniteAct& Q,
                                    const ExtendOracle& oracle,
                                    const InjectLimits& limits) {
  return ind_criterion(Notion::ind, Q, oracle, limits);
}

InjectivityVerdict is_pind_injective(const FiniteAct& Q,
                                     const ExtendOracle& oracle,
                                     const InjectLimits& limits) {
  return ind_criterion(Notion::pind, Q, oracle, limits);
}

InjectivityVerdict ind_injective_upto(const FiniteAct& Q, int bound,
                                      const ExtendOracle& oracle,
                                      const InjectLimits& limits,
                                      const std::vector<FiniteAct>* pool) {
  return upto_falsifier(Notion::ind, Flavor::ind, Q, bound, oracle, limits,
                        pool);
}

InjectivityVerdict pind_injective_upto(const FiniteAct& Q, int bound,
                                       const ExtendOracle& oracle,
                                       const InjectLimits& limits,
                                       const std::vector<FiniteAct>* pool) {
  return upto_falsifier(Notion::pind, Flavor::pind, Q, bound, oracle, limits,
                        pool);
}

InjectivityVerdict c_injective_upto(const FiniteAct& Q, int bound,
                                    const ExtendOracle& oracle,
                                    const InjectLimits& limits,
                                    const std::vector<FiniteAct>* pool) {
  return upto_falsifier(Notion::c_upto, Flavor::c, Q, bound, oracle, limits,
                        pool);
}

InjectivityVerdict pseudo_injective_upto(const FiniteAct& Q, int bound,
                                         const ExtendOracle& oracle,
                                         const InjectLimits& limits,
                                         const std::vector<FiniteAct>* pool) {
  return upto_falsifier(Notion::pseudo_upto, Flavor::pseudo, Q, bound, oracle,
                        limits, pool);
}

AbsoluteInjectivityResult absolutely_injective_upto(
    const MonoidPtr& S, int bound, const ExtendOracle& oracle,
    const InjectLimits& limits, const std::vector<FiniteAct>* pool) {
  std::vector<FiniteAct> local;
  if (!pool) {
    local = acts_up_to(S, bound);
    pool = &local;
  }
  AbsoluteInjectivityResult r;
  for (const FiniteAct& Q : *pool) {
    if (Q.size() > bound) continue;
    ++r.instances;
    InjectivityVerdict v = is_injective(Q, oracle, limits);
    if (!v.holds()) {
      r.holds = false;
      r.witness_act = Q;
      r.witness_problem = std::move(v.witness);
      return r;
    }
  }
  return r;
}

}  // namespace actlab
