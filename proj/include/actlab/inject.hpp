#pragma once

#include "actlab/hom.hpp"

namespace actlab {

enum class Notion {
  injective,
  weakly,
  inc,
  ind,
  pind,
  c_upto,
  cc,
  quasi,
  pseudo_upto,
};

enum class Outcome { holds, fails, holds_within_bounds };

const char* notion_name(Notion n);
const char* outcome_name(Outcome o);

/// Verdict of one injectivity decision. `witness` is the first extension
/// problem the decision failed on, present exactly when the value is
/// `fails`; `bound` is present exactly for bounded falsifiers, whose
/// positive answer is only `holds_within_bounds`.
struct InjectivityVerdict {
  Notion notion;
  Outcome value = Outcome::holds;
  std::optional<ExtensionProblem> witness;
  std::optional<int> bound;

  bool holds() const { return value != Outcome::fails; }
};

/// Yes/no decision for extension problems. Verdicts route every
/// extendability question through this so that harness self-tests can
/// invert it; the default runs the real search.
class ExtendOracle {
 public:
  virtual ~ExtendOracle() = default;
  virtual bool extendable(const ExtensionProblem& p) const;
  static const ExtendOracle& real();
};

/// Inverts every answer. Only for harness mutation self-tests.
class InvertedExtendOracle : public ExtendOracle {
 public:
  bool extendable(const ExtensionProblem& p) const override;
};

struct InjectLimits {
  int cofree_guard = 4096;           // carrier cap for injective extensions
  int product_guard = 4096;
  SubactLimits subacts{};
  SearchLimits search{};
  int congruence_carrier_max = 10;   // act congruence enumeration cap
  long long envelope_states_max = 200000;
};

/// Exact, by the finite criterion: Q is injective iff the inclusion of Q
/// into Q with a fresh zero adjoined splits back (this is the zero test)
/// and every hom from a subact of a cyclic act S/rho into Q extends.
InjectivityVerdict is_injective(const FiniteAct& Q,
                                const ExtendOracle& oracle = ExtendOracle::real(),
                                const InjectLimits& limits = {});

/// Every hom from a right ideal of S into Q extends to S.
InjectivityVerdict is_weakly_injective(const FiniteAct& Q,
                                       const ExtendOracle& oracle = ExtendOracle::real(),
                                       const InjectLimits& limits = {});

/// Injectivity relative to inclusions into cyclic acts (no zero test).
InjectivityVerdict is_inc_injective(const FiniteAct& Q,
                                    const ExtendOracle& oracle = ExtendOracle::real(),
                                    const InjectLimits& limits = {});

/// Both the subact and the ambient act cyclic.
InjectivityVerdict is_cc_injective(const FiniteAct& Q,
                                   const ExtendOracle& oracle = ExtendOracle::real(),
                                   const InjectLimits& limits = {});

/// Every hom from a subact of Q into Q extends to Q.
InjectivityVerdict is_quasi_injective(const FiniteAct& Q,
                                      const ExtendOracle& oracle = ExtendOracle::real(),
                                      const InjectLimits& limits = {});

/// The cofree act on the carrier of Q-with-a-zero, with the embedding
/// a -> (s -> a·s). Cofree acts are injective, so this is an injective
/// extension of Q.
std::pair<FiniteAct, ActHom> injective_extension(const FiniteAct& A,
                                                 const InjectLimits& limits = {});

/// Smallest injective essential subact of the cofree extension containing
/// the embedded copy of A, found by ascending carrier size. Essentiality is
/// decided via act congruences: the extension is essential iff every act
/// congruence on the candidate that is diagonal on the copy of A is
/// diagonal everywhere.
std::pair<FiniteAct, ActHom> injective_envelope(const FiniteAct& A,
                                                const InjectLimits& limits = {});

/// Criterion for injectivity relative to homs (monos) from indecomposable
/// domains: for every indecomposable subact D of Q some hom from the
/// injective extension back to Q fixes D pointwise. Sound for any injective
/// extension, so the cofree one is used; both notions share the criterion,
/// and the bounded falsifiers below guard against divergence.
InjectivityVerdict is_ind_injective(const FiniteAct& Q,
                                    const ExtendOracle& oracle = ExtendOracle::real(),
                                    const InjectLimits& limits = {});
InjectivityVerdict is_pind_injective(const FiniteAct& Q,
                                     const ExtendOracle& oracle = ExtendOracle::real(),
                                     const InjectLimits& limits = {});

/// Bounded falsifiers: quantify the extension diagram over every ambient
/// act B with |B| <= bound (up to isomorphism), the flavor's subacts C of
/// B, and the flavor's maps C -> Q. They return `fails` with a witness or
/// `holds_within_bounds`. A pre-enumerated pool for the given monoid may be
/// supplied to avoid re-enumeration.
InjectivityVerdict ind_injective_upto(const FiniteAct& Q, int bound,
                                      const ExtendOracle& oracle = ExtendOracle::real(),
                                      const InjectLimits& limits = {},
                                      const std::vector<FiniteAct>* pool = nullptr);
InjectivityVerdict pind_injective_upto(const FiniteAct& Q, int bound,
                                       const ExtendOracle& oracle = ExtendOracle::real(),
                                       const InjectLimits& limits = {},
                                       const std::vector<FiniteAct>* pool = nullptr);
InjectivityVerdict c_injective_upto(const FiniteAct& Q, int bound,
                                    const ExtendOracle& oracle = ExtendOracle::real(),
                                    const InjectLimits& limits = {},
                                    const std::vector<FiniteAct>* pool = nullptr);
InjectivityVerdict pseudo_injective_upto(const FiniteAct& Q, int bound,
                                         const ExtendOracle& oracle = ExtendOracle::real(),
                                         const InjectLimits& limits = {},
                                         const std::vector<FiniteAct>* pool = nullptr);

struct AbsoluteInjectivityResult {
  bool holds = true;
  std::optional<FiniteAct> witness_act;           // first non-injective act
  std::optional<ExtensionProblem> witness_problem;
  long long instances = 0;
};

/// Every act of size <= bound over S passes the exact injectivity test.
AbsoluteInjectivityResult absolutely_injective_upto(
    const MonoidPtr& S, int bound,
    const ExtendOracle& oracle = ExtendOracle::real(),
    const InjectLimits& limits = {},
    const std::vector<FiniteAct>* pool = nullptr);

/// Partitions of the carrier compatible with the action.
std::vector<std::vector<int>> act_congruences(const FiniteAct& A,
                                              int carrier_guard = 10);

/// True when every act congruence on E that separates the elements of
/// `copy` also separates everything.
bool is_essential_extension(const FiniteAct& E, const std::vector<Idx>& copy,
                            int carrier_guard = 10);

}  // namespace actlab
