#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actlab/monoid.hpp"

namespace actlab {

/// A finite right act over a finite monoid: a carrier with an action table
/// act(x, s) satisfying unitarity and compatibility. Immutable.
class FiniteAct {
 public:
  static FiniteAct validate(MonoidPtr S, std::string name,
                            std::vector<std::string> labels,
                            const std::vector<std::vector<Idx>>& table);

  int size() const noexcept { return m_; }
  Idx act(Idx x, Idx s) const {
    return table_[static_cast<size_t>(x) * n_ + s];
  }
  const MonoidPtr& monoid() const noexcept { return monoid_; }
  const std::string& label(Idx x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Idx>& flat_table() const noexcept { return table_; }
  bool over_same_monoid(const FiniteAct& other) const {
    return monoid_->same_structure(*other.monoid_);
  }

 private:
  FiniteAct(MonoidPtr S, std::string name, std::vector<std::string> labels,
            std::vector<Idx> flat);

  MonoidPtr monoid_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Idx> table_;
  int m_ = 0;  // carrier size
  int n_ = 0;  // |S|
};

/// Nonempty action-closed subset of an act's carrier.
struct Subact {
  FiniteAct owner;
  std::vector<Idx> elems;  // sorted
};

/// Equivariant map between acts over the same monoid.
struct ActHom {
  FiniteAct source;
  FiniteAct target;
  std::vector<Idx> map;
};

/// Validates equivariance (and matching monoids); throws ValidationError.
ActHom make_hom(FiniteAct source, FiniteAct target, std::vector<Idx> map);
bool is_equivariant(const FiniteAct& source, const FiniteAct& target,
                    const std::vector<Idx>& map);

/// S acting on itself by multiplication.
FiniteAct regular_act(const MonoidPtr& S);

/// The one-element zero act.
FiniteAct zero_act(const MonoidPtr& S);

/// Carrier = blocks of rho, [x]·s = [x·s]. Right compatibility makes the
/// action well defined; generated by the block of the identity.
FiniteAct cyclic_act(const MonoidPtr& S, const RightCongruence& rho);

FiniteAct rees_factor_act(const MonoidPtr& S, const RightIdeal& I);

/// Elements fixed by every monoid element.
std::vector<Idx> zeros(const FiniteAct& A);

/// A itself when it has a zero; otherwise A with one fresh zero appended
/// (labelled with the reserved letter θ, uniquified on collision).
FiniteAct adjoin_zero(const FiniteAct& A);

struct Coproduct {
  FiniteAct act;
  std::vector<std::vector<Idx>> injections;  // per part: part index -> act index
};
Coproduct coproduct(const std::vector<FiniteAct>& parts);
FiniteAct coproduct_act(const std::vector<FiniteAct>& parts);

struct Product {
  FiniteAct act;
  std::vector<std::vector<Idx>> projections;  // per part: act index -> part index
};
Product product(const std::vector<FiniteAct>& parts, int size_guard = 4096);

/// All functions S -> letters with (f·s)(t) = f(st). Its zeros are exactly
/// the constant functions, one per letter.
FiniteAct cofree_act(const MonoidPtr& S, const std::vector<std::string>& letters,
                     int size_guard = 4096);
/// Convenience overload with letters "0", "1", ...
FiniteAct cofree_act(const MonoidPtr& S, int alphabet_size,
                     int size_guard = 4096);

/// Smallest closed superset of gens, i.e. the union of the orbits gens·S.
std::vector<Idx> generated_elems(const FiniteAct& A, const std::vector<Idx>& gens);
Subact generated_subact(const FiniteAct& A, const std::vector<Idx>& gens);

struct SubactLimits {
  int max_carrier = 62;
  long long max_count = 1 << 20;
};

/// All nonempty action-closed subsets, ordered by (size, lexicographic).
std::vector<std::vector<Idx>> subact_sets(const FiniteAct& A,
                                          const SubactLimits& limits = {});
std::vector<Subact> subacts(const FiniteAct& A, const SubactLimits& limits = {});

/// The subact on `elems` as a standalone act; element i of the result is
/// elems[i] of A.
FiniteAct subact_as_act(const FiniteAct& A, const std::vector<Idx>& elems,
                        const std::string& name = "");

/// All right acts with carrier size exactly m, one per isomorphism class
/// (lexicographically minimal action table over carrier permutations).
/// Generation assigns action-table cells with compatibility propagation.
std::vector<FiniteAct> enumerate_acts(const MonoidPtr& S, int m);
std::vector<FiniteAct> acts_up_to(const MonoidPtr& S, int max_size);

/// Minimal flat action table over carrier permutations. Guarded at 9
/// carrier elements.
std::vector<Idx> canonical_act_table(const FiniteAct& A);

}  // namespace actlab
