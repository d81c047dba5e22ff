#pragma once

#include <memory>
#include <string>
#include <vector>

#include "actlab/util.hpp"

namespace actlab {

class FiniteMonoid;
using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

/// A finite monoid given by its full multiplication table. Element 0 is
/// always the identity; `validate` relabels when the caller declares the
/// identity elsewhere. Instances are immutable and safe to share.
class FiniteMonoid {
 public:
  /// Checks associativity, the identity laws and index ranges; throws
  /// ValidationError with a witness otherwise.
  static MonoidPtr validate(std::string name, std::vector<std::string> labels,
                            const std::vector<std::vector<Idx>>& table,
                            Idx identity = 0);

  int size() const noexcept { return n_; }
  Idx mul(Idx x, Idx y) const {
    return table_[static_cast<size_t>(x) * n_ + y];
  }
  const std::string& label(Idx x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Idx>& flat_table() const noexcept { return table_; }

  /// Same labels and same table (not isomorphism).
  bool same_structure(const FiniteMonoid& other) const;

 private:
  FiniteMonoid(std::string name, std::vector<std::string> labels,
               std::vector<Idx> flat);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Idx> table_;
  int n_ = 0;
};

/// Nonempty subset of S closed under right multiplication.
struct RightIdeal {
  MonoidPtr owner;
  std::vector<Idx> elems;  // sorted
};

/// Right-compatible equivalence relation on S, stored as the block id of
/// each element with ids normalized to first-use order.
struct RightCongruence {
  MonoidPtr owner;
  std::vector<int> block_of;
  int block_count() const;
};

RightIdeal principal_right_ideal(const MonoidPtr& S, Idx a);

/// Every nonempty right-closed subset, ordered by (size, lexicographic).
std::vector<RightIdeal> all_right_ideals(const MonoidPtr& S);

/// aS meets bS for all a, b. Principal pairs suffice: every right ideal
/// contains a principal one.
bool is_left_reversible(const FiniteMonoid& S);

std::vector<Idx> left_zeros(const FiniteMonoid& S);
std::vector<Idx> right_zeros(const FiniteMonoid& S);
std::vector<Idx> idempotents(const FiniteMonoid& S);

/// Every a has some x with a·x·a = a.
bool is_regular(const FiniteMonoid& S);

bool is_right_congruence(const FiniteMonoid& S, const std::vector<int>& block_of);

/// All right congruences, enumerated via set partitions plus the
/// compatibility filter. Guarded at |S| <= 10.
std::vector<RightCongruence> all_right_congruences(const MonoidPtr& S);

/// Collapses I to one block and leaves everything else discrete.
RightCongruence rees_congruence(const MonoidPtr& S, const RightIdeal& I);

/// Every right ideal is aS for some a.
bool is_principal_right_ideal_monoid(const FiniteMonoid& S);

/// All monoids of order n, exactly one per isomorphism class: a table is
/// emitted iff it is lexicographically minimal among relabelings that fix
/// the identity slot. Guarded at n <= 5.
std::vector<MonoidPtr> enumerate_monoids(int n);

/// Concatenation of enumerate_monoids(1..max_order).
std::vector<MonoidPtr> monoids_up_to(int max_order);

/// Minimal flat table over relabelings fixing element 0.
std::vector<Idx> canonical_monoid_table(const FiniteMonoid& S);

}  // namespace actlab
