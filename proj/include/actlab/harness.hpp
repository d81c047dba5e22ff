#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "actlab/inject.hpp"

namespace actlab {

/// Enumeration bounds for one verification run. Universal claims about
/// "all monoids" or "all acts" are only ever checked within these, and a
/// passing claim reports verified-within-bounds, never proved.
struct Bounds {
  int max_monoid = 3;  // monoid orders 1..max_monoid
  int max_act = 4;     // act carrier sizes 1..max_act
  int codomain = 4;    // ambient act carrier cap in bounded falsifiers
  int alphabet = 2;    // cofree alphabet sizes 2..alphabet
};

/// Self-test switches: inverting one of the three wrapped predicates must
/// make at least one claim report a counterexample, demonstrating the
/// harness cannot pass vacuously.
enum class Mutation {
  none,
  invert_left_reversible,
  invert_one_step_joined,
  invert_extendable,
};

class HarnessEnv {
 public:
  explicit HarnessEnv(Mutation m = Mutation::none) : mutation_(m) {}

  bool left_reversible(const FiniteMonoid& S) const {
    bool v = is_left_reversible(S);
    return mutation_ == Mutation::invert_left_reversible ? !v : v;
  }
  bool one_step_joined_ok(const FiniteAct& A, Idx x, Idx y) const {
    bool v = one_step_joined(A, x, y).has_value();
    return mutation_ == Mutation::invert_one_step_joined ? !v : v;
  }
  const ExtendOracle& oracle() const {
    if (mutation_ == Mutation::invert_extendable) return inverted_;
    return ExtendOracle::real();
  }
  Mutation mutation() const { return mutation_; }

 private:
  Mutation mutation_;
  InvertedExtendOracle inverted_;
};

enum class ClaimStatus { verified_within_bounds, counterexample, partial, skipped };
const char* claim_status_name(ClaimStatus s);

struct Report {
  std::string claim;
  Bounds bounds;
  ClaimStatus status = ClaimStatus::verified_within_bounds;
  nlohmann::json witness;  // null unless status == counterexample
  long long instances = 0;
  long long skipped = 0;
  long long elapsed_ms = 0;
  std::string note;
};

/// One checkable statement. The checker fills status, witness and counters;
/// id, bounds and elapsed time are stamped by verify().
struct Claim {
  std::string id;
  std::string statement;
  bool partial_by_design = false;
  std::function<void(const Bounds&, const HarnessEnv&, Report&)> checker;
};

const std::vector<Claim>& claim_registry();
const Claim& find_claim(const std::string& id);

Report verify(const std::string& id, const Bounds& bounds,
              const HarnessEnv& env = HarnessEnv());

/// Runs every claim, in parallel when jobs > 1. Per-claim iteration order
/// is fixed and results are merged in registry order, so output does not
/// depend on the worker count. A claim that trips a size guard gets status
/// `skipped` with the error in its note; nothing aborts the suite.
std::vector<Report> verify_all(const Bounds& bounds, int jobs = 1,
                               const HarnessEnv& env = HarnessEnv());

}  // namespace actlab
