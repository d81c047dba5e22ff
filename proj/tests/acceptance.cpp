// Acceptance suite: one bounded-exhaustive criterion per line, each with a
// wall-clock budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "actlab/fixtures.hpp"
#include "actlab/harness.hpp"
#include "actlab/io.hpp"
#include "oracles.hpp"

using namespace actlab;

namespace {

int failures = 0;

struct Criterion {
  const char* name;
  long long budget_ms;
  bool (*body)(std::string& detail);
};

bool within(long long elapsed, long long budget) { return elapsed <= budget; }

// 1. Monoid enumeration counts match an independent brute-force oracle.
bool criterion1(std::string& detail) {
  const int expected[] = {1, 2, 7};
  for (int n = 1; n <= 3; ++n) {
    int fast = static_cast<int>(enumerate_monoids(n).size());
    int naive = oracles::naive_monoid_class_count(n);
    if (fast != naive || fast != expected[n - 1]) {
      detail = "order " + std::to_string(n) + ": enumerated " +
               std::to_string(fast) + ", oracle " + std::to_string(naive);
      return false;
    }
  }
  detail = "counts 1, 2, 7 match the naive-dedup oracle";
  return true;
}

// 2. Union-find components equal literal chain-closure components on every
//    act of size <= 5 over every monoid of order <= 3.
bool criterion2(std::string& detail) {
  long long checked = 0;
  for (const MonoidPtr& S : monoids_up_to(3))
    for (const FiniteAct& A : acts_up_to(S, 5)) {
      ++checked;
      if (oracles::chain_closure_components(A) != components(A).component_of) {
        detail = "mismatch on " + A.name() + " over " + S->name();
        return false;
      }
    }
  detail = std::to_string(checked) + " acts, zero mismatches";
  return true;
}

// 3. P6, P7, P8 verified over all monoids of order <= 4, alphabet 2.
bool criterion3(std::string& detail) {
  Bounds b;
  b.max_monoid = 4;
  for (const char* id : {"P6", "P7", "P8"}) {
    Report r = verify(id, b);
    if (r.status != ClaimStatus::verified_within_bounds) {
      detail = std::string(id) + ": " + claim_status_name(r.status) + " " +
               r.witness.dump();
      return false;
    }
  }
  detail = "P6, P7, P8 verified over all 45 monoids of order <= 4";
  return true;
}

// 4. inc-injectivity equals injectivity of the zero adjunction on every act
//    of size <= 4 over every monoid of order <= 3.
bool criterion4(std::string& detail) {
  long long checked = 0;
  for (const MonoidPtr& S : monoids_up_to(3))
    for (const FiniteAct& Q : acts_up_to(S, 4)) {
      ++checked;
      if (is_inc_injective(Q).holds() !=
          is_injective(adjoin_zero(Q)).holds()) {
        detail = "mismatch on " + Q.name() + " over " + S->name();
        return false;
      }
    }
  detail = std::to_string(checked) + " acts, zero mismatches";
  return true;
}

// 5. The seven-clause left-reversibility equivalence.
bool criterion5(std::string& detail) {
  Report r = verify("P4", Bounds{3, 4, 4, 2});
  if (r.status != ClaimStatus::verified_within_bounds) {
    detail = std::string(claim_status_name(r.status)) + " " + r.witness.dump();
    return false;
  }
  detail = "P4 verified (" + std::to_string(r.instances) + " instances)";
  return true;
}

// 6. Strictness witnesses over LZ3 with replayable failures.
bool criterion6(std::string& detail) {
  auto lz3 = fixtures::lz3();
  FiniteAct t2 = coproduct_act({zero_act(lz3), zero_act(lz3)});
  if (!is_quasi_injective(t2).holds()) {
    detail = "two-zero act should be quasi-injective";
    return false;
  }
  if (!is_ind_injective(t2).holds()) {
    detail = "two-zero act should be InD-injective";
    return false;
  }
  InjectivityVerdict inj = is_injective(t2);
  InjectivityVerdict weak = is_weakly_injective(t2);
  if (inj.holds() || weak.holds()) {
    detail = "two-zero act must fail injectivity and weak injectivity";
    return false;
  }
  for (const InjectivityVerdict* v : {&inj, &weak}) {
    if (!v->witness) {
      detail = "failing verdict without witness";
      return false;
    }
    if (replay_problem_extendable(problem_json(*v->witness))) {
      detail = "witness replay found an extension";
      return false;
    }
  }
  detail = "quasi and InD hold, injective and weak fail with replayable "
           "witnesses";
  return true;
}

// 7. Implication lattice with zero violations over the criterion-4 space.
bool criterion7(std::string& detail) {
  long long checked = 0;
  for (const MonoidPtr& S : monoids_up_to(3))
    for (const FiniteAct& Q : acts_up_to(S, 4)) {
      ++checked;
      bool inj = is_injective(Q).holds();
      bool ind = is_ind_injective(Q).holds();
      bool inc = is_inc_injective(Q).holds();
      bool weak = is_weakly_injective(Q).holds();
      bool cc = is_cc_injective(Q).holds();
      bool c_ok =
          !ind || c_injective_upto(Q, 4).value == Outcome::holds_within_bounds;
      if ((inj && !ind) || (inj && !inc) || (inc && !weak) || (inc && !cc) ||
          !c_ok) {
        detail = "violation on " + Q.name() + " over " + S->name();
        return false;
      }
    }
  detail = std::to_string(checked) + " acts, lattice intact";
  return true;
}

// 8. The InD criterion never disagrees with the bounded falsifier.
bool criterion8(std::string& detail) {
  for (const MonoidPtr& S : monoids_up_to(3)) {
    std::vector<FiniteAct> pool = acts_up_to(S, 4);
    for (const FiniteAct& Q : pool) {
      InjectivityVerdict crit = is_ind_injective(Q);
      InjectivityVerdict bounded = ind_injective_upto(Q, 4, ExtendOracle::real(),
                                                      InjectLimits{}, &pool);
      if (crit.holds() && bounded.value == Outcome::fails) {
        detail = "criterion true, falsifier found " +
                 problem_json(*bounded.witness).dump() + " on " + Q.name() +
                 " over " + S->name();
        return false;
      }
      if (!crit.holds()) {
        bool witness_ok =
            crit.witness && !replay_problem_extendable(problem_json(*crit.witness));
        if (bounded.value != Outcome::fails && !witness_ok) {
          detail = "criterion false without a usable witness on " + Q.name() +
                   " over " + S->name();
          return false;
        }
      }
    }
  }
  detail = "criterion and bounded falsifier agree on every instance";
  return true;
}

// 9. Absolute injectivity: positive case and the LZ3 failure.
bool criterion9(std::string& detail) {
  if (!absolutely_injective_upto(fixtures::t1(), 4).holds) {
    detail = "every act over the trivial monoid should be injective";
    return false;
  }
  Report tc = verify("TC", Bounds{1, 4, 4, 2});
  if (tc.status != ClaimStatus::partial ||
      !tc.witness.is_null()) {
    detail = "TC on the trivial monoid should be partial with no witness";
    return false;
  }
  // clause (v) on LZ3: an indecomposable non-injective act exists
  bool found = false;
  for (const FiniteAct& Q : acts_up_to(fixtures::lz3(), 4)) {
    if (!is_indecomposable(Q)) continue;
    InjectivityVerdict v = is_injective(Q);
    if (!v.holds()) {
      if (!v.witness || replay_problem_extendable(problem_json(*v.witness))) {
        detail = "witness for the failing clause does not replay";
        return false;
      }
      found = true;
      break;
    }
  }
  if (!found) {
    detail = "no indecomposable non-injective act over LZ3 within size 4";
    return false;
  }
  detail = "trivial monoid absolutely injective within bounds; LZ3 fails "
           "with a replayable witness";
  return true;
}

// 10. Mutation self-tests: each inverted predicate flips some claim that is
//     green at baseline.
bool criterion10(std::string& detail) {
  Bounds b{3, 3, 3, 2};
  auto red_set = [&](Mutation m) {
    std::set<std::string> out;
    for (const Report& r : verify_all(b, 1, HarnessEnv(m)))
      if (r.status == ClaimStatus::counterexample) out.insert(r.claim);
    return out;
  };
  std::set<std::string> baseline = red_set(Mutation::none);
  struct Case {
    Mutation m;
    const char* name;
  };
  for (const Case& c :
       {Case{Mutation::invert_left_reversible, "left-reversibility"},
        Case{Mutation::invert_one_step_joined, "one-step-join"},
        Case{Mutation::invert_extendable, "extension-success"}}) {
    std::set<std::string> red = red_set(c.m);
    bool fresh = false;
    for (const std::string& id : red)
      if (!baseline.count(id)) fresh = true;
    if (!fresh) {
      detail = std::string("inverting ") + c.name +
               " produced no new counterexample";
      return false;
    }
  }
  // the inverted one-step join must break P6 itself, not just some claim
  Report p6 = verify("P6", b, HarnessEnv(Mutation::invert_one_step_joined));
  if (p6.status != ClaimStatus::counterexample) {
    detail = "P6 did not flag the inverted one-step join";
    return false;
  }
  detail = "all three inverted predicates produce fresh counterexamples";
  return true;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"criterion-1 monoid enumeration vs naive oracle", 5000, criterion1},
      {"criterion-2 decomposition vs chain closure", 60000, criterion2},
      {"criterion-3 P6/P7/P8 at order 4", 180000, criterion3},
      {"criterion-4 inc = injective-of-zero-adjunction", 300000, criterion4},
      {"criterion-5 P4 seven clauses", 300000, criterion5},
      {"criterion-6 strictness witnesses over LZ3", 10000, criterion6},
      {"criterion-7 implication lattice", 300000, criterion7},
      {"criterion-8 InD criterion vs bounded falsifier", 300000, criterion8},
      {"criterion-9 absolute injectivity cases", 30000, criterion9},
      {"criterion-10 mutation self-tests", 300000, criterion10},
  };
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (ok && !within(ms, c.budget_ms)) {
      ok = false;
      detail += " (over budget: " + std::to_string(ms) + "ms > " +
                std::to_string(c.budget_ms) + "ms)";
    }
    std::printf("%s %s [%lldms] %s\n", ok ? "PASS" : "FAIL", c.name, ms,
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
