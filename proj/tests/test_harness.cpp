#include <doctest.h>

#include <set>

#include "actlab/errors.hpp"
#include "actlab/fixtures.hpp"
#include "actlab/harness.hpp"
#include "actlab/io.hpp"

using namespace actlab;

TEST_CASE("claim registry") {
  const auto& reg = claim_registry();
  CHECK(reg.size() == 25);
  std::set<std::string> ids;
  for (const Claim& c : reg) {
    CHECK(!c.statement.empty());
    ids.insert(c.id);
  }
  CHECK(ids.size() == 25);
  CHECK(find_claim("P8").id == "P8");
  CHECK(find_claim("P8").statement.find("ofree") != std::string::npos);
  CHECK_THROWS_AS(find_claim("ZZ"), UnknownClaimError);
  // the two partial-by-design claims
  CHECK(find_claim("T2").partial_by_design);
  CHECK(find_claim("TC").partial_by_design);
}

TEST_CASE("verify single claims") {
  Bounds b;
  Report p8 = verify("P8", b);
  CHECK(p8.status == ClaimStatus::verified_within_bounds);
  CHECK(p8.instances == 10);  // one cofree check per monoid of order <= 3
  Report t1 = verify("T1", Bounds{3, 3, 3, 2});
  CHECK(t1.status == ClaimStatus::verified_within_bounds);
  CHECK(t1.witness.is_null());
}

TEST_CASE("verify_all at small bounds") {
  Bounds b{2, 3, 3, 2};
  auto reports = verify_all(b);
  CHECK(reports.size() == 25);
  std::set<std::string> red, partial;
  for (const Report& r : reports) {
    if (r.status == ClaimStatus::counterexample) red.insert(r.claim);
    if (r.status == ClaimStatus::partial) partial.insert(r.claim);
  }
  // the one honest counterexample: the coproduct-with-envelope statement
  // fails for the zero-free regular act of the two-element group
  CHECK(red == std::set<std::string>{"QI"});
  CHECK(partial == std::set<std::string>{"T2", "TC"});
}

TEST_CASE("the QI counterexample witness replays") {
  Bounds b{2, 3, 3, 2};
  Report qi = verify("QI", b);
  REQUIRE(qi.status == ClaimStatus::counterexample);
  const nlohmann::json& w = qi.witness;
  CHECK(w["coproduct_quasi_injective"] == true);
  CHECK(w["act_injective"] == false);
  CHECK(w["act_zeros"] == 0);
  // the witness monoid is the order-2 group
  CHECK(w["monoid"]["table"][1][1] == w["monoid"]["elements"][0]);
  // replay: recompute both predicates on the named instance
  FiniteAct A = regular_act(fixtures::c2());
  auto [E, into] = injective_envelope(A);
  CHECK(is_quasi_injective(coproduct_act({A, E})).holds());
  CHECK_FALSE(is_injective(A).holds());
}

TEST_CASE("worker count does not change the reports") {
  Bounds b{2, 3, 3, 2};
  auto serial = verify_all(b, 1);
  auto parallel = verify_all(b, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    nlohmann::json a = report_json(serial[i]);
    nlohmann::json c = report_json(parallel[i]);
    a.erase("elapsed_ms");
    c.erase("elapsed_ms");
    CHECK(a.dump() == c.dump());
  }
}

TEST_CASE("mutation self-test: inverted one-step join breaks P6") {
  Report r = verify("P6", Bounds{2, 3, 3, 2},
                    HarnessEnv(Mutation::invert_one_step_joined));
  CHECK(r.status == ClaimStatus::counterexample);
  CHECK_FALSE(r.witness.is_null());
}

TEST_CASE("mutation self-test: inverted left reversibility breaks P8") {
  Report r = verify("P8", Bounds{3, 3, 3, 2},
                    HarnessEnv(Mutation::invert_left_reversible));
  CHECK(r.status == ClaimStatus::counterexample);
}

TEST_CASE("mutation self-test: inverted extension success breaks P4") {
  Report r = verify("P4", Bounds{2, 3, 3, 2},
                    HarnessEnv(Mutation::invert_extendable));
  CHECK(r.status == ClaimStatus::counterexample);
}

TEST_CASE("order-1 bounds verify trivially") {
  Bounds b{1, 2, 2, 2};
  for (const Report& r : verify_all(b)) {
    CHECK(r.status != ClaimStatus::counterexample);
    CHECK(r.status != ClaimStatus::skipped);
  }
}

TEST_CASE("verdict shape invariants") {
  auto lz3 = fixtures::lz3();
  FiniteAct t2 = coproduct_act({zero_act(lz3), zero_act(lz3)});
  for (const InjectivityVerdict& v :
       {is_injective(t2), is_weakly_injective(t2), is_inc_injective(t2),
        is_cc_injective(t2), is_quasi_injective(t2), is_ind_injective(t2),
        ind_injective_upto(t2, 3), pseudo_injective_upto(t2, 3),
        c_injective_upto(t2, 3)}) {
    CHECK(v.witness.has_value() == (v.value == Outcome::fails));
    bool bounded = v.notion == Notion::c_upto ||
                   v.notion == Notion::pseudo_upto || v.notion == Notion::ind ||
                   v.notion == Notion::pind;
    if (v.bound.has_value()) CHECK(bounded);
    if (v.value == Outcome::holds_within_bounds) CHECK(v.bound.has_value());
  }
}

TEST_CASE("claims skip gracefully on absurd bounds") {
  Bounds b;
  b.max_monoid = 9;  // beyond the enumeration guard
  auto reports = verify_all(b);
  for (const Report& r : reports) CHECK(r.status == ClaimStatus::skipped);
}
