#include <doctest.h>

#include "actlab/errors.hpp"
#include "actlab/fixtures.hpp"
#include "actlab/hom.hpp"
#include "oracles.hpp"

using namespace actlab;

namespace {
FiniteAct theta2(const MonoidPtr& S) {
  return coproduct_act({zero_act(S), zero_act(S)});
}
}  // namespace

TEST_CASE("hom counts on the fixtures") {
  auto lz3 = fixtures::lz3();
  FiniteAct reg = regular_act(lz3);
  FiniteAct t2 = theta2(lz3);
  // zero act maps onto each zero of the target
  CHECK(count_homomorphisms(zero_act(lz3), reg) == 2);
  CHECK(count_homomorphisms(zero_act(lz3), t2) == 2);
  // the regular act is free on one generator
  for (auto S : {lz3, fixtures::c2(), fixtures::rz3()})
    for (const FiniteAct& B : acts_up_to(S, 3))
      CHECK(count_homomorphisms(regular_act(S), B) == B.size());
  CHECK(count_homomorphisms(t2, zero_act(lz3)) == 1);
}

TEST_CASE("monomorphism counts") {
  auto lz3 = fixtures::lz3();
  FiniteAct t2 = theta2(lz3);
  CHECK(monomorphisms(zero_act(lz3), t2).size() == 2);
  CHECK(monomorphisms(t2, zero_act(lz3)).empty());
  auto c2 = fixtures::c2();
  CHECK(monomorphisms(regular_act(c2), regular_act(c2)).size() == 2);
}

TEST_CASE("backtracking count equals brute force") {
  for (const MonoidPtr& S : monoids_up_to(3)) {
    auto pool = acts_up_to(S, 3);
    for (const FiniteAct& A : pool)
      for (const FiniteAct& B : pool)
        CHECK(count_homomorphisms(A, B) ==
              oracles::brute_force_hom_count(A, B));
  }
}

TEST_CASE("every emitted hom is equivariant") {
  auto rz3 = fixtures::rz3();
  for (const FiniteAct& A : acts_up_to(rz3, 3))
    for (const FiniteAct& B : acts_up_to(rz3, 3))
      for (const ActHom& f : homomorphisms(A, B))
        CHECK(is_equivariant(A, B, f.map));
}

TEST_CASE("extension problems") {
  auto lz3 = fixtures::lz3();
  FiniteAct reg = regular_act(lz3);
  FiniteAct t2 = theta2(lz3);

  SUBCASE("whole-act problems extend by the partial map itself") {
    std::vector<Idx> all{0, 1};
    auto p = make_extension_problem(t2, all, t2, {1, 0});
    auto g = extend_hom(p);
    REQUIRE(g.has_value());
    CHECK(g->map == std::vector<Idx>{1, 0});
  }

  SUBCASE("splitting the zeros of the regular act fails") {
    auto p = make_extension_problem(reg, {1, 2}, t2, {0, 1});
    CHECK_FALSE(extend_hom(p).has_value());
  }

  SUBCASE("spare components collapse onto a zero") {
    Coproduct c = coproduct({reg, zero_act(lz3)});
    // the regular part is a whole component; the target has zeros
    auto p = make_extension_problem(c.act, {0, 1, 2}, reg, {0, 1, 2});
    auto g = extend_hom(p);
    REQUIRE(g.has_value());
    CHECK(g->map[0] == 0);
    CHECK(zeros(reg).end() !=
          std::find(zeros(reg).begin(), zeros(reg).end(), g->map[3]));
  }

  SUBCASE("extensions restrict to the partial map") {
    for (const FiniteAct& B : acts_up_to(lz3, 3))
      for (const std::vector<Idx>& C : subact_sets(B)) {
        FiniteAct Cact = subact_as_act(B, C);
        for (const ActHom& f : homomorphisms(Cact, t2)) {
          auto p = make_extension_problem(B, C, t2, f.map);
          auto g = extend_hom(p);
          if (!g) continue;
          for (size_t i = 0; i < C.size(); ++i)
            CHECK(g->map[C[i]] == f.map[i]);
        }
      }
  }

  SUBCASE("validation rejects bad problems") {
    CHECK_THROWS_AS(make_extension_problem(reg, {1}, t2, {0, 1}),
                    ValidationError);
    // not closed
    CHECK_THROWS_AS(make_extension_problem(reg, {0}, t2, {0}),
                    ValidationError);
    // not equivariant
    CHECK_THROWS_AS(make_extension_problem(t2, {0, 1}, reg, {0, 0}),
                    ValidationError);
  }
}

TEST_CASE("retractions") {
  auto lz3 = fixtures::lz3();
  FiniteAct t2 = theta2(lz3);
  SUBCASE("identity retraction") {
    auto r = is_retract(t2, {0, 1});
    REQUIRE(r.has_value());
    CHECK(r->map == std::vector<Idx>{0, 1});
  }
  SUBCASE("collapse onto one zero") {
    auto r = is_retract(t2, {0});
    REQUIRE(r.has_value());
    CHECK(r->map == std::vector<Idx>{0, 0});
  }
  SUBCASE("side with a zero retracts a coproduct") {
    FiniteAct reg = regular_act(lz3);
    Coproduct c = coproduct({reg, zero_act(lz3)});
    auto r = is_retract(c.act, {0, 1, 2});
    REQUIRE(r.has_value());
    for (Idx i = 0; i < 3; ++i) CHECK(r->map[i] == i);
  }
  SUBCASE("no retraction onto a zero-free subact") {
    auto c2 = fixtures::c2();
    FiniteAct with_zero = adjoin_zero(regular_act(c2));
    CHECK_FALSE(is_retract(with_zero, {0, 1}).has_value());
  }
}

TEST_CASE("isomorphism checks") {
  auto lz3 = fixtures::lz3();
  FiniteAct reg = regular_act(lz3);
  RightCongruence delta{lz3, {0, 1, 2}};
  CHECK(are_isomorphic(cyclic_act(lz3, delta), reg));
  CHECK_FALSE(are_isomorphic(zero_act(lz3), theta2(lz3)));
  // the regular act with its carrier cyclically relabeled
  FiniteAct relab = FiniteAct::validate(
      lz3, "relab", {"p", "q", "r"}, {{0, 0, 0}, {1, 2, 0}, {2, 2, 2}});
  CHECK(are_isomorphic(relab, reg));
  CHECK_THROWS_AS(are_isomorphic(reg, regular_act(fixtures::c2())),
                  ValidationError);
}

TEST_CASE("search guard aborts loudly") {
  auto c2 = fixtures::c2();
  FiniteAct big = cofree_act(c2, 3);  // 9 elements
  SearchLimits tiny{3};
  CHECK_THROWS_AS(homomorphisms(big, big, tiny), SizeGuardError);
}
