#include <doctest.h>

#include <set>

#include "actlab/decompose.hpp"
#include "actlab/errors.hpp"
#include "actlab/fixtures.hpp"
#include "actlab/hom.hpp"

using namespace actlab;

namespace {
FiniteAct theta2(const MonoidPtr& S) {
  return coproduct_act({zero_act(S), zero_act(S)});
}
}  // namespace

TEST_CASE("act validation") {
  auto lz3 = fixtures::lz3();
  CHECK(regular_act(lz3).size() == 3);
  CHECK(zero_act(lz3).size() == 1);
  // x·1 != x
  CHECK_THROWS_WITH_AS(
      FiniteAct::validate(fixtures::c2(), "bad", {"x", "y"},
                          {{1, 0}, {1, 0}}),
      doctest::Contains("not unitary"), ValidationError);
  // wrong row arity
  CHECK_THROWS_AS(
      FiniteAct::validate(lz3, "bad", {"x"}, {{0, 0}}), ValidationError);
  // compatibility break: over N2, x·(0·0) must equal (x·0)·0
  CHECK_THROWS_WITH_AS(
      FiniteAct::validate(fixtures::n2(), "bad", {"x", "y"},
                          {{0, 1}, {1, 0}}),
      doctest::Contains("not compatible"), ValidationError);
}

TEST_CASE("regular acts") {
  auto c2 = fixtures::c2();
  FiniteAct reg = regular_act(c2);
  CHECK(reg.act(1, 1) == 0);  // g·g = 1
  CHECK(zeros(reg).empty());
  FiniteAct reg_lz3 = regular_act(fixtures::lz3());
  CHECK(zeros(reg_lz3) == std::vector<Idx>{1, 2});
  CHECK(regular_act(fixtures::t1()).size() == 1);
}

TEST_CASE("cyclic acts") {
  auto c2 = fixtures::c2();
  for (const RightCongruence& rho : all_right_congruences(c2)) {
    FiniteAct B = cyclic_act(c2, rho);
    if (rho.block_count() == 1) CHECK(B.size() == 1);
    // generated by the block of the identity
    CHECK(generated_elems(B, {rho.block_of[0]}).size() ==
          static_cast<size_t>(B.size()));
  }
  auto lz3 = fixtures::lz3();
  RightCongruence delta{lz3, {0, 1, 2}};
  CHECK(are_isomorphic(cyclic_act(lz3, delta), regular_act(lz3)));
  RightCongruence rho0{lz3, {0, 1, 1}};
  FiniteAct B = cyclic_act(lz3, rho0);
  CHECK(B.size() == 2);
  CHECK(zeros(B) == std::vector<Idx>{1});
}

TEST_CASE("Rees factor acts") {
  auto lz3 = fixtures::lz3();
  RightIdeal ab{lz3, {1, 2}};
  FiniteAct B = rees_factor_act(lz3, ab);
  CHECK(B.size() == 2);
  CHECK(zeros(B).size() == 1);
  RightIdeal whole{lz3, {0, 1, 2}};
  CHECK(rees_factor_act(lz3, whole).size() == 1);
}

TEST_CASE("zeros") {
  auto lz3 = fixtures::lz3();
  CHECK(zeros(zero_act(lz3)).size() == 1);
  CHECK(zeros(regular_act(fixtures::c2())).empty());
  CHECK(zeros(regular_act(lz3)) == std::vector<Idx>{1, 2});
}

TEST_CASE("zero adjunction") {
  auto c2 = fixtures::c2();
  FiniteAct with_zero = adjoin_zero(regular_act(c2));
  CHECK(with_zero.size() == 3);
  CHECK(zeros(with_zero).size() == 1);
  CHECK(with_zero.label(2) == "\xce\xb8");
  // unchanged when a zero exists
  FiniteAct reg_lz3 = regular_act(fixtures::lz3());
  CHECK(adjoin_zero(reg_lz3).size() == reg_lz3.size());
  CHECK(adjoin_zero(zero_act(c2)).size() == 1);
  // idempotent up to isomorphism
  for (const MonoidPtr& S : monoids_up_to(2))
    for (const FiniteAct& A : acts_up_to(S, 3))
      CHECK(are_isomorphic(adjoin_zero(adjoin_zero(A)), adjoin_zero(A)));
}

TEST_CASE("coproducts") {
  auto lz3 = fixtures::lz3();
  FiniteAct t2 = theta2(lz3);
  CHECK(t2.size() == 2);
  CHECK(zeros(t2).size() == 2);
  Coproduct c = coproduct({t2, regular_act(lz3)});
  CHECK(c.act.size() == 5);
  CHECK(c.injections.size() == 2);
  CHECK(c.injections[1][0] == 2);
  CHECK(are_isomorphic(coproduct_act({t2}), t2));
  CHECK_THROWS_AS(coproduct({}), ValidationError);
  CHECK_THROWS_AS(coproduct_act({zero_act(lz3), zero_act(fixtures::c2())}),
                  ValidationError);
}

TEST_CASE("coproducts of indecomposable parts keep the summand partition") {
  auto rz3 = fixtures::rz3();
  std::vector<FiniteAct> parts;
  for (const FiniteAct& A : acts_up_to(rz3, 3))
    if (components(A).component_count == 1) parts.push_back(A);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j) {
      Coproduct c = coproduct({parts[i], parts[j]});
      Decomposition d = components(c.act);
      CHECK(d.component_count == 2);
      // every injection image sits inside one component
      for (const std::vector<Idx>& inj : c.injections) {
        std::set<int> comps;
        for (Idx x : inj) comps.insert(d.component_of[x]);
        CHECK(comps.size() == 1);
      }
    }
}

TEST_CASE("products") {
  auto c2 = fixtures::c2();
  CHECK(product({zero_act(c2), zero_act(c2)}).act.size() == 1);
  Product p = product({regular_act(c2), regular_act(c2)});
  CHECK(p.act.size() == 4);
  CHECK(p.projections.size() == 2);
  FiniteAct t2 = theta2(c2);
  FiniteAct three = adjoin_zero(regular_act(c2));
  CHECK(product({t2, three}).act.size() == 6);
  CHECK_THROWS_AS(product({regular_act(c2), regular_act(c2)}, 3),
                  SizeGuardError);
}

TEST_CASE("cofree acts") {
  auto lz3 = fixtures::lz3();
  CHECK(cofree_act(lz3, 1).size() == 1);  // terminal object
  FiniteAct X = cofree_act(lz3, 2);
  CHECK(X.size() == 8);
  CHECK(zeros(X).size() == 2);
  // zeros are exactly the constant functions
  for (Idx z : zeros(X)) {
    const std::string& l = X.label(z);
    CHECK((l == "(0,0,0)" || l == "(1,1,1)"));
  }
  FiniteAct Y = cofree_act(fixtures::n2(), 2);
  CHECK(Y.size() == 4);
  CHECK(zeros(Y).size() == 2);
  CHECK_THROWS_AS(cofree_act(lz3, 17, 4096), SizeGuardError);
  // |zeros| = |letters| on every fixture
  for (auto S : {fixtures::c2(), fixtures::rz3(), fixtures::m3()})
    for (int k = 1; k <= 3; ++k)
      CHECK(zeros(cofree_act(S, k)).size() == static_cast<size_t>(k));
}

TEST_CASE("subact enumeration") {
  auto lz3 = fixtures::lz3();
  CHECK(subact_sets(zero_act(lz3)).size() == 1);
  CHECK(subact_sets(regular_act(fixtures::c2())).size() == 1);
  CHECK(subact_sets(theta2(lz3)).size() == 3);
  CHECK(subact_sets(regular_act(lz3)).size() == 4);  // {a},{b},{a,b},S
}

TEST_CASE("generated subacts") {
  auto lz3 = fixtures::lz3();
  FiniteAct reg = regular_act(lz3);
  CHECK(generated_elems(reg, {0}) == std::vector<Idx>{0, 1, 2});
  CHECK(generated_elems(reg, {1}) == std::vector<Idx>{1});
  FiniteAct t2 = theta2(lz3);
  CHECK(generated_elems(t2, {0}) == std::vector<Idx>{0});
  CHECK_THROWS_AS(generated_elems(reg, {}), ValidationError);
}

TEST_CASE("act enumeration") {
  CHECK(enumerate_acts(fixtures::t1(), 2).size() == 1);
  CHECK(enumerate_acts(fixtures::c2(), 2).size() == 2);
  for (auto S : {fixtures::lz3(), fixtures::c2(), fixtures::m3()})
    CHECK(enumerate_acts(S, 1).size() == 1);
  // enumerated acts are pairwise non-isomorphic and self-consistent
  auto pool = acts_up_to(fixtures::rz3(), 3);
  for (size_t i = 0; i < pool.size(); ++i) {
    const int n = fixtures::rz3()->size();
    std::vector<std::vector<Idx>> rows(pool[i].size(), std::vector<Idx>(n));
    for (Idx x = 0; x < pool[i].size(); ++x)
      for (Idx s = 0; s < n; ++s) rows[x][s] = pool[i].act(x, s);
    CHECK_NOTHROW(FiniteAct::validate(fixtures::rz3(), "re", pool[i].labels(),
                                      rows));
    for (size_t j = i + 1; j < pool.size(); ++j)
      if (pool[i].size() == pool[j].size())
        CHECK_FALSE(are_isomorphic(pool[i], pool[j]));
  }
}
