#include <algorithm>
#include <map>
#include <set>

#include "actlab/errors.hpp"
#include "actlab/fixtures.hpp"
#include "actlab/harness.hpp"
#include "actlab/io.hpp"

// One checker per claim of the registry. Every checker quantifies over the
// monoid pool of the given bounds and whatever act pools its statement
// needs, reports the first disagreement as a counterexample witness, and
// counts instances and guard-skips.

namespace actlab {
namespace claims {

namespace {

using nlohmann::json;

// Per-monoid evaluation context with verdict caches. All predicates route
// extendability through the harness oracle so mutation self-tests reach
// them.
struct Ctx {
  MonoidPtr S;
  const Bounds& b;
  const HarnessEnv& env;
  InjectLimits lim{};
  bool lr;
  std::vector<FiniteAct> acts;      // carrier sizes 1..b.max_act
  std::vector<FiniteAct> codomain;  // carrier sizes 1..b.codomain

  Ctx(MonoidPtr S_, const Bounds& b_, const HarnessEnv& env_)
      : S(std::move(S_)), b(b_), env(env_), lr(env_.left_reversible(*S)) {
    int cap = std::max(b.max_act, b.codomain);
    for (FiniteAct& A : acts_up_to(S, cap)) {
      if (A.size() <= b.max_act) acts.push_back(A);
      if (A.size() <= b.codomain) codomain.push_back(std::move(A));
    }
  }

  using Key = std::vector<Idx>;
  std::map<Key, bool> inj_cache, inc_cache, weak_cache, cc_cache, quasi_cache,
      ind_cache;

  bool memo(std::map<Key, bool>& cache, const FiniteAct& Q,
            const std::function<bool()>& compute) {
    auto it = cache.find(Q.flat_table());
    if (it != cache.end()) return it->second;
    bool v = compute();
    cache.emplace(Q.flat_table(), v);
    return v;
  }

  bool injective(const FiniteAct& Q) {
    return memo(inj_cache, Q,
                [&] { return is_injective(Q, env.oracle(), lim).holds(); });
  }
  bool inc(const FiniteAct& Q) {
    return memo(inc_cache, Q,
                [&] { return is_inc_injective(Q, env.oracle(), lim).holds(); });
  }
  bool weak(const FiniteAct& Q) {
    return memo(weak_cache, Q, [&] {
      return is_weakly_injective(Q, env.oracle(), lim).holds();
    });
  }
  bool cc(const FiniteAct& Q) {
    return memo(cc_cache, Q,
                [&] { return is_cc_injective(Q, env.oracle(), lim).holds(); });
  }
  std::optional<bool> quasi(const FiniteAct& Q) {
    try {
      return memo(quasi_cache, Q, [&] {
        return is_quasi_injective(Q, env.oracle(), lim).holds();
      });
    } catch (const SizeGuardError&) {
      return std::nullopt;
    }
  }
  // InD and PInD share the extension criterion.
  std::optional<bool> ind(const FiniteAct& Q) {
    try {
      return memo(ind_cache, Q, [&] {
        return is_ind_injective(Q, env.oracle(), lim).holds();
      });
    } catch (const SizeGuardError&) {
      return std::nullopt;
    }
  }
};

json m_witness(const Ctx& ctx) { return {{"monoid", monoid_json(*ctx.S)}}; }

void fail(Report& r, json witness) {
  r.status = ClaimStatus::counterexample;
  r.witness = std::move(witness);
}

void clause_mismatch(Report& r, const Ctx& ctx, const std::string& clause,
                     bool value, bool expected, json detail = json::object()) {
  json w = m_witness(ctx);
  w["clause"] = clause;
  w["clause_value"] = value;
  w["expected"] = expected;
  w["detail"] = std::move(detail);
  fail(r, std::move(w));
}

// Runs `body` for every monoid within bounds until a counterexample lands.
void per_monoid(const Bounds& b, const HarnessEnv& env, Report& r,
                const std::function<void(Ctx&, Report&)>& body) {
  for (const MonoidPtr& S : monoids_up_to(b.max_monoid)) {
    Ctx ctx(S, b, env);
    body(ctx, r);
    if (r.status == ClaimStatus::counterexample) return;
  }
}

std::vector<FiniteAct> component_acts(const FiniteAct& Q) {
  std::vector<FiniteAct> out;
  for (const std::vector<Idx>& elems : components(Q).component_elems())
    out.push_back(subact_as_act(Q, elems));
  return out;
}

// Splits of the component set into two nonempty unions, each side returned
// as a carrier subset.
std::vector<std::pair<std::vector<Idx>, std::vector<Idx>>> component_splits(
    const FiniteAct& Q) {
  Decomposition d = components(Q);
  std::vector<std::pair<std::vector<Idx>, std::vector<Idx>>> out;
  if (d.component_count < 2) return out;
  for (int mask = 1; mask < (1 << d.component_count) - 1; ++mask) {
    std::vector<Idx> left, right;
    for (Idx x = 0; x < Q.size(); ++x)
      (mask >> d.component_of[x] & 1 ? left : right).push_back(x);
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

// Chain-relation closure, computed from orbit overlaps instead of action
// edges: elements x, y are chained exactly when a path of pairwise
// intersecting orbits connects them.
std::vector<int> chain_component_of(const FiniteAct& A) {
  const int m = A.size();
  std::vector<std::set<Idx>> orbit(m);
  for (Idx x = 0; x < m; ++x)
    for (Idx y : generated_elems(A, {x})) orbit[x].insert(y);
  UnionFind uf(m);
  for (Idx x = 0; x < m; ++x)
    for (Idx y = x + 1; y < m; ++y) {
      bool meet = false;
      for (Idx z : orbit[x])
        if (orbit[y].count(z)) {
          meet = true;
          break;
        }
      if (meet) uf.unite(x, y);
    }
  std::vector<int> roots(m);
  for (Idx x = 0; x < m; ++x) roots[x] = uf.find(x);
  return normalize_block_ids(roots);
}

// ---------------------------------------------------------------- claims --

void check_R1(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& A : ctx.acts) {
      ++rep.instances;
      Decomposition d = components(A);
      if (chain_component_of(A) != d.component_of) {
        json w = m_witness(ctx);
        w["act"] = act_json(A);
        w["detail"] = "chain closure disagrees with action-edge components";
        return fail(rep, std::move(w));
      }
    }
    // Homomorphic images of indecomposable acts are indecomposable.
    for (const FiniteAct& A : ctx.acts) {
      if (!is_indecomposable(A)) continue;
      for (const FiniteAct& B : ctx.acts) {
        for (const ActHom& f : homomorphisms(A, B)) {
          ++rep.instances;
          if (!is_indecomposable(subact_as_act(B, image_elems(f.map)))) {
            json w = m_witness(ctx);
            w["source"] = act_json(A);
            w["target"] = act_json(B);
            w["detail"] = "decomposable image of an indecomposable act";
            return fail(rep, std::move(w));
          }
        }
      }
    }
  });
}

void check_P6(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& A : ctx.acts) {
      Decomposition d = components(A);
      for (Idx x = 0; x < A.size(); ++x)
        for (Idx y = x; y < A.size(); ++y) {
          ++rep.instances;
          bool joined = ctx.env.one_step_joined_ok(A, x, y);
          bool same = d.component_of[x] == d.component_of[y];
          if (joined && !same) {
            json w = m_witness(ctx);
            w["act"] = act_json(A);
            w["pair"] = {A.label(x), A.label(y)};
            w["detail"] = "one-step joined pair in different components";
            return fail(rep, std::move(w));
          }
          if (ctx.lr && same && !joined) {
            json w = m_witness(ctx);
            w["act"] = act_json(A);
            w["pair"] = {A.label(x), A.label(y)};
            w["detail"] =
                "left reversible, same component, but never one-step joined";
            return fail(rep, std::move(w));
          }
        }
    }
  });
}

void check_P7(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    std::vector<FiniteAct> pool = ctx.acts;
    pool.push_back(regular_act(ctx.S));
    if (ctx.lr) {
      for (const FiniteAct& A : pool) {
        if (!is_indecomposable(A)) continue;
        for (const std::vector<Idx>& C : subact_sets(A, ctx.lim.subacts)) {
          ++rep.instances;
          if (!is_indecomposable(subact_as_act(A, C))) {
            json w = m_witness(ctx);
            w["act"] = act_json(A);
            w["subact"] = act_json(subact_as_act(A, C));
            w["detail"] =
                "left reversible but an indecomposable act has a "
                "decomposable subact";
            return fail(rep, std::move(w));
          }
        }
      }
    } else {
      bool found = false;
      for (const FiniteAct& A : pool) {
        if (!is_indecomposable(A)) continue;
        for (const std::vector<Idx>& C : subact_sets(A, ctx.lim.subacts)) {
          ++rep.instances;
          if (!is_indecomposable(subact_as_act(A, C))) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        json w = m_witness(ctx);
        w["detail"] =
            "not left reversible, yet no indecomposable act within bounds "
            "has a decomposable subact (the regular act should)";
        return fail(rep, std::move(w));
      }
    }
  });
}

void check_P8(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (int k = 2; k <= ctx.b.alphabet; ++k) {
      std::optional<FiniteAct> X;
      try {
        X = cofree_act(ctx.S, k, ctx.lim.cofree_guard);
      } catch (const SizeGuardError&) {
        ++rep.skipped;
        continue;
      }
      ++rep.instances;
      bool decomposable = !is_indecomposable(*X);
      if (decomposable != ctx.lr) {
        json w = m_witness(ctx);
        w["alphabet"] = k;
        w["cofree_size"] = X->size();
        w["decomposable"] = decomposable;
        w["left_reversible"] = ctx.lr;
        return fail(rep, std::move(w));
      }
    }
  });
}

// Fresh-zero closure of a carrier subset, as a standalone act: the subact
// itself when closed or with one absorbing element appended.
FiniteAct side_with_zero(const FiniteAct& Q, const std::vector<Idx>& side) {
  return adjoin_zero(subact_as_act(Q, side));
}

void check_L2(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      std::vector<Idx> zs = zeros(Q);
      if (zs.empty()) continue;
      for (auto& [left, right] : component_splits(Q)) {
        ++rep.instances;
        // theta: a zero inside the chosen side when one exists, else the
        // least zero of Q.
        Idx theta = -1;
        for (Idx z : zs)
          if (std::binary_search(left.begin(), left.end(), z)) {
            theta = z;
            break;
          }
        if (theta < 0) theta = zs[0];
        std::vector<Idx> side = left;
        if (!std::binary_search(side.begin(), side.end(), theta)) {
          side.push_back(theta);
          std::sort(side.begin(), side.end());
        }
        FiniteAct target = subact_as_act(Q, side);
        std::vector<Idx> pos(Q.size(), -1);
        for (size_t i = 0; i < side.size(); ++i) pos[side[i]] = static_cast<Idx>(i);
        std::vector<Idx> f(Q.size());
        for (Idx x = 0; x < Q.size(); ++x)
          f[x] = pos[x] >= 0 ? pos[x] : pos[theta];
        bool hom = is_equivariant(Q, target, f);
        bool retracts = true;
        for (Idx x : side) retracts = retracts && f[x] == pos[x];
        if (!hom || !retracts) {
          json w = m_witness(ctx);
          w["act"] = act_json(Q);
          w["side"] = act_json(target);
          w["detail"] = hom ? "retraction does not fix the side pointwise"
                            : "collapse-to-zero map is not equivariant";
          return fail(rep, std::move(w));
        }
      }
    }
  });
}

void check_L3(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      if (components(Q).component_count < 2) continue;
      if (!ctx.injective(Q)) continue;
      for (auto& [left, right] : component_splits(Q)) {
        ++rep.instances;
        FiniteAct side = side_with_zero(Q, left);
        if (!ctx.injective(side)) {
          json w = m_witness(ctx);
          w["act"] = act_json(Q);
          w["side_with_zero"] = act_json(side);
          w["detail"] = "injective coproduct, side with zero not injective";
          return fail(rep, std::move(w));
        }
      }
    }
  });
}

void check_T1(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      bool lhs = ctx.inc(Q);
      bool rhs = ctx.injective(adjoin_zero(Q));
      if (lhs != rhs) {
        json w = m_witness(ctx);
        w["act"] = act_json(Q);
        w["inc_injective"] = lhs;
        w["zero_adjunction_injective"] = rhs;
        return fail(rep, std::move(w));
      }
    }
  });
}

void check_C4(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      if (ctx.inc(Q) && !ctx.weak(Q)) {
        json w = m_witness(ctx);
        w["act"] = act_json(Q);
        w["detail"] = "inc-injective but not weakly injective";
        return fail(rep, std::move(w));
      }
    }
  });
}

void check_C5(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      bool cyclic_criterion = ctx.inc(Q);
      std::optional<ExtensionProblem> violation;
      for (const FiniteAct& B : ctx.codomain) {
        if (!is_indecomposable(B)) continue;
        for (const std::vector<Idx>& C : subact_sets(B, ctx.lim.subacts)) {
          FiniteAct Cact = subact_as_act(B, C);
          for_each_hom(Cact, Q, false, [&](const std::vector<Idx>& f) {
            auto p = make_extension_problem(B, C, Q, f);
            if (!ctx.env.oracle().extendable(p)) {
              violation = std::move(p);
              return false;
            }
            return true;
          });
          if (violation) break;
        }
        if (violation) break;
      }
      if (cyclic_criterion && violation) {
        json w = m_witness(ctx);
        w["act"] = act_json(Q);
        w["problem"] = problem_json(*violation);
        w["detail"] =
            "cyclic criterion holds but an indecomposable-codomain problem "
            "fails";
        return fail(rep, std::move(w));
      }
      if (!cyclic_criterion && !violation) {
        if (ctx.b.codomain >= ctx.S->size()) {
          json w = m_witness(ctx);
          w["act"] = act_json(Q);
          w["detail"] =
              "cyclic criterion fails but no indecomposable-codomain "
              "problem within bounds does";
          return fail(rep, std::move(w));
        }
        ++rep.skipped;
      }
    }
  });
}

void check_PC1(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      if (!ctx.inc(Q)) continue;
      for (const std::vector<Idx>& R : subact_sets(Q, ctx.lim.subacts)) {
        if (!is_retract(Q, R)) continue;
        ++rep.instances;
        if (!ctx.inc(subact_as_act(Q, R))) {
          json w = m_witness(ctx);
          w["act"] = act_json(Q);
          w["retract"] = act_json(subact_as_act(Q, R));
          w["detail"] = "retract of an inc-injective act is not inc-injective";
          return fail(rep, std::move(w));
        }
      }
    }
    bool violation = false;
    json violation_detail;
    for (size_t i = 0; i < ctx.acts.size(); ++i) {
      for (size_t j = i; j < ctx.acts.size(); ++j) {
        const FiniteAct& A = ctx.acts[i];
        const FiniteAct& B = ctx.acts[j];
        if (A.size() + B.size() > std::max(ctx.b.max_act, 2)) continue;
        if (!ctx.inc(A) || !ctx.inc(B)) continue;
        ++rep.instances;
        FiniteAct W = coproduct_act({A, B});
        if (!ctx.inc(W)) {
          violation = true;
          violation_detail = {{"left", act_json(A)},
                              {"right", act_json(B)},
                              {"coproduct", act_json(W)}};
          break;
        }
      }
      if (violation) break;
    }
    if (violation != !ctx.lr)
      return clause_mismatch(
          r, ctx, "coproducts of inc-injective acts are inc-injective",
          !violation, ctx.lr, violation_detail);
  });
}

void check_P4(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    const bool lr = ctx.lr;
    std::vector<FiniteAct> cof;
    for (int k = 2; k <= ctx.b.alphabet; ++k) {
      try {
        cof.push_back(cofree_act(ctx.S, k, ctx.lim.cofree_guard));
      } catch (const SizeGuardError&) {
        ++rep.skipped;
      }
    }

    // (i) coproducts of injective pairs stay injective.
    {
      bool violation = false;
      json detail;
      for (size_t i = 0; i < ctx.acts.size() && !violation; ++i)
        for (size_t j = i; j < ctx.acts.size() && !violation; ++j) {
          if (!ctx.injective(ctx.acts[i]) || !ctx.injective(ctx.acts[j]))
            continue;
          ++rep.instances;
          FiniteAct W = coproduct_act({ctx.acts[i], ctx.acts[j]});
          if (!ctx.injective(W)) {
            violation = true;
            detail = {{"left", act_json(ctx.acts[i])},
                      {"right", act_json(ctx.acts[j])}};
          }
        }
      if (!violation != lr)
        return clause_mismatch(r, ctx, "(i) coproducts of injective acts",
                               !violation, lr, detail);
    }

    // (ii) some coproduct of two injective acts is injective / weakly
    // injective; (iii) the same over arbitrary pairs.
    {
      bool ii_inj = false, ii_weak = false, iii_inj = false, iii_weak = false;
      for (size_t i = 0; i < ctx.acts.size(); ++i)
        for (size_t j = i; j < ctx.acts.size(); ++j) {
          ++rep.instances;
          FiniteAct W = coproduct_act({ctx.acts[i], ctx.acts[j]});
          bool wi = ctx.injective(W);
          bool ww = ctx.weak(W);
          iii_inj = iii_inj || wi;
          iii_weak = iii_weak || ww;
          if (ctx.injective(ctx.acts[i]) && ctx.injective(ctx.acts[j])) {
            ii_inj = ii_inj || wi;
            ii_weak = ii_weak || ww;
          }
          if (ii_inj && ii_weak && iii_inj && iii_weak && lr) break;
        }
      if (ii_inj != lr)
        return clause_mismatch(r, ctx, "(ii) decomposable injective act from injective parts", ii_inj, lr);
      if (ii_weak != lr)
        return clause_mismatch(r, ctx, "(ii) decomposable weakly injective act from injective parts", ii_weak, lr);
      if (iii_inj != lr)
        return clause_mismatch(r, ctx, "(iii) some decomposable injective act", iii_inj, lr);
      if (iii_weak != lr)
        return clause_mismatch(r, ctx, "(iii) some decomposable weakly injective act", iii_weak, lr);
    }

    // (v) subacts of indecomposable acts; (vi) restricted to injective
    // ambient acts (cofree pool included); (vii) zero counts.
    {
      std::vector<FiniteAct> pool_v = ctx.acts;
      pool_v.push_back(regular_act(ctx.S));
      bool v_violation = false;
      for (const FiniteAct& A : pool_v) {
        if (!is_indecomposable(A)) continue;
        for (const std::vector<Idx>& C : subact_sets(A, ctx.lim.subacts)) {
          ++rep.instances;
          if (!is_indecomposable(subact_as_act(A, C))) {
            v_violation = true;
            break;
          }
        }
        if (v_violation) break;
      }
      if (!v_violation != lr)
        return clause_mismatch(r, ctx, "(v) subacts of indecomposable acts",
                               !v_violation, lr);

      std::vector<FiniteAct> pool_vi = ctx.acts;
      for (const FiniteAct& X : cof) pool_vi.push_back(X);
      bool vi_violation = false, vii_violation = false;
      json vi_detail, vii_detail;
      for (const FiniteAct& A : pool_vi) {
        if (!is_indecomposable(A)) continue;
        if (!ctx.injective(A)) continue;
        ++rep.instances;
        if (static_cast<int>(zeros(A).size()) != 1 && !vii_violation) {
          vii_violation = true;
          vii_detail = {{"act", act_json(A)},
                        {"zero_count", zeros(A).size()}};
        }
        if (!vi_violation) {
          for (const std::vector<Idx>& C : subact_sets(A, ctx.lim.subacts)) {
            if (!is_indecomposable(subact_as_act(A, C))) {
              vi_violation = true;
              vi_detail = {{"act", act_json(A)},
                           {"subact", act_json(subact_as_act(A, C))}};
              break;
            }
          }
        }
      }
      if (!vi_violation != lr)
        return clause_mismatch(
            r, ctx, "(vi) subacts of indecomposable injective acts",
            !vi_violation, lr, vi_detail);
      if (!vii_violation != lr)
        return clause_mismatch(
            r, ctx, "(vii) indecomposable injective acts have one zero",
            !vii_violation, lr, vii_detail);
    }
  });
}

void check_P5(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    const bool v_exact = !ctx.lr || !left_zeros(*ctx.S).empty();

    std::vector<FiniteAct> cof;
    for (int k = 2; k <= ctx.b.alphabet; ++k) {
      try {
        cof.push_back(cofree_act(ctx.S, k, ctx.lim.cofree_guard));
      } catch (const SizeGuardError&) {
        ++rep.skipped;
      }
    }

    // (i) every inc-injective act is InD/PInD-injective; (ii) every
    // inc-injective act is injective. Whole-clause booleans; the regular act
    // and its zero adjunction join the pool since they witness the failing
    // direction.
    {
      std::vector<FiniteAct> pool = ctx.acts;
      pool.push_back(regular_act(ctx.S));
      pool.push_back(adjoin_zero(regular_act(ctx.S)));
      bool c1 = true, c2 = true;
      json detail1, detail2;
      for (const FiniteAct& Q : pool) {
        if (!ctx.inc(Q)) continue;
        ++rep.instances;
        auto ind = ctx.ind(Q);
        if (!ind)
          ++rep.skipped;
        else if (c1 && !*ind) {
          c1 = false;
          detail1 = act_json(Q);
        }
        if (c2 && !ctx.injective(Q)) {
          c2 = false;
          detail2 = act_json(Q);
        }
      }
      if (c1 != v_exact)
        return clause_mismatch(r, ctx,
                               "(i) inc-injective acts are InD-injective", c1,
                               v_exact, detail1);
      if (c2 != v_exact)
        return clause_mismatch(r, ctx, "(ii) inc-injective acts are injective",
                               c2, v_exact, detail2);
    }

    // (iii) injective envelopes of indecomposable acts stay indecomposable.
    {
      bool violation = false;
      json detail;
      for (const FiniteAct& A : ctx.acts) {
        if (!is_indecomposable(A)) continue;
        try {
          auto [E, into] = injective_envelope(A, ctx.lim);
          ++rep.instances;
          if (!is_indecomposable(E)) {
            violation = true;
            detail = {{"act", act_json(A)}, {"envelope", act_json(E)}};
            break;
          }
        } catch (const SizeGuardError&) {
          ++rep.skipped;
        }
      }
      if (violation == v_exact)
        return clause_mismatch(r, ctx,
                               "(iii) envelopes of indecomposable acts",
                               !violation, v_exact, detail);
    }

    // (iv) indecomposable injective = injective with one zero, or every
    // injective act is indecomposable.
    {
      std::vector<FiniteAct> pool = ctx.acts;
      for (const FiniteAct& X : cof) pool.push_back(X);
      pool.push_back(adjoin_zero(regular_act(ctx.S)));
      bool classes_equal = true, all_ind = true;
      json detail;
      for (const FiniteAct& Q : pool) {
        if (!ctx.injective(Q)) continue;
        ++rep.instances;
        bool ind_q = is_indecomposable(Q);
        bool one_zero = static_cast<int>(zeros(Q).size()) == 1;
        if (ind_q != one_zero && classes_equal) {
          classes_equal = false;
          detail = {{"act", act_json(Q)},
                    {"indecomposable", ind_q},
                    {"zero_count", zeros(Q).size()}};
        }
        all_ind = all_ind && ind_q;
      }
      bool iv = classes_equal || all_ind;
      if (iv != v_exact)
        return clause_mismatch(
            r, ctx, "(iv) indecomposable injective acts vs one-zero acts", iv,
            v_exact, detail);
    }

    // (vi)/(vii) components of injective acts are injective/InD-injective.
    {
      std::vector<FiniteAct> pool = ctx.acts;
      for (const FiniteAct& X : cof) pool.push_back(X);
      pool.push_back(adjoin_zero(regular_act(ctx.S)));
      bool vi_violation = false, vii_violation = false;
      json detail_vi, detail_vii;
      for (const FiniteAct& Q : pool) {
        if (!ctx.injective(Q)) continue;
        for (const FiniteAct& K : component_acts(Q)) {
          ++rep.instances;
          if (!vi_violation && !ctx.injective(K)) {
            vi_violation = true;
            detail_vi = {{"act", act_json(Q)}, {"component", act_json(K)}};
          }
          auto indK = ctx.ind(K);
          if (!indK)
            ++rep.skipped;
          else if (!vii_violation && !*indK) {
            vii_violation = true;
            detail_vii = {{"act", act_json(Q)}, {"component", act_json(K)}};
          }
        }
      }
      if (!vi_violation != v_exact)
        return clause_mismatch(r, ctx,
                               "(vi) components of injective acts injective",
                               !vi_violation, v_exact, detail_vi);
      if (!vii_violation != v_exact)
        return clause_mismatch(
            r, ctx, "(vii) components of injective acts InD-injective",
            !vii_violation, v_exact, detail_vii);
    }
  });
}

void check_A1(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    bool lhs = true, all_inc = true, all_ind_inj = true;
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      bool q_inc = ctx.inc(Q);
      all_inc = all_inc && q_inc;
      if (is_indecomposable(Q)) {
        lhs = lhs && q_inc;
        all_ind_inj = all_ind_inj && ctx.injective(Q);
      }
    }
    bool rhs = all_inc || all_ind_inj;
    if (lhs != rhs)
      return clause_mismatch(
          r, ctx, "indecomposable acts inc-injective vs the two alternatives",
          lhs, rhs);
  });
}

void check_T2(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    bool all_inc = true;
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      all_inc = all_inc && ctx.inc(Q);
      if (!all_inc) break;
    }
    bool computable = is_regular(*ctx.S) && is_principal_right_ideal_monoid(*ctx.S);
    if (all_inc && !computable) {
      json w = m_witness(ctx);
      w["all_acts_inc_injective_within_bounds"] = all_inc;
      w["regular_and_principal"] = computable;
      w["detail"] =
          "every act within bounds is inc-injective but the computable part "
          "of the characterization fails";
      return fail(rep, std::move(w));
    }
  });
  r.note =
      "special-idempotent condition is not evaluated; only the regular + "
      "principal-right-ideal part is checked";
}

void check_R2(const Bounds& b, const HarnessEnv& env, Report& r) {
  long long strict_witnesses = 0;
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    std::vector<FiniteAct> pool = ctx.acts;
    for (int k = 2; k <= ctx.b.alphabet; ++k) {
      try {
        pool.push_back(cofree_act(ctx.S, k, ctx.lim.cofree_guard));
      } catch (const SizeGuardError&) {
        ++rep.skipped;
      }
    }
    for (const FiniteAct& Q : pool) {
      if (!ctx.injective(Q)) continue;
      for (const FiniteAct& K : component_acts(Q)) {
        ++rep.instances;
        if (!ctx.inc(K)) {
          json w = m_witness(ctx);
          w["act"] = act_json(Q);
          w["component"] = act_json(K);
          w["detail"] = "component of an injective act not inc-injective";
          return fail(rep, std::move(w));
        }
      }
    }
    for (const FiniteAct& Q : ctx.acts)
      if (ctx.inc(Q) && !ctx.injective(Q)) ++strict_witnesses;
  });
  if (r.status == ClaimStatus::counterexample) return;

  // Monogenic probe: split small two-letter cofree acts over monogenic
  // monoids and record the components lacking zeros; each component of the
  // (injective) cofree act must itself be inc-injective.
  long long zeroless = 0;
  for (auto [index, period] :
       std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}}) {
    MonoidPtr M = fixtures::monogenic(index, period);
    FiniteAct X = cofree_act(M, 2);
    for (const FiniteAct& K : component_acts(X)) {
      ++r.instances;
      if (zeros(K).empty()) ++zeroless;
      if (!is_inc_injective(K, env.oracle()).holds()) {
        json w = {{"monoid", monoid_json(*M)},
                  {"component", act_json(K)},
                  {"detail", "cofree component not inc-injective"}};
        return fail(r, std::move(w));
      }
    }
  }
  r.note = "strict inc-injective non-injective witnesses within bounds: " +
           std::to_string(strict_witnesses) +
           "; zero-free cofree components over monogenic fixtures: " +
           std::to_string(zeroless);
}

void check_LC(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& C : ctx.acts) {
      ++rep.instances;
      auto v1 = ctx.ind(C);
      if (!v1) {
        ++rep.skipped;
        continue;
      }

      // (iii) with the actual envelope.
      std::optional<bool> v3;
      try {
        auto [E, into] = injective_envelope(C, ctx.lim);
        bool ok = true;
        for (const std::vector<Idx>& D : subact_sets(C, ctx.lim.subacts)) {
          if (!is_indecomposable(subact_as_act(C, D))) continue;
          std::vector<std::pair<Idx, Idx>> pairs;
          for (Idx d : D) pairs.emplace_back(into.map[d], d);
          std::sort(pairs.begin(), pairs.end());
          std::vector<Idx> sub, partial;
          for (auto& [e, d] : pairs) {
            sub.push_back(e);
            partial.push_back(d);
          }
          if (!ctx.env.oracle().extendable(
                  make_extension_problem(E, sub, C, partial))) {
            ok = false;
            break;
          }
        }
        v3 = ok;
      } catch (const SizeGuardError&) {
        ++rep.skipped;
      }
      if (v3 && *v1 != *v3) {
        json w = m_witness(ctx);
        w["act"] = act_json(C);
        w["extension_criterion"] = *v1;
        w["envelope_criterion"] = *v3;
        return fail(rep, std::move(w));
      }

      // (ii) over every ambient act within the codomain bound.
      std::optional<json> violation;
      for (const FiniteAct& B : ctx.codomain) {
        for (const ActHom& e : monomorphisms(C, B)) {
          for (const std::vector<Idx>& D : subact_sets(C, ctx.lim.subacts)) {
            if (!is_indecomposable(subact_as_act(C, D))) continue;
            std::vector<std::pair<Idx, Idx>> pairs;
            for (Idx d : D) pairs.emplace_back(e.map[d], d);
            std::sort(pairs.begin(), pairs.end());
            std::vector<Idx> sub, partial;
            for (auto& [x, d] : pairs) {
              sub.push_back(x);
              partial.push_back(d);
            }
            if (!ctx.env.oracle().extendable(
                    make_extension_problem(B, sub, C, partial))) {
              violation = json{{"ambient", act_json(B)},
                               {"generators", json::array()}};
              for (Idx d : D) (*violation)["generators"].push_back(C.label(d));
              break;
            }
          }
          if (violation) break;
        }
        if (violation) break;
      }
      if (*v1 && violation) {
        json w = m_witness(ctx);
        w["act"] = act_json(C);
        w["detail"] = "criterion holds but an ambient-act instance fails";
        w["violation"] = *violation;
        return fail(rep, std::move(w));
      }
      if (!*v1 && !violation) ++rep.skipped;  // witness lies beyond the bound
    }
  });
}

void check_IP(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& Q : ctx.acts) {
      if (!is_indecomposable(Q)) continue;
      ++rep.instances;
      auto ind = ctx.ind(Q);
      if (!ind) {
        ++rep.skipped;
        continue;
      }
      if (*ind && !ctx.injective(Q)) {
        json w = m_witness(ctx);
        w["act"] = act_json(Q);
        w["detail"] = "indecomposable and PInD/InD-injective but not injective";
        return fail(rep, std::move(w));
      }
    }
  });
}

void check_BI(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& C : ctx.acts) {
      ++rep.instances;
      auto lhs = ctx.ind(C);
      if (!lhs) {
        ++rep.skipped;
        continue;
      }
      bool has_zero = !zeros(C).empty();
      std::optional<ExtensionProblem> hom_violation, mono_violation;
      for (const FiniteAct& B : ctx.codomain) {
        if (!is_indecomposable(B)) continue;
        for (const std::vector<Idx>& A : subact_sets(B, ctx.lim.subacts)) {
          FiniteAct Aact = subact_as_act(B, A);
          if (!is_indecomposable(Aact)) continue;
          for_each_hom(Aact, C, false, [&](const std::vector<Idx>& f) {
            auto p = make_extension_problem(B, A, C, f);
            if (!ctx.env.oracle().extendable(p)) {
              bool mono = static_cast<int>(image_elems(f).size()) ==
                          static_cast<int>(f.size());
              if (!hom_violation) hom_violation = p;
              if (mono && !mono_violation) mono_violation = std::move(p);
              return !(hom_violation && mono_violation);
            }
            return true;
          });
          if (hom_violation && mono_violation) break;
        }
        if (hom_violation && mono_violation) break;
      }
      bool rhs_ind = has_zero && !hom_violation;
      bool rhs_pind = has_zero && !mono_violation;
      if (*lhs && (!rhs_ind || !rhs_pind)) {
        json w = m_witness(ctx);
        w["act"] = act_json(C);
        w["has_zero"] = has_zero;
        if (hom_violation) w["problem"] = problem_json(*hom_violation);
        w["detail"] =
            "criterion holds but the zero-and-indecomposable-diagram "
            "condition fails";
        return fail(rep, std::move(w));
      }
      if (!*lhs && rhs_ind) ++rep.skipped;  // witness beyond codomain bound
    }
  });
}

void check_PC2(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    // (i) retracts
    for (const FiniteAct& Q : ctx.acts) {
      auto indQ = ctx.ind(Q);
      if (!indQ) {
        ++rep.skipped;
        continue;
      }
      if (!*indQ) continue;
      for (const std::vector<Idx>& R : subact_sets(Q, ctx.lim.subacts)) {
        if (!is_retract(Q, R)) continue;
        ++rep.instances;
        auto indR = ctx.ind(subact_as_act(Q, R));
        if (!indR) {
          ++rep.skipped;
          continue;
        }
        if (!*indR) {
          json w = m_witness(ctx);
          w["act"] = act_json(Q);
          w["retract"] = act_json(subact_as_act(Q, R));
          w["detail"] = "retract of an InD-injective act not InD-injective";
          return fail(rep, std::move(w));
        }
      }
    }
    // (ii) binary products, both directions.
    for (size_t i = 0; i < ctx.acts.size(); ++i)
      for (size_t j = i; j < ctx.acts.size(); ++j) {
        const FiniteAct& A = ctx.acts[i];
        const FiniteAct& B = ctx.acts[j];
        if (A.size() * B.size() > std::max(ctx.b.max_act, 4)) continue;
        ++rep.instances;
        auto pa = ctx.ind(A), pb = ctx.ind(B);
        FiniteAct P = product({A, B}, ctx.lim.product_guard).act;
        auto pp = ctx.ind(P);
        if (!pa || !pb || !pp) {
          ++rep.skipped;
          continue;
        }
        if (*pp != (*pa && *pb)) {
          json w = m_witness(ctx);
          w["left"] = act_json(A);
          w["right"] = act_json(B);
          w["product_ind"] = *pp;
          w["factors_ind"] = *pa && *pb;
          return fail(rep, std::move(w));
        }
      }
    // (iii) binary coproducts, one direction.
    for (size_t i = 0; i < ctx.acts.size(); ++i)
      for (size_t j = i; j < ctx.acts.size(); ++j) {
        const FiniteAct& A = ctx.acts[i];
        const FiniteAct& B = ctx.acts[j];
        if (A.size() + B.size() > std::max(ctx.b.max_act, 2)) continue;
        auto pa = ctx.ind(A), pb = ctx.ind(B);
        if (!pa || !pb) {
          ++rep.skipped;
          continue;
        }
        if (!*pa || !*pb) continue;
        ++rep.instances;
        FiniteAct W = coproduct_act({A, B});
        auto pw = ctx.ind(W);
        if (!pw) {
          ++rep.skipped;
          continue;
        }
        if (!*pw) {
          json w = m_witness(ctx);
          w["left"] = act_json(A);
          w["right"] = act_json(B);
          w["detail"] = "coproduct of InD-injective acts not InD-injective";
          return fail(rep, std::move(w));
        }
      }
  });
}

void check_CT(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    const bool rhs = !ctx.lr || !left_zeros(*ctx.S).empty();
    std::vector<FiniteAct> pool = ctx.acts;
    pool.push_back(adjoin_zero(regular_act(ctx.S)));
    try {
      FiniteAct SS = cofree_act(ctx.S, ctx.S->labels(), ctx.lim.cofree_guard);
      pool.push_back(SS);
      // The component of the identity function, with a zero adjoined, is the
      // canonical witness over left reversible monoids without left zeros.
      int id_enc = 0;
      for (int t = 0; t < ctx.S->size(); ++t)
        id_enc = id_enc * ctx.S->size() + t;
      Decomposition d = components(SS);
      std::vector<Idx> K;
      for (Idx x = 0; x < SS.size(); ++x)
        if (d.component_of[x] == d.component_of[id_enc]) K.push_back(x);
      pool.push_back(adjoin_zero(subact_as_act(SS, K)));
    } catch (const SizeGuardError&) {
      ++rep.skipped;
    }

    std::optional<json> violation;
    for (const FiniteAct& Q : pool) {
      if (components(Q).component_count < 2) continue;
      auto indQ = ctx.ind(Q);
      if (!indQ) {
        ++rep.skipped;
        continue;
      }
      if (!*indQ) continue;
      for (const FiniteAct& K : component_acts(Q)) {
        ++rep.instances;
        auto indK = ctx.ind(K);
        if (!indK) {
          ++rep.skipped;
          continue;
        }
        if (!*indK) {
          violation = json{{"coproduct", act_json(Q)}, {"component", act_json(K)}};
          break;
        }
      }
      if (violation) break;
    }
    if (!violation != rhs)
      return clause_mismatch(
          r, ctx, "InD-injectivity transfers from coproducts to components",
          !violation, rhs, violation ? *violation : json::object());
  });
}

void check_QI(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    for (const FiniteAct& A : ctx.acts) {
      std::optional<std::pair<FiniteAct, ActHom>> envl;
      try {
        envl = injective_envelope(A, ctx.lim);
      } catch (const SizeGuardError&) {
        ++rep.skipped;
        continue;
      }
      ++rep.instances;
      const FiniteAct& E = envl->first;
      const ActHom& into = envl->second;
      Coproduct W = coproduct({A, E});

      // Hypothesis: the coproduct is quasi-injective.
      auto quasiW = ctx.quasi(W.act);
      if (!quasiW) {
        ++rep.skipped;
        continue;
      }
      if (!*quasiW) continue;
      if (!ctx.injective(A)) {
        json w = m_witness(ctx);
        w["act"] = act_json(A);
        w["envelope"] = act_json(E);
        w["coproduct_quasi_injective"] = true;
        w["act_injective"] = false;
        w["act_zeros"] = zeros(A).size();
        w["detail"] =
            "the coproduct of the act with its envelope is quasi-injective "
            "but the act is not injective; the collapse map of the stated "
            "construction needs a zero in the act and none exists";
        return fail(rep, std::move(w));
      }

      // Replay the construction on the instances where the conclusion holds:
      // extend the crossing monomorphism (the copy of A inside the envelope
      // half onto the direct half), collapse onto A, and verify the
      // composite retracts the envelope onto A.
      std::vector<std::pair<Idx, Idx>> pairs;
      for (Idx a = 0; a < A.size(); ++a)
        pairs.emplace_back(W.injections[1][into.map[a]], W.injections[0][a]);
      std::sort(pairs.begin(), pairs.end());
      std::vector<Idx> sub, partial;
      for (auto& [x, y] : pairs) {
        sub.push_back(x);
        partial.push_back(y);
      }
      auto crossing = make_extension_problem(W.act, sub, W.act, partial);
      if (!ctx.env.oracle().extendable(crossing)) {
        json w = m_witness(ctx);
        w["act"] = act_json(A);
        w["detail"] = "quasi-injective coproduct but the crossing "
                      "monomorphism does not extend";
        return fail(rep, std::move(w));
      }
      std::optional<ActHom> f = extend_hom(crossing);
      if (!f) {
        json w = m_witness(ctx);
        w["act"] = act_json(A);
        w["detail"] = "oracle reports the crossing monomorphism extendable "
                      "but no extension exists";
        return fail(rep, std::move(w));
      }
      std::vector<Idx> zs = zeros(A);
      std::vector<Idx> p(W.act.size(), zs[0]);
      for (Idx a = 0; a < A.size(); ++a) p[W.injections[0][a]] = a;
      std::vector<Idx> retraction(E.size());
      for (Idx e = 0; e < E.size(); ++e)
        retraction[e] = p[f->map[W.injections[1][e]]];
      bool ok = is_equivariant(E, A, retraction);
      for (Idx a = 0; a < A.size() && ok; ++a)
        ok = retraction[into.map[a]] == a;
      if (!ok) {
        json w = m_witness(ctx);
        w["act"] = act_json(A);
        w["detail"] = "composed map is not a retraction onto the act";
        return fail(rep, std::move(w));
      }
    }
  });
}

void check_TQ(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    const bool lr = ctx.lr;
    std::optional<json> inj_violation;
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      auto indQ = ctx.ind(Q);
      if (!indQ) {
        ++rep.skipped;
        continue;
      }
      if (*indQ && !ctx.injective(Q)) {
        inj_violation = json{{"act", act_json(Q)}};
        break;
      }
    }
    if (!inj_violation != lr)
      return clause_mismatch(r, ctx, "(i) InD-injective acts are injective",
                             !inj_violation, lr,
                             inj_violation ? *inj_violation : json());

    std::vector<FiniteAct> pool = ctx.acts;
    try {
      FiniteAct t2 = coproduct_act({zero_act(ctx.S), zero_act(ctx.S)});
      auto [E, into] = injective_envelope(t2, ctx.lim);
      pool.push_back(coproduct_act({t2, E}));
    } catch (const SizeGuardError&) {
      ++rep.skipped;
    }
    std::optional<json> quasi_violation;
    for (const FiniteAct& Q : pool) {
      ++rep.instances;
      auto indQ = ctx.ind(Q);
      auto quasiQ = ctx.quasi(Q);
      if (!indQ || !quasiQ) {
        ++rep.skipped;
        continue;
      }
      if (*indQ && !*quasiQ) {
        quasi_violation = json{{"act", act_json(Q)}};
        break;
      }
    }
    if (!quasi_violation != lr)
      return clause_mismatch(r, ctx,
                             "(ii) InD-injective acts are quasi-injective",
                             !quasi_violation, lr,
                             quasi_violation ? *quasi_violation : json());
  });
}

void check_TI(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    FiniteAct reg = regular_act(ctx.S);
    struct IdealInfo {
      FiniteAct act;
      bool indecomposable;
      bool principal;
    };
    std::vector<IdealInfo> ideals;
    for (const RightIdeal& I : all_right_ideals(ctx.S)) {
      FiniteAct ideal_act = subact_as_act(reg, I.elems);
      bool principal = false;
      for (Idx a = 0; a < ctx.S->size() && !principal; ++a)
        principal = principal_right_ideal(ctx.S, a).elems == I.elems;
      bool indec = is_indecomposable(ideal_act);
      ideals.push_back(IdealInfo{std::move(ideal_act), indec, principal});
    }
    bool c1 = true, c2 = true, c5 = true, all_indec_principal = true;
    json first_acts = json::array();
    for (const IdealInfo& info : ideals) {
      ++rep.instances;
      auto ind = ctx.ind(info.act);
      if (!ind) {
        ++rep.skipped;
        continue;
      }
      c1 = c1 && *ind;
      if (info.indecomposable) {
        c2 = c2 && *ind;
        c5 = c5 && ctx.injective(info.act);
        all_indec_principal = all_indec_principal && info.principal;
      }
    }
    bool c6 = is_regular(*ctx.S) && ctx.injective(reg) && all_indec_principal;
    if (!(c1 == c2 && c2 == c5 && c5 == c6)) {
      json w = m_witness(ctx);
      w["clauses"] = {{"all_ideals_ind", c1},
                      {"indecomposable_ideals_ind", c2},
                      {"indecomposable_ideals_injective", c5},
                      {"regular_self_injective_principal", c6}};
      return fail(rep, std::move(w));
    }
  });
  r.note = "InD and PInD clauses share the extension criterion";
}

void check_TC(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    bool c1 = true, c2 = true, c5 = true, c6 = true;
    json disagreement;
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      auto ind = ctx.ind(Q);
      if (!ind) {
        ++rep.skipped;
        continue;
      }
      bool inj = ctx.injective(Q);
      c1 = c1 && *ind;
      c6 = c6 && inj;
      if (is_indecomposable(Q)) {
        c2 = c2 && *ind;
        c5 = c5 && inj;
        if (*ind != inj && disagreement.is_null())
          disagreement = act_json(Q);
      }
    }
    bool right_zero = !right_zeros(*ctx.S).empty();
    bool idempotent_ideals = true;
    for (const RightIdeal& I : all_right_ideals(ctx.S)) {
      bool generated = false;
      for (Idx e : idempotents(*ctx.S))
        if (principal_right_ideal(ctx.S, e).elems == I.elems) {
          generated = true;
          break;
        }
      idempotent_ideals = idempotent_ideals && generated;
    }
    bool c7_computable = right_zero && idempotent_ideals;
    if (!(c1 == c2 && c2 == c5 && c5 == c6)) {
      json w = m_witness(ctx);
      w["clauses"] = {{"all_acts_ind", c1},
                      {"indecomposable_acts_ind", c2},
                      {"indecomposable_acts_injective", c5},
                      {"all_acts_injective", c6}};
      w["disagreeing_act"] = disagreement;
      return fail(rep, std::move(w));
    }
    if (c6 && !c7_computable) {
      json w = m_witness(ctx);
      w["detail"] =
          "absolutely injective within bounds, but no right zero or some "
          "right ideal is not generated by an idempotent";
      return fail(rep, std::move(w));
    }
  });
  r.note =
      "clause (vii) checked only for its computable part (right zero, "
      "idempotent-generated right ideals); the special-idempotent "
      "refinement is not evaluated";
}

void check_RM(const Bounds& b, const HarnessEnv& env, Report& r) {
  per_monoid(b, env, r, [&](Ctx& ctx, Report& rep) {
    bool lhs = true, rhs = true;
    json lhs_witness, rhs_witness;
    for (const FiniteAct& Q : ctx.acts) {
      ++rep.instances;
      bool inj = ctx.injective(Q);
      if (!inj && rhs) {
        rhs = false;
        rhs_witness = act_json(Q);
      }
      if (is_indecomposable(Q)) {
        auto ind = ctx.ind(Q);
        if (!ind) {
          ++rep.skipped;
          continue;
        }
        if (!*ind && lhs) {
          lhs = false;
          lhs_witness = act_json(Q);
        }
      }
    }
    if (lhs != rhs) {
      json w = m_witness(ctx);
      w["indecomposable_acts_pind"] = lhs;
      w["all_acts_injective"] = rhs;
      w["witness"] = lhs ? rhs_witness : lhs_witness;
      return fail(rep, std::move(w));
    }
  });
}

Claim claim(std::string id, std::string statement, bool partial,
            void (*checker)(const Bounds&, const HarnessEnv&, Report&)) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.partial_by_design = partial;
  c.checker = checker;
  return c;
}

}  // namespace

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;
  reg.push_back(claim("R1",
                      "Action-edge components give the unique decomposition "
                      "into indecomposable subacts, and homomorphic images of "
                      "indecomposable acts are indecomposable",
                      false, check_R1));
  reg.push_back(claim("P6",
                      "Over a left reversible monoid two elements lie in the "
                      "same component iff they are one-step joined",
                      false, check_P6));
  reg.push_back(claim("P7",
                      "All subacts of indecomposable acts are indecomposable "
                      "iff the monoid is left reversible",
                      false, check_P7));
  reg.push_back(claim("P8",
                      "Cofree acts on two or more letters are decomposable "
                      "iff the monoid is left reversible",
                      false, check_P8));
  reg.push_back(claim("L2",
                      "In a coproduct with a zero, either side plus a zero is "
                      "a retract via the collapse-to-zero map",
                      false, check_L2));
  reg.push_back(claim("L3",
                      "If a coproduct is injective, either side with a zero "
                      "adjoined is injective",
                      false, check_L3));
  reg.push_back(claim("T1",
                      "An act is inc-injective iff its zero adjunction is "
                      "injective",
                      false, check_T1));
  reg.push_back(claim("C4", "Inc-injective acts are weakly injective", false,
                      check_C4));
  reg.push_back(claim("C5",
                      "Injectivity relative to indecomposable codomains "
                      "equals the cyclic-codomain criterion",
                      false, check_C5));
  reg.push_back(claim("PC1",
                      "Retracts of inc-injective acts are inc-injective; all "
                      "coproducts of inc-injective acts are inc-injective iff "
                      "the monoid is left reversible",
                      false, check_PC1));
  reg.push_back(claim("P4",
                      "Seven equivalent characterizations of left "
                      "reversibility via coproducts of injective acts",
                      false, check_P4));
  reg.push_back(claim("P5",
                      "Seven equivalent characterizations of 'not left "
                      "reversible or has a left zero'",
                      false, check_P5));
  reg.push_back(claim("A1",
                      "All indecomposable acts are inc-injective iff all acts "
                      "are, or all indecomposable acts are injective",
                      false, check_A1));
  reg.push_back(claim("T2",
                      "All acts inc-injective iff the monoid is a regular "
                      "principal-right-ideal monoid with special idempotents",
                      true, check_T2));
  reg.push_back(claim("R2",
                      "Indecomposable components of injective acts are "
                      "inc-injective; with the monogenic cofree probe",
                      false, check_R2));
  reg.push_back(claim("LC",
                      "The InD/PInD extension criterion agrees with the "
                      "envelope criterion and with the ambient-act criterion",
                      false, check_LC));
  reg.push_back(claim("IP",
                      "Indecomposable PInD/InD-injective acts are injective",
                      false, check_IP));
  reg.push_back(claim("BI",
                      "InD/PInD-injectivity equals having a zero plus "
                      "extendability inside indecomposable ambients",
                      false, check_BI));
  reg.push_back(claim("PC2",
                      "Retracts, finite products (both directions) and "
                      "coproducts (one direction) preserve InD/PInD-injectivity",
                      false, check_PC2));
  reg.push_back(claim("CT",
                      "InD/PInD-injectivity transfers from coproducts to "
                      "components iff not left reversible or a left zero "
                      "exists",
                      false, check_CT));
  reg.push_back(claim("QI",
                      "If the coproduct of an act with its envelope is quasi "
                      "or pseudo injective, the act is injective",
                      false, check_QI));
  reg.push_back(claim("TQ",
                      "All InD-injective acts injective iff all are "
                      "quasi-injective iff left reversible",
                      false, check_TQ));
  reg.push_back(claim("TI",
                      "Homological classification of monoids whose right "
                      "ideals are InD/PInD-injective",
                      false, check_TI));
  reg.push_back(claim("TC",
                      "Characterizations of monoids over which every act is "
                      "InD/PInD-injective (right absolute injectivity)",
                      true, check_TC));
  reg.push_back(claim("RM",
                      "Absolute injectivity reduces to PInD-injectivity of "
                      "indecomposable acts",
                      false, check_RM));
  return reg;
}

}  // namespace claims
}  // namespace actlab
