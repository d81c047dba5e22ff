#include "actlab/hom.hpp"

#include <algorithm>

#include "actlab/errors.hpp"

namespace actlab {

ExtensionProblem make_extension_problem(FiniteAct ambient, std::vector<Idx> sub,
                                        FiniteAct target,
                                        std::vector<Idx> partial) {
  if (!ambient.over_same_monoid(target))
    throw ValidationError("extension problem: acts over different monoids");
  if (sub.empty() || sub.size() != partial.size())
    throw ValidationError("extension problem: bad subset or partial map size");
  if (!std::is_sorted(sub.begin(), sub.end()))
    throw ValidationError("extension problem: subset must be sorted");
  const int n = ambient.monoid()->size();
  std::vector<Idx> pos(ambient.size(), -1);
  for (size_t i = 0; i < sub.size(); ++i) {
    if (sub[i] < 0 || sub[i] >= ambient.size())
      throw ValidationError("extension problem: subset element out of range");
    if (partial[i] < 0 || partial[i] >= target.size())
      throw ValidationError("extension problem: image out of range");
    pos[sub[i]] = static_cast<Idx>(i);
  }
  for (size_t i = 0; i < sub.size(); ++i)
    for (Idx s = 0; s < n; ++s) {
      Idx y = ambient.act(sub[i], s);
      if (pos[y] < 0)
        throw ValidationError("extension problem: subset not closed");
      if (partial[pos[y]] != target.act(partial[i], s))
        throw ValidationError("extension problem: partial map not equivariant");
    }
  return ExtensionProblem{std::move(ambient), std::move(sub), std::move(target),
                          std::move(partial)};
}

std::vector<Idx> image_elems(const std::vector<Idx>& map) {
  std::vector<Idx> out = map;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Backtracking over values of "decision" elements of the source; every
// assignment propagates along the action, so non-decision elements are
// forced. Decision order: components by (size, least element), and inside a
// component a greedy minimal generating set first.
class HomSearcher {
 public:
  HomSearcher(const FiniteAct& source, const FiniteAct& target, bool monos_only,
              const SearchLimits& limits)
      : A_(source),
        B_(target),
        mono_(monos_only),
        limits_(limits),
        n_(source.monoid()->size()),
        f_(source.size(), -1),
        used_(monos_only ? target.size() : 0, 0) {
    if (!A_.over_same_monoid(B_))
      throw ValidationError("hom search: acts over different monoids");
    build_plan();
  }

  // Pins f(sub[i]) = partial[i]; false on immediate conflict.
  bool pin(const std::vector<Idx>& sub, const std::vector<Idx>& partial) {
    std::vector<Idx> trail;
    for (size_t i = 0; i < sub.size(); ++i)
      if (!assign(sub[i], partial[i], trail)) return false;
    return true;
  }

  // Enumerates all completions; visitor returns false to stop everything.
  bool enumerate(const std::function<bool(const std::vector<Idx>&)>& visit) {
    return dfs(visit);
  }

  // Finds the first completion of elements within one component, leaving it
  // assigned. Returns false if none exists (component restored untouched).
  bool solve_component(int comp) {
    return component_dfs(comp, 0);
  }

  const std::vector<Idx>& assignment() const { return f_; }
  const std::vector<int>& search_order() const { return comp_order_; }

 private:
  void build_plan() {
    Decomposition d = components(A_);
    comp_of_ = d.component_of;
    std::vector<std::vector<Idx>> elems = d.component_elems();
    std::vector<int> order(elems.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (elems[a].size() != elems[b].size())
        return elems[a].size() < elems[b].size();
      return elems[a][0] < elems[b][0];
    });
    comp_order_ = order;
    plan_.resize(elems.size());
    for (int c : order) {
      // Greedy cover by orbit closures, then prune redundant generators.
      std::vector<Idx> gens;
      std::vector<char> covered(A_.size(), 0);
      for (Idx x : elems[c]) {
        if (covered[x]) continue;
        gens.push_back(x);
        for (Idx y : generated_elems(A_, {x})) covered[y] = 1;
      }
      for (size_t i = gens.size(); i-- > 0;) {
        std::vector<Idx> rest;
        for (size_t j = 0; j < gens.size(); ++j)
          if (j != i) rest.push_back(gens[j]);
        if (rest.empty()) continue;
        auto closure = generated_elems(A_, rest);
        if (std::binary_search(closure.begin(), closure.end(), gens[i]))
          gens.erase(gens.begin() + static_cast<long>(i));
      }
      std::vector<Idx>& p = plan_[c];
      p = gens;
      for (Idx x : elems[c])
        if (std::find(gens.begin(), gens.end(), x) == gens.end())
          p.push_back(x);
    }
  }

  bool assign(Idx x, Idx v, std::vector<Idx>& trail) {
    if (f_[x] >= 0) return f_[x] == v;
    if (++nodes_ > limits_.max_nodes)
      throw SizeGuardError("hom search: node limit exceeded");
    if (mono_) {
      if (used_[v]) return false;
      used_[v] = 1;
    }
    f_[x] = v;
    trail.push_back(x);
    size_t head = trail.size() - 1;
    while (head < trail.size()) {
      Idx y = trail[head++];
      for (Idx s = 0; s < n_; ++s) {
        Idx z = A_.act(y, s);
        Idx w = B_.act(f_[y], s);
        if (f_[z] < 0) {
          if (mono_) {
            if (used_[w]) return false;
            used_[w] = 1;
          }
          f_[z] = w;
          trail.push_back(z);
        } else if (f_[z] != w) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Idx>& trail) {
    for (Idx x : trail) {
      if (mono_) used_[f_[x]] = 0;
      f_[x] = -1;
    }
  }

  std::optional<Idx> next_decision(size_t& comp_pos, size_t& elem_pos) const {
    while (comp_pos < comp_order_.size()) {
      const std::vector<Idx>& p = plan_[comp_order_[comp_pos]];
      while (elem_pos < p.size()) {
        if (f_[p[elem_pos]] < 0) return p[elem_pos];
        ++elem_pos;
      }
      ++comp_pos;
      elem_pos = 0;
    }
    return std::nullopt;
  }

  bool dfs(const std::function<bool(const std::vector<Idx>&)>& visit) {
    size_t comp_pos = 0, elem_pos = 0;
    auto x = next_decision(comp_pos, elem_pos);
    if (!x) return visit(f_);
    for (Idx v = 0; v < B_.size(); ++v) {
      std::vector<Idx> trail;
      bool ok = assign(*x, v, trail);
      if (ok && !dfs(visit)) {
        undo(trail);
        return false;
      }
      undo(trail);
    }
    return true;
  }

  bool component_dfs(int comp, size_t from) {
    const std::vector<Idx>& p = plan_[comp];
    size_t pos = from;
    while (pos < p.size() && f_[p[pos]] >= 0) ++pos;
    if (pos == p.size()) return true;
    for (Idx v = 0; v < B_.size(); ++v) {
      std::vector<Idx> trail;
      bool ok = assign(p[pos], v, trail);
      if (ok && component_dfs(comp, pos + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const FiniteAct& A_;
  const FiniteAct& B_;
  bool mono_;
  SearchLimits limits_;
  int n_;
  std::vector<Idx> f_;
  std::vector<char> used_;
  std::vector<int> comp_of_;
  std::vector<int> comp_order_;          // component ids in search order
  std::vector<std::vector<Idx>> plan_;   // per component id
  long long nodes_ = 0;
};

}  // namespace

void for_each_hom(const FiniteAct& source, const FiniteAct& target,
                  bool monos_only,
                  const std::function<bool(const std::vector<Idx>&)>& visit,
                  const SearchLimits& limits) {
  HomSearcher searcher(source, target, monos_only, limits);
  searcher.enumerate(visit);
}

std::vector<ActHom> homomorphisms(const FiniteAct& source,
                                  const FiniteAct& target,
                                  const SearchLimits& limits) {
  std::vector<ActHom> out;
  for_each_hom(source, target, false, [&](const std::vector<Idx>& f) {
    out.push_back(make_hom(source, target, f));
    return true;
  }, limits);
  return out;
}

std::vector<ActHom> monomorphisms(const FiniteAct& source,
                                  const FiniteAct& target,
                                  const SearchLimits& limits) {
  std::vector<ActHom> out;
  for_each_hom(source, target, true, [&](const std::vector<Idx>& f) {
    out.push_back(make_hom(source, target, f));
    return true;
  }, limits);
  return out;
}

long long count_homomorphisms(const FiniteAct& source, const FiniteAct& target,
                              const SearchLimits& limits) {
  long long count = 0;
  for_each_hom(source, target, false, [&](const std::vector<Idx>&) {
    ++count;
    return true;
  }, limits);
  return count;
}

std::optional<ActHom> extend_hom(const ExtensionProblem& p,
                                 const SearchLimits& limits) {
  HomSearcher searcher(p.ambient, p.target, false, limits);
  if (!searcher.pin(p.sub, p.partial)) return std::nullopt;
  // Ambient components never constrain each other, so solve them one by one.
  for (int comp : searcher.search_order())
    if (!searcher.solve_component(comp)) return std::nullopt;
  return make_hom(p.ambient, p.target, searcher.assignment());
}

std::optional<ActHom> is_retract(const FiniteAct& B,
                                 const std::vector<Idx>& sub_elems,
                                 const SearchLimits& limits) {
  FiniteAct sub = subact_as_act(B, sub_elems);
  std::vector<Idx> partial(sub_elems.size());
  std::iota(partial.begin(), partial.end(), 0);
  auto problem = make_extension_problem(B, sub_elems, sub, partial);
  return extend_hom(problem, limits);
}

bool are_isomorphic(const FiniteAct& A, const FiniteAct& B) {
  if (!A.over_same_monoid(B))
    throw ValidationError("are_isomorphic: acts over different monoids");
  if (A.size() != B.size()) return false;
  if (A.size() <= 9) return canonical_act_table(A) == canonical_act_table(B);
  bool found = false;
  for_each_hom(A, B, true, [&](const std::vector<Idx>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace actlab
