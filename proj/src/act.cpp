#include "actlab/act.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "actlab/errors.hpp"

namespace actlab {

FiniteAct::FiniteAct(MonoidPtr S, std::string name,
                     std::vector<std::string> labels, std::vector<Idx> flat)
    : monoid_(std::move(S)),
      name_(std::move(name)),
      labels_(std::move(labels)),
      table_(std::move(flat)),
      m_(static_cast<int>(labels_.size())),
      n_(monoid_->size()) {}

FiniteAct FiniteAct::validate(MonoidPtr S, std::string name,
                              std::vector<std::string> labels,
                              const std::vector<std::vector<Idx>>& table) {
  const int m = static_cast<int>(labels.size());
  const int n = S->size();
  if (m < 1) throw ValidationError("act '" + name + "': carrier is empty");
  if (static_cast<int>(table.size()) != m)
    throw ValidationError("act '" + name + "': table has " +
                          std::to_string(table.size()) + " rows, expected " +
                          std::to_string(m));
  std::vector<Idx> flat(static_cast<size_t>(m) * n);
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw ValidationError("act '" + name + "': row " + std::to_string(x) +
                            " has " + std::to_string(table[x].size()) +
                            " entries, expected " + std::to_string(n));
    for (int s = 0; s < n; ++s) {
      Idx v = table[x][s];
      if (v < 0 || v >= m)
        throw ValidationError("act '" + name + "': entry (" + std::to_string(x) +
                              ", " + std::to_string(s) + ") = " +
                              std::to_string(v) + " out of range");
      flat[static_cast<size_t>(x) * n + s] = v;
    }
  }
  auto at = [&](Idx x, Idx s) { return flat[static_cast<size_t>(x) * n + s]; };
  for (int x = 0; x < m; ++x)
    if (at(x, 0) != x)
      throw ValidationError("act '" + name + "': not unitary at '" + labels[x] +
                            "'");
  for (int x = 0; x < m; ++x)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (at(x, S->mul(s, t)) != at(at(x, s), t))
          throw ValidationError("act '" + name + "': not compatible at ('" +
                                labels[x] + "', '" + S->label(s) + "', '" +
                                S->label(t) + "')");
  return FiniteAct(std::move(S), std::move(name), std::move(labels),
                   std::move(flat));
}

bool is_equivariant(const FiniteAct& source, const FiniteAct& target,
                    const std::vector<Idx>& map) {
  if (!source.over_same_monoid(target)) return false;
  if (static_cast<int>(map.size()) != source.size()) return false;
  const int n = source.monoid()->size();
  for (Idx x = 0; x < source.size(); ++x) {
    if (map[x] < 0 || map[x] >= target.size()) return false;
    for (Idx s = 0; s < n; ++s)
      if (map[source.act(x, s)] != target.act(map[x], s)) return false;
  }
  return true;
}

ActHom make_hom(FiniteAct source, FiniteAct target, std::vector<Idx> map) {
  if (!source.over_same_monoid(target))
    throw ValidationError("hom: acts live over different monoids");
  if (!is_equivariant(source, target, map))
    throw ValidationError("hom from '" + source.name() + "' to '" +
                          target.name() + "' is not equivariant");
  return ActHom{std::move(source), std::move(target), std::move(map)};
}

FiniteAct regular_act(const MonoidPtr& S) {
  const int n = S->size();
  std::vector<std::vector<Idx>> table(n, std::vector<Idx>(n));
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < n; ++s) table[x][s] = S->mul(x, s);
  return FiniteAct::validate(S, S->name() + "_reg", S->labels(), table);
}

FiniteAct zero_act(const MonoidPtr& S) {
  return FiniteAct::validate(S, "theta",
                             {std::string("\xce\xb8")},  // θ
                             {std::vector<Idx>(S->size(), 0)});
}

FiniteAct cyclic_act(const MonoidPtr& S, const RightCongruence& rho) {
  if (!rho.owner->same_structure(*S))
    throw ValidationError("cyclic_act: congruence over a different monoid");
  auto blocks = blocks_of(rho.block_of);
  const int m = static_cast<int>(blocks.size());
  const int n = S->size();
  std::vector<std::string> labels(m);
  for (int b = 0; b < m; ++b) {
    std::string l = "[";
    for (size_t i = 0; i < blocks[b].size(); ++i)
      l += (i ? "," : "") + S->label(blocks[b][i]);
    labels[b] = l + "]";
  }
  std::vector<std::vector<Idx>> table(m, std::vector<Idx>(n));
  for (int b = 0; b < m; ++b)
    for (int s = 0; s < n; ++s)
      table[b][s] = rho.block_of[S->mul(blocks[b][0], s)];
  return FiniteAct::validate(S, S->name() + "_quot", labels, table);
}

FiniteAct rees_factor_act(const MonoidPtr& S, const RightIdeal& I) {
  return cyclic_act(S, rees_congruence(S, I));
}

std::vector<Idx> zeros(const FiniteAct& A) {
  std::vector<Idx> out;
  const int n = A.monoid()->size();
  for (Idx x = 0; x < A.size(); ++x) {
    bool fixed = true;
    for (Idx s = 0; s < n && fixed; ++s) fixed = A.act(x, s) == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken,
                        const std::string& base) {
  auto used = [&](const std::string& l) {
    return std::find(taken.begin(), taken.end(), l) != taken.end();
  };
  if (!used(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace

FiniteAct adjoin_zero(const FiniteAct& A) {
  if (!zeros(A).empty()) return A;
  const int m = A.size();
  const int n = A.monoid()->size();
  std::vector<std::string> labels = A.labels();
  labels.push_back(fresh_label(labels, "\xce\xb8"));  // θ, placed last
  std::vector<std::vector<Idx>> table(m + 1, std::vector<Idx>(n));
  for (int x = 0; x < m; ++x)
    for (int s = 0; s < n; ++s) table[x][s] = A.act(x, s);
  for (int s = 0; s < n; ++s) table[m][s] = m;
  return FiniteAct::validate(A.monoid(), A.name() + "^0", labels, table);
}

Coproduct coproduct(const std::vector<FiniteAct>& parts) {
  if (parts.empty()) throw ValidationError("coproduct: empty family");
  for (size_t i = 1; i < parts.size(); ++i)
    if (!parts[0].over_same_monoid(parts[i]))
      throw ValidationError("coproduct: acts live over different monoids");
  const MonoidPtr& S = parts[0].monoid();
  const int n = S->size();
  std::vector<std::string> labels;
  std::vector<std::vector<Idx>> injections;
  int total = 0;
  for (const FiniteAct& p : parts) total += p.size();
  std::vector<std::vector<Idx>> table;
  table.reserve(total);
  std::string name;
  for (size_t i = 0; i < parts.size(); ++i) {
    const FiniteAct& p = parts[i];
    name += (i ? "+" : "") + p.name();
    std::vector<Idx> inj(p.size());
    int base = static_cast<int>(labels.size());
    for (Idx x = 0; x < p.size(); ++x) {
      inj[x] = base + x;
      labels.push_back(fresh_label(labels, p.label(x)));
      std::vector<Idx> row(n);
      for (Idx s = 0; s < n; ++s) row[s] = base + p.act(x, s);
      table.push_back(std::move(row));
    }
    injections.push_back(std::move(inj));
  }
  return Coproduct{FiniteAct::validate(S, name, labels, table),
                   std::move(injections)};
}

FiniteAct coproduct_act(const std::vector<FiniteAct>& parts) {
  return coproduct(parts).act;
}

Product product(const std::vector<FiniteAct>& parts, int size_guard) {
  if (parts.empty()) throw ValidationError("product: empty family");
  for (size_t i = 1; i < parts.size(); ++i)
    if (!parts[0].over_same_monoid(parts[i]))
      throw ValidationError("product: acts live over different monoids");
  const MonoidPtr& S = parts[0].monoid();
  const int n = S->size();
  long long total = 1;
  for (const FiniteAct& p : parts) {
    total *= p.size();
    if (total > size_guard)
      throw SizeGuardError("product: carrier would exceed " +
                           std::to_string(size_guard));
  }
  const int m = static_cast<int>(total);
  const int k = static_cast<int>(parts.size());
  // Tuple encoding: last coordinate varies fastest.
  auto decode = [&](int id, int coord) {
    for (int j = k - 1; j > coord; --j) id /= parts[j].size();
    return id % parts[coord].size();
  };
  std::vector<std::string> labels(m);
  std::vector<std::vector<Idx>> table(m, std::vector<Idx>(n));
  std::vector<std::vector<Idx>> projections(k, std::vector<Idx>(m));
  std::string name = "prod";
  for (int id = 0; id < m; ++id) {
    std::string l = "(";
    for (int c = 0; c < k; ++c) {
      Idx xc = decode(id, c);
      projections[c][id] = xc;
      l += (c ? "," : "") + parts[c].label(xc);
    }
    labels[id] = l + ")";
    for (Idx s = 0; s < n; ++s) {
      int enc = 0;
      for (int c = 0; c < k; ++c)
        enc = enc * parts[c].size() + parts[c].act(decode(id, c), s);
      table[id][s] = enc;
    }
  }
  return Product{FiniteAct::validate(S, name, labels, table),
                 std::move(projections)};
}

FiniteAct cofree_act(const MonoidPtr& S, const std::vector<std::string>& letters,
                     int size_guard) {
  if (letters.empty()) throw ValidationError("cofree_act: empty letter set");
  const int n = S->size();
  const int k = static_cast<int>(letters.size());
  long long total = 1;
  for (int t = 0; t < n; ++t) {
    total *= k;
    if (total > size_guard)
      throw SizeGuardError("cofree_act: carrier would exceed " +
                           std::to_string(size_guard));
  }
  const int m = static_cast<int>(total);
  // Function encoding: f is a base-k word over monoid positions, with the
  // value at position 0 in the most significant digit.
  auto value_at = [&](int id, int t) {
    for (int j = n - 1; j > t; --j) id /= k;
    return id % k;
  };
  std::vector<std::string> labels(m);
  std::vector<std::vector<Idx>> table(m, std::vector<Idx>(n));
  for (int id = 0; id < m; ++id) {
    std::string l = "(";
    for (int t = 0; t < n; ++t) l += (t ? "," : "") + letters[value_at(id, t)];
    labels[id] = l + ")";
    for (Idx s = 0; s < n; ++s) {
      int enc = 0;
      for (int t = 0; t < n; ++t) enc = enc * k + value_at(id, S->mul(s, t));
      table[id][s] = enc;
    }
  }
  return FiniteAct::validate(S, "cofree" + std::to_string(k), labels, table);
}

FiniteAct cofree_act(const MonoidPtr& S, int alphabet_size, int size_guard) {
  std::vector<std::string> letters;
  for (int i = 0; i < alphabet_size; ++i) letters.push_back(std::to_string(i));
  return cofree_act(S, letters, size_guard);
}

std::vector<Idx> generated_elems(const FiniteAct& A, const std::vector<Idx>& gens) {
  if (gens.empty()) throw ValidationError("generated_subact: empty generator set");
  const int n = A.monoid()->size();
  std::vector<char> in(A.size(), 0);
  std::deque<Idx> queue;
  for (Idx g : gens) {
    if (g < 0 || g >= A.size())
      throw ValidationError("generated_subact: generator out of range");
    if (!in[g]) {
      in[g] = 1;
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    Idx x = queue.front();
    queue.pop_front();
    for (Idx s = 0; s < n; ++s) {
      Idx y = A.act(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Idx> out;
  for (Idx x = 0; x < A.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

Subact generated_subact(const FiniteAct& A, const std::vector<Idx>& gens) {
  return Subact{A, generated_elems(A, gens)};
}

std::vector<std::vector<Idx>> subact_sets(const FiniteAct& A,
                                          const SubactLimits& limits) {
  const int m = A.size();
  if (m > limits.max_carrier)
    throw SizeGuardError("subacts: carrier exceeds " +
                         std::to_string(limits.max_carrier));
  // Every closed set is a union of orbit closures of its elements, so close
  // the distinct orbits under union.
  std::vector<uint64_t> orbit_masks;
  for (Idx x = 0; x < m; ++x) {
    uint64_t mask = 0;
    for (Idx y : generated_elems(A, {x})) mask |= uint64_t{1} << y;
    if (std::find(orbit_masks.begin(), orbit_masks.end(), mask) ==
        orbit_masks.end())
      orbit_masks.push_back(mask);
  }
  std::set<uint64_t> seen;
  std::deque<uint64_t> queue;
  for (uint64_t mk : orbit_masks) {
    if (seen.insert(mk).second) queue.push_back(mk);
  }
  while (!queue.empty()) {
    uint64_t cur = queue.front();
    queue.pop_front();
    for (uint64_t mk : orbit_masks) {
      uint64_t u = cur | mk;
      if (seen.insert(u).second) {
        if (static_cast<long long>(seen.size()) > limits.max_count)
          throw SizeGuardError("subacts: more than " +
                               std::to_string(limits.max_count) + " subacts");
        queue.push_back(u);
      }
    }
  }
  std::vector<std::vector<Idx>> out;
  out.reserve(seen.size());
  for (uint64_t mask : seen) {
    std::vector<Idx> elems;
    for (Idx x = 0; x < m; ++x)
      if (mask >> x & 1) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Idx>& a, const std::vector<Idx>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

std::vector<Subact> subacts(const FiniteAct& A, const SubactLimits& limits) {
  std::vector<Subact> out;
  for (auto& elems : subact_sets(A, limits))
    out.push_back(Subact{A, std::move(elems)});
  return out;
}

FiniteAct subact_as_act(const FiniteAct& A, const std::vector<Idx>& elems,
                        const std::string& name) {
  if (elems.empty()) throw ValidationError("subact_as_act: empty subset");
  const int n = A.monoid()->size();
  std::vector<Idx> pos(A.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Idx>(i);
  std::vector<std::string> labels;
  std::vector<std::vector<Idx>> table;
  for (Idx x : elems) {
    labels.push_back(A.label(x));
    std::vector<Idx> row(n);
    for (Idx s = 0; s < n; ++s) {
      Idx y = A.act(x, s);
      if (pos[y] < 0)
        throw ValidationError("subact_as_act: subset not closed at '" +
                              A.label(x) + "'");
      row[s] = pos[y];
    }
    table.push_back(std::move(row));
  }
  return FiniteAct::validate(A.monoid(),
                             name.empty() ? A.name() + "_sub" : name, labels,
                             table);
}

std::vector<Idx> canonical_act_table(const FiniteAct& A) {
  const int m = A.size();
  const int n = A.monoid()->size();
  if (m > 9) throw SizeGuardError("canonical_act_table: carrier > 9");
  std::vector<Idx> best = A.flat_table();
  std::vector<Idx> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Idx> relab(static_cast<size_t>(m) * n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int x = 0; x < m; ++x)
      for (int s = 0; s < n; ++s)
        relab[static_cast<size_t>(perm[x]) * n + s] = perm[A.act(x, s)];
    if (relab < best) best = relab;
  }
  return best;
}

namespace {

// Cell-level backtracking over the action table with compatibility
// propagation: whenever x·s and (x·s)·t are known, x·(st) is forced.
class ActSearch {
 public:
  ActSearch(MonoidPtr S, int m)
      : S_(std::move(S)),
        n_(S_->size()),
        m_(m),
        table_(static_cast<size_t>(m) * n_, -1) {
    for (Idx x = 0; x < m_; ++x) table_[cell(x, 0)] = x;  // unitarity
  }

  std::vector<FiniteAct> run() {
    search();
    return std::move(found_);
  }

 private:
  size_t cell(Idx x, Idx s) const { return static_cast<size_t>(x) * n_ + s; }

  // Applies the compatibility fixpoint; returns false on conflict. Records
  // every newly set cell on the trail.
  bool propagate(std::vector<size_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Idx x = 0; x < m_; ++x)
        for (Idx s = 0; s < n_; ++s) {
          Idx xs = table_[cell(x, s)];
          if (xs < 0) continue;
          for (Idx t = 0; t < n_; ++t) {
            Idx u = S_->mul(s, t);
            Idx lhs = table_[cell(x, u)];
            Idx rhs = table_[cell(xs, t)];
            if (lhs >= 0 && rhs >= 0) {
              if (lhs != rhs) return false;
            } else if (lhs >= 0) {
              table_[cell(xs, t)] = lhs;
              trail.push_back(cell(xs, t));
              changed = true;
            } else if (rhs >= 0) {
              table_[cell(x, u)] = rhs;
              trail.push_back(cell(x, u));
              changed = true;
            }
          }
        }
    }
    return true;
  }

  void search() {
    size_t free_cell = table_.size();
    for (size_t c = 0; c < table_.size(); ++c)
      if (table_[c] < 0) {
        free_cell = c;
        break;
      }
    if (free_cell == table_.size()) {
      emit();
      return;
    }
    for (Idx v = 0; v < m_; ++v) {
      std::vector<size_t> trail;
      table_[free_cell] = v;
      trail.push_back(free_cell);
      if (propagate(trail)) search();
      for (size_t c : trail) table_[c] = -1;
    }
  }

  void emit() {
    std::vector<std::string> labels(m_);
    std::vector<std::vector<Idx>> rows(m_, std::vector<Idx>(n_));
    for (Idx x = 0; x < m_; ++x) {
      labels[x] = "x" + std::to_string(x);
      for (Idx s = 0; s < n_; ++s) rows[x][s] = table_[cell(x, s)];
    }
    FiniteAct A = FiniteAct::validate(
        S_, "A" + std::to_string(m_) + "_" + std::to_string(found_.size() + 1),
        labels, rows);
    if (canonical_act_table(A) == A.flat_table()) found_.push_back(std::move(A));
  }

  MonoidPtr S_;
  int n_, m_;
  std::vector<Idx> table_;
  std::vector<FiniteAct> found_;
};

}  // namespace

std::vector<FiniteAct> enumerate_acts(const MonoidPtr& S, int m) {
  if (m < 1) throw ValidationError("enumerate_acts: size must be positive");
  if (m > 7) throw SizeGuardError("enumerate_acts: size > 7");
  return ActSearch(S, m).run();
}

std::vector<FiniteAct> acts_up_to(const MonoidPtr& S, int max_size) {
  std::vector<FiniteAct> out;
  for (int m = 1; m <= max_size; ++m) {
    auto part = enumerate_acts(S, m);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace actlab
