#include "actlab/monoid.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "actlab/errors.hpp"

namespace actlab {

FiniteMonoid::FiniteMonoid(std::string name, std::vector<std::string> labels,
                           std::vector<Idx> flat)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      table_(std::move(flat)),
      n_(static_cast<int>(labels_.size())) {}

MonoidPtr FiniteMonoid::validate(std::string name,
                                 std::vector<std::string> labels,
                                 const std::vector<std::vector<Idx>>& table,
                                 Idx identity) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw ValidationError("monoid needs at least one element");
  if (static_cast<int>(table.size()) != n)
    throw ValidationError("monoid '" + name + "': table has " +
                          std::to_string(table.size()) + " rows, expected " +
                          std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(table[i].size()) != n)
      throw ValidationError("monoid '" + name + "': row " + std::to_string(i) +
                            " has " + std::to_string(table[i].size()) +
                            " entries, expected " + std::to_string(n));
  if (identity < 0 || identity >= n)
    throw ValidationError("monoid '" + name + "': identity index " +
                          std::to_string(identity) + " out of range");

  std::vector<Idx> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Idx v = table[i][j];
      if (v < 0 || v >= n)
        throw ValidationError("monoid '" + name + "': entry (" + std::to_string(i) +
                              ", " + std::to_string(j) + ") = " + std::to_string(v) +
                              " out of range");
      flat[static_cast<size_t>(i) * n + j] = v;
    }

  auto mul = [&](Idx x, Idx y) { return flat[static_cast<size_t>(x) * n + y]; };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw ValidationError("monoid '" + name + "': not associative at (" +
                                labels[x] + ", " + labels[y] + ", " + labels[z] +
                                ")");
  for (int x = 0; x < n; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x)
      throw ValidationError("monoid '" + name + "': identity law fails at '" +
                            labels[x] + "'");
  }

  if (identity != 0) {
    // Stable relabeling moving the identity to slot 0.
    std::vector<Idx> to_new(n);  // old -> new
    to_new[identity] = 0;
    int next = 1;
    for (int i = 0; i < n; ++i)
      if (i != identity) to_new[i] = next++;
    std::vector<Idx> to_old(n);
    for (int i = 0; i < n; ++i) to_old[to_new[i]] = i;
    std::vector<std::string> new_labels(n);
    std::vector<Idx> new_flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) new_labels[i] = labels[to_old[i]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        new_flat[static_cast<size_t>(i) * n + j] =
            to_new[mul(to_old[i], to_old[j])];
    labels = std::move(new_labels);
    flat = std::move(new_flat);
  }

  return MonoidPtr(
      new FiniteMonoid(std::move(name), std::move(labels), std::move(flat)));
}

bool FiniteMonoid::same_structure(const FiniteMonoid& other) const {
  return this == &other || (labels_ == other.labels_ && table_ == other.table_);
}

int RightCongruence::block_count() const {
  int m = -1;
  for (int b : block_of) m = std::max(m, b);
  return m + 1;
}

RightIdeal principal_right_ideal(const MonoidPtr& S, Idx a) {
  const int n = S->size();
  if (a < 0 || a >= n)
    throw ValidationError("principal_right_ideal: index out of range");
  std::vector<char> in(n, 0);
  for (Idx s = 0; s < n; ++s) in[S->mul(a, s)] = 1;
  RightIdeal out{S, {}};
  for (Idx x = 0; x < n; ++x)
    if (in[x]) out.elems.push_back(x);
  return out;
}

namespace {

std::vector<std::vector<Idx>> right_ideal_sets(const FiniteMonoid& S) {
  const int n = S.size();
  if (n > 20) throw SizeGuardError("all_right_ideals: |S| > 20");
  std::vector<std::vector<Idx>> out;
  for_each_subset(n, [&](const std::vector<Idx>& elems) {
    std::vector<char> in(n, 0);
    for (Idx x : elems) in[x] = 1;
    for (Idx x : elems)
      for (Idx s = 0; s < n; ++s)
        if (!in[S.mul(x, s)]) return true;  // not closed, keep going
    out.push_back(elems);
    return true;
  });
  return out;
}

}  // namespace

std::vector<RightIdeal> all_right_ideals(const MonoidPtr& S) {
  std::vector<RightIdeal> out;
  for (auto& elems : right_ideal_sets(*S))
    out.push_back(RightIdeal{S, std::move(elems)});
  return out;
}

bool is_left_reversible(const FiniteMonoid& S) {
  const int n = S.size();
  for (Idx a = 0; a < n; ++a)
    for (Idx b = a + 1; b < n; ++b) {
      std::vector<char> inA(n, 0);
      for (Idx s = 0; s < n; ++s) inA[S.mul(a, s)] = 1;
      bool meets = false;
      for (Idx s = 0; s < n && !meets; ++s) meets = inA[S.mul(b, s)];
      if (!meets) return false;
    }
  return true;
}

std::vector<Idx> left_zeros(const FiniteMonoid& S) {
  std::vector<Idx> out;
  for (Idx z = 0; z < S.size(); ++z) {
    bool ok = true;
    for (Idx s = 0; s < S.size() && ok; ++s) ok = S.mul(z, s) == z;
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<Idx> right_zeros(const FiniteMonoid& S) {
  std::vector<Idx> out;
  for (Idx z = 0; z < S.size(); ++z) {
    bool ok = true;
    for (Idx s = 0; s < S.size() && ok; ++s) ok = S.mul(s, z) == z;
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<Idx> idempotents(const FiniteMonoid& S) {
  std::vector<Idx> out;
  for (Idx e = 0; e < S.size(); ++e)
    if (S.mul(e, e) == e) out.push_back(e);
  return out;
}

bool is_regular(const FiniteMonoid& S) {
  for (Idx a = 0; a < S.size(); ++a) {
    bool ok = false;
    for (Idx x = 0; x < S.size() && !ok; ++x) ok = S.mul(S.mul(a, x), a) == a;
    if (!ok) return false;
  }
  return true;
}

bool is_right_congruence(const FiniteMonoid& S, const std::vector<int>& block_of) {
  const int n = S.size();
  for (Idx a = 0; a < n; ++a)
    for (Idx b = a + 1; b < n; ++b) {
      if (block_of[a] != block_of[b]) continue;
      for (Idx s = 0; s < n; ++s)
        if (block_of[S.mul(a, s)] != block_of[S.mul(b, s)]) return false;
    }
  return true;
}

std::vector<RightCongruence> all_right_congruences(const MonoidPtr& S) {
  const int n = S->size();
  if (n > 10) throw SizeGuardError("all_right_congruences: |S| > 10");
  std::vector<RightCongruence> out;
  for_each_partition(n, [&](const std::vector<int>& blocks) {
    if (is_right_congruence(*S, blocks))
      out.push_back(RightCongruence{S, normalize_block_ids(blocks)});
    return true;
  });
  return out;
}

RightCongruence rees_congruence(const MonoidPtr& S, const RightIdeal& I) {
  if (!I.owner->same_structure(*S))
    throw ValidationError("rees_congruence: ideal belongs to a different monoid");
  const int n = S->size();
  std::vector<char> in(n, 0);
  for (Idx x : I.elems) in[x] = 1;
  std::vector<int> block(n, -1);
  int next = 0;
  int ideal_block = -1;
  for (Idx x = 0; x < n; ++x) {
    if (in[x]) {
      if (ideal_block < 0) ideal_block = next++;
      block[x] = ideal_block;
    } else {
      block[x] = next++;
    }
  }
  RightCongruence rho{S, normalize_block_ids(block)};
  if (!is_right_congruence(*S, rho.block_of))
    throw ValidationError("rees_congruence: result not right compatible");
  return rho;
}

bool is_principal_right_ideal_monoid(const FiniteMonoid& S) {
  const int n = S.size();
  std::set<std::vector<Idx>> principal;
  for (Idx a = 0; a < n; ++a) {
    std::vector<char> in(n, 0);
    for (Idx s = 0; s < n; ++s) in[S.mul(a, s)] = 1;
    std::vector<Idx> elems;
    for (Idx x = 0; x < n; ++x)
      if (in[x]) elems.push_back(x);
    principal.insert(std::move(elems));
  }
  for (const auto& elems : right_ideal_sets(S))
    if (!principal.count(elems)) return false;
  return true;
}

std::vector<Idx> canonical_monoid_table(const FiniteMonoid& S) {
  const int n = S.size();
  std::vector<Idx> best = S.flat_table();
  if (n <= 1) return best;
  std::vector<Idx> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Idx> to_new(n), relab(static_cast<size_t>(n) * n);
  do {
    to_new[0] = 0;
    for (int i = 1; i < n; ++i) to_new[i] = perm[i - 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relab[static_cast<size_t>(to_new[i]) * n + to_new[j]] =
            to_new[S.mul(i, j)];
    if (relab < best) best = relab;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

const char* kElementNames[] = {"1", "a", "b", "c", "d"};

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(kElementNames[i]);
  return out;
}

// Backtracking over the (n-1) x (n-1) free part of the table with an
// incremental associativity filter over fully determined triples.
class MonoidSearch {
 public:
  explicit MonoidSearch(int n) : n_(n), table_(static_cast<size_t>(n) * n, -1) {
    for (int j = 0; j < n; ++j) table_[j] = j;
    for (int i = 0; i < n; ++i) table_[static_cast<size_t>(i) * n] = i;
  }

  std::vector<MonoidPtr> run() {
    search(0);
    return std::move(found_);
  }

 private:
  Idx at(Idx x, Idx y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
  void set(Idx x, Idx y, Idx v) { table_[static_cast<size_t>(x) * n_ + y] = v; }

  bool consistent() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        Idx xy = at(x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n_; ++z) {
          Idx yz = at(y, z);
          if (yz < 0) continue;
          Idx l = at(xy, z), r = at(x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  void search(int cell) {
    const int free_cells = (n_ - 1) * (n_ - 1);
    if (cell == free_cells) {
      emit();
      return;
    }
    int row = 1 + cell / (n_ - 1);
    int col = 1 + cell % (n_ - 1);
    for (Idx v = 0; v < n_; ++v) {
      set(row, col, v);
      if (consistent()) search(cell + 1);
    }
    set(row, col, -1);
  }

  void emit() {
    // Keep only canonical representatives.
    std::vector<std::vector<Idx>> rows(n_, std::vector<Idx>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
    MonoidPtr M = FiniteMonoid::validate(
        "M" + std::to_string(n_) + "_" + std::to_string(found_.size() + 1),
        default_labels(n_), rows, 0);
    if (canonical_monoid_table(*M) == M->flat_table()) found_.push_back(M);
  }

  int n_;
  std::vector<Idx> table_;
  std::vector<MonoidPtr> found_;
};

}  // namespace

std::vector<MonoidPtr> enumerate_monoids(int n) {
  if (n < 1) throw ValidationError("enumerate_monoids: order must be positive");
  if (n > 5) throw SizeGuardError("enumerate_monoids: order > 5");
  return MonoidSearch(n).run();
}

std::vector<MonoidPtr> monoids_up_to(int max_order) {
  std::vector<MonoidPtr> out;
  for (int n = 1; n <= max_order; ++n) {
    auto part = enumerate_monoids(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace actlab
