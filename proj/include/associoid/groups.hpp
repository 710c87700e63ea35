#pragma once

#include <optional>
#include <vector>

#include "associoid/equivalence.hpp"

namespace associoid {

/**
 * A finite group given by its Cayley table. Associativity, identity and
 * inverse laws are validated on construction. Groups built from
 * permutations keep the one-line forms of their elements.
 */
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> cayley,
                       std::vector<std::vector<int>> perms = {});

  int size() const { return n_; }
  int mul(int x, int y) const { return table_[x][y]; }
  int identity() const { return id_; }
  int inverse(int x) const { return inv_[x]; }
  int order_of(int x) const;

  const std::vector<std::vector<int>>& cayley() const { return table_; }
  bool has_perms() const { return !perms_.empty(); }
  const std::vector<int>& perm(int x) const { return perms_.at(x); }

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  int n_;
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> perms_;
  int id_;
  std::vector<int> inv_;
};

FiniteGroup cyclic(int n);

/// Symmetric group on n letters; elements are the permutations in
/// lexicographic one-line order, product is composition (apply the right
/// factor first).
FiniteGroup symmetric(int n);

FiniteGroup from_cayley(const std::vector<std::vector<int>>& table);

/// Closure of a set of permutations (all of one degree) under
/// composition. Element order is insertion order of the closure: the
/// identity, then the generators, then products in search order.
FiniteGroup close_generators(const std::vector<std::vector<int>>& perms);

bool is_subgroup(const FiniteGroup& g, const Subset& s);
void require_subgroup(const FiniteGroup& g, const Subset& s);

/// Equivalence whose classes are the right cosets A x (ground = element ids).
Equiv right_cosets(const FiniteGroup& g, const Ground& ground, Mask subgroup);
/// Equivalence whose classes are the left cosets x B.
Equiv left_cosets(const FiniteGroup& g, const Ground& ground, Mask subgroup);

/// Backtracking isomorphism search.
bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace associoid
