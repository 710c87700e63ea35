#pragma once

#include <utility>
#include <vector>

#include "associoid/core.hpp"

namespace associoid {

/**
 * A finite binary relation between a source and a target ground set.
 *
 * Pairs are oriented (target, source): the graph of a map f stores the
 * pair (f(w), w). Storage is one source-indexed bit row per target
 * element, so composition is a row-wise OR accumulation.
 */
class BinRel {
 public:
  BinRel(Ground src, Ground tgt)
      : src_(std::move(src)), tgt_(std::move(tgt)), rows_(tgt_->size(), 0) {}

  BinRel(Ground src, Ground tgt, std::vector<Mask> rows)
      : src_(std::move(src)), tgt_(std::move(tgt)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != tgt_->size())
      throw Error("relation row count does not match target size");
    Mask valid = full_mask(src_->size());
    for (Mask r : rows_)
      if (r & ~valid) throw Error("relation pair outside source ground set");
  }

  static BinRel from_pairs(Ground src, Ground tgt,
                           const std::vector<std::pair<int, int>>& pairs) {
    BinRel r(std::move(src), std::move(tgt));
    for (auto [t, s] : pairs) r.add(t, s);
    return r;
  }

  /// Graph of a map source -> target, stored as pairs (f(w), w).
  static BinRel graph_of(Ground src, Ground tgt, const std::vector<int>& f);

  const Ground& src() const { return src_; }
  const Ground& tgt() const { return tgt_; }
  bool is_endo() const { return src_ == tgt_; }

  bool contains(int t, int s) const { return (rows_[t] >> s) & 1; }
  void add(int t, int s) {
    if (t < 0 || t >= tgt_->size() || s < 0 || s >= src_->size())
      throw Error("relation pair out of range");
    rows_[t] |= Mask{1} << s;
  }

  Mask row(int t) const { return rows_[t]; }
  const std::vector<Mask>& rows() const { return rows_; }

  std::size_t pair_count() const;
  /// Pairs (target, source) in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const BinRel& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && rows_ == o.rows_;
  }

  bool subset_of(const BinRel& o) const;
  BinRel operator&(const BinRel& o) const;
  BinRel operator|(const BinRel& o) const;

 private:
  Ground src_;
  Ground tgt_;
  std::vector<Mask> rows_;
};

/// Relational composition b . a: pairs (w,alpha) with a middle witness.
BinRel compose(const BinRel& b, const BinRel& a);

BinRel inverse(const BinRel& a);

Subset domain(const BinRel& a);
Subset image(const BinRel& a);

BinRel diagonal(const Subset& x);
BinRel all_relation(const Subset& x, const Subset& y);

/// Direct image a(x) = { w | exists s in x with (w,s) in a }.
Subset image_of_set(const BinRel& a, const Subset& x);
/// Inverse image xa = a^{-1}(x).
Subset preimage_of_set(const BinRel& a, const Subset& x);

// Endorelation predicates. All require src == tgt.
bool is_transitive(const BinRel& a);
bool is_idempotent(const BinRel& a);
bool is_symmetric(const BinRel& a);
bool is_image_reflexive(const BinRel& a);
bool is_domain_reflexive(const BinRel& a);
bool is_reflexive(const BinRel& a);
bool is_regular(const BinRel& a);

}  // namespace associoid
