#include "associoid/relations.hpp"

#include <algorithm>
#include <bit>

namespace associoid {

BinRel BinRel::graph_of(Ground src, Ground tgt, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != src->size())
    throw Error("graph: map length does not match source size");
  BinRel r(std::move(src), std::move(tgt));
  for (int w = 0; w < static_cast<int>(f.size()); ++w) r.add(f[w], w);
  return r;
}

std::size_t BinRel::pair_count() const {
  std::size_t n = 0;
  for (Mask r : rows_) n += std::popcount(r);
  return n;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count());
  for (int t = 0; t < tgt_->size(); ++t)
    for (Mask m = rows_[t]; m; m &= m - 1)
      out.emplace_back(t, std::countr_zero(m));
  return out;
}

bool BinRel::subset_of(const BinRel& o) const {
  require_same_ground(src_, o.src_, "relation inclusion");
  require_same_ground(tgt_, o.tgt_, "relation inclusion");
  for (int t = 0; t < tgt_->size(); ++t)
    if (rows_[t] & ~o.rows_[t]) return false;
  return true;
}

BinRel BinRel::operator&(const BinRel& o) const {
  require_same_ground(src_, o.src_, "relation intersection");
  require_same_ground(tgt_, o.tgt_, "relation intersection");
  std::vector<Mask> rows(rows_);
  for (int t = 0; t < tgt_->size(); ++t) rows[t] &= o.rows_[t];
  return BinRel(src_, tgt_, std::move(rows));
}

BinRel BinRel::operator|(const BinRel& o) const {
  require_same_ground(src_, o.src_, "relation union");
  require_same_ground(tgt_, o.tgt_, "relation union");
  std::vector<Mask> rows(rows_);
  for (int t = 0; t < tgt_->size(); ++t) rows[t] |= o.rows_[t];
  return BinRel(src_, tgt_, std::move(rows));
}

BinRel compose(const BinRel& b, const BinRel& a) {
  require_same_ground(a.tgt(), b.src(), "compose");
  std::vector<Mask> rows(b.tgt()->size(), 0);
  for (int w = 0; w < b.tgt()->size(); ++w) {
    Mask acc = 0;
    for (Mask m = b.row(w); m; m &= m - 1) acc |= a.row(std::countr_zero(m));
    rows[w] = acc;
  }
  return BinRel(a.src(), b.tgt(), std::move(rows));
}

BinRel inverse(const BinRel& a) {
  BinRel r(a.tgt(), a.src());
  for (int t = 0; t < a.tgt()->size(); ++t)
    for (Mask m = a.row(t); m; m &= m - 1) r.add(std::countr_zero(m), t);
  return r;
}

Subset domain(const BinRel& a) {
  Mask m = 0;
  for (Mask r : a.rows()) m |= r;
  return Subset(a.src(), m);
}

Subset image(const BinRel& a) {
  Mask m = 0;
  for (int t = 0; t < a.tgt()->size(); ++t)
    if (a.row(t)) m |= Mask{1} << t;
  return Subset(a.tgt(), m);
}

BinRel diagonal(const Subset& x) {
  BinRel r(x.ground(), x.ground());
  for (int e : x.elements()) r.add(e, e);
  return r;
}

BinRel all_relation(const Subset& x, const Subset& y) {
  // Pairs (xi, eta) with xi in x and eta in y: rows over x carry y's bits.
  std::vector<Mask> rows(x.ground()->size(), 0);
  for (int e : x.elements()) rows[e] = y.bits();
  return BinRel(y.ground(), x.ground(), std::move(rows));
}

Subset image_of_set(const BinRel& a, const Subset& x) {
  require_same_ground(a.src(), x.ground(), "image_of_set");
  Mask m = 0;
  for (int t = 0; t < a.tgt()->size(); ++t)
    if (a.row(t) & x.bits()) m |= Mask{1} << t;
  return Subset(a.tgt(), m);
}

Subset preimage_of_set(const BinRel& a, const Subset& x) {
  require_same_ground(a.tgt(), x.ground(), "preimage_of_set");
  Mask m = 0;
  for (Mask t = x.bits(); t; t &= t - 1) m |= a.row(std::countr_zero(t));
  return Subset(a.src(), m);
}

namespace {

void require_endo(const BinRel& a, const char* what) {
  if (!a.is_endo())
    throw Error(std::string(what) + " requires an endorelation");
}

}  // namespace

bool is_transitive(const BinRel& a) {
  require_endo(a, "is_transitive");
  return compose(a, a).subset_of(a);
}

bool is_idempotent(const BinRel& a) {
  require_endo(a, "is_idempotent");
  return compose(a, a) == a;
}

bool is_symmetric(const BinRel& a) {
  require_endo(a, "is_symmetric");
  return inverse(a) == a;
}

bool is_image_reflexive(const BinRel& a) {
  require_endo(a, "is_image_reflexive");
  for (int t = 0; t < a.tgt()->size(); ++t)
    if (a.row(t) && !a.contains(t, t)) return false;
  return true;
}

bool is_domain_reflexive(const BinRel& a) {
  require_endo(a, "is_domain_reflexive");
  Mask dom = domain(a).bits();
  for (Mask m = dom; m; m &= m - 1) {
    int s = std::countr_zero(m);
    if (!a.contains(s, s)) return false;
  }
  return true;
}

bool is_reflexive(const BinRel& a) {
  require_endo(a, "is_reflexive");
  for (int t = 0; t < a.tgt()->size(); ++t)
    if (!a.contains(t, t)) return false;
  return true;
}

bool is_regular(const BinRel& a) {
  require_endo(a, "is_regular");
  return compose(compose(a, inverse(a)), a) == a;
}

}  // namespace associoid
