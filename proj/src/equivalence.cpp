#include "associoid/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace associoid {

Equiv::Equiv(Ground ground, std::vector<Mask> blocks)
    : ground_(std::move(ground)),
      blocks_(std::move(blocks)),
      block_of_(ground_->size(), -1),
      dom_(0) {
  Mask valid = full_mask(ground_->size());
  std::sort(blocks_.begin(), blocks_.end(),
            [](Mask p, Mask q) { return std::countr_zero(p) < std::countr_zero(q); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    Mask b = blocks_[i];
    if (b == 0) throw Error("empty block in partition");
    if (b & ~valid) throw Error("block element outside ground set");
    if (b & dom_) throw Error("overlapping blocks in partition");
    dom_ |= b;
    for (Mask m = b; m; m &= m - 1)
      block_of_[std::countr_zero(m)] = static_cast<int>(i);
  }
}

Equiv Equiv::identity(const Ground& g) {
  std::vector<Mask> blocks;
  for (int i = 0; i < g->size(); ++i) blocks.push_back(Mask{1} << i);
  return Equiv(g, std::move(blocks));
}

Equiv Equiv::indiscrete(const Ground& g) {
  std::vector<Mask> blocks;
  if (g->size() > 0) blocks.push_back(full_mask(g->size()));
  return Equiv(g, std::move(blocks));
}

Equiv Equiv::from_blocks(const Ground& g,
                         const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> masks;
  for (const auto& blk : blocks) {
    Mask m = 0;
    for (int e : blk) m |= Mask{1} << e;
    masks.push_back(m);
  }
  return Equiv(g, std::move(masks));
}

Equiv Equiv::from_relation(const BinRel& r) {
  if (!r.is_endo()) throw Error("from_relation requires an endorelation");
  const Ground& g = r.src();
  for (int t = 0; t < g->size(); ++t)
    for (Mask m = r.row(t); m; m &= m - 1) {
      int s = std::countr_zero(m);
      if (!r.contains(s, t))
        throw NotEquivalence("relation is not symmetric: contains (" +
                                 std::to_string(t) + "," + std::to_string(s) +
                                 ") but not (" + std::to_string(s) + "," +
                                 std::to_string(t) + ")",
                             {t, s});
    }
  BinRel sq = compose(r, r);
  for (int t = 0; t < g->size(); ++t) {
    Mask extra = sq.row(t) & ~r.row(t);
    if (extra) {
      int s = std::countr_zero(extra);
      throw NotEquivalence("relation is not transitive: missing (" +
                               std::to_string(t) + "," + std::to_string(s) + ")",
                           {t, s});
    }
  }
  // Symmetric + transitive: each domain element's row is its class.
  std::vector<Mask> blocks;
  Mask seen = 0;
  for (int t = 0; t < g->size(); ++t) {
    Mask row = r.row(t);
    if (row && !(seen & (Mask{1} << t))) {
      blocks.push_back(row);
      seen |= row;
    }
  }
  return Equiv(g, std::move(blocks));
}

BinRel Equiv::as_relation() const {
  std::vector<Mask> rows(ground_->size(), 0);
  for (Mask b : blocks_)
    for (Mask m = b; m; m &= m - 1) rows[std::countr_zero(m)] = b;
  return BinRel(ground_, ground_, std::move(rows));
}

Mask Equiv::saturate(Mask x) const {
  Mask out = 0;
  for (Mask b : blocks_)
    if (b & x) out |= b;
  return out;
}

bool commutes(const Equiv& a, const Equiv& b) {
  return !commutation_witness(a, b).has_value();
}

std::optional<std::pair<int, int>> commutation_witness(const Equiv& a,
                                                       const Equiv& b) {
  require_same_ground(a.ground(), b.ground(), "commutes");
  // (w,s) in ab iff b's class of s meets a's class of w.
  int n = a.ground()->size();
  for (int w = 0; w < n; ++w)
    for (int s = 0; s < n; ++s) {
      bool ab = (b.class_of(s) & a.class_of(w)) != 0;
      bool ba = (a.class_of(s) & b.class_of(w)) != 0;
      if (ab != ba) return std::make_pair(w, s);
    }
  return std::nullopt;
}

bool transversal(const Subset& x, const Equiv& a) {
  require_same_ground(x.ground(), a.ground(), "transversal");
  for (Mask b : a.blocks())
    if (std::popcount(b & x.bits()) != 1) return false;
  return true;
}

bool locally_transversal(const Subset& x, const Equiv& a) {
  require_same_ground(x.ground(), a.ground(), "locally_transversal");
  for (Mask b : a.blocks())
    if (std::popcount(b & x.bits()) > 1) return false;
  return true;
}

bool transversal_pair(const Equiv& a, const Equiv& b) {
  require_same_ground(a.ground(), b.ground(), "transversal_pair");
  if (!a.is_total() || !b.is_total()) return false;
  BinRel ra = a.as_relation(), rb = b.as_relation();
  Subset all = Subset::all(a.ground());
  return compose(ra, rb) == all_relation(all, all) &&
         (ra & rb) == diagonal(all);
}

CanonicalMap::CanonicalMap(const Equiv& a, const Equiv& b) : a_(a), b_(b) {
  require_same_ground(a.ground(), b.ground(), "canonical map");
  if (!a.is_total() || !b.is_total())
    throw Error("canonical map requires total equivalences");
}

bool CanonicalMap::is_bijective() const { return transversal_pair(a_, b_); }

int CanonicalMap::inverse(int a_class, int b_class) const {
  Mask inter = a_.block_mask(a_class) & b_.block_mask(b_class);
  int k = std::popcount(inter);
  if (k != 1)
    throw NotTransversal(
        "class intersection " + mask_to_string(inter) + " of a-class " +
            std::to_string(a_class) + " and b-class " + std::to_string(b_class) +
            (k == 0 ? " is empty" : " has more than one element"),
        a_class);
  return std::countr_zero(inter);
}

BinRel gen_projection(const Equiv& a, const Subset& x) {
  require_same_ground(a.ground(), x.ground(), "gen_projection");
  // P^a_x = I_x o a: rows over x carry the a-class of the row element.
  std::vector<Mask> rows(a.ground()->size(), 0);
  for (int e : x.elements()) rows[e] = a.class_of(e);
  return BinRel(a.ground(), a.ground(), std::move(rows));
}

std::vector<int> as_operator(const Equiv& a, const Subset& x) {
  require_same_ground(a.ground(), x.ground(), "as_operator");
  if (!a.is_total())
    throw NotTransversal("as_operator requires a total equivalence", -1);
  for (int i = 0; i < a.block_count(); ++i) {
    int k = std::popcount(a.block_mask(i) & x.bits());
    if (k != 1)
      throw NotTransversal("set meets class " + mask_to_string(a.block_mask(i)) +
                               " in " + std::to_string(k) +
                               " elements, expected exactly one",
                           i);
  }
  std::vector<int> f(a.ground()->size());
  for (int w = 0; w < a.ground()->size(); ++w)
    f[w] = std::countr_zero(a.class_of(w) & x.bits());
  return f;
}

bool induced_related(const Equiv& a, const Subset& x, const Subset& y) {
  require_same_ground(a.ground(), x.ground(), "induced_related");
  require_same_ground(a.ground(), y.ground(), "induced_related");
  return a.saturate(x.bits()) == a.saturate(y.bits());
}

Equiv induced_equiv_on(const Equiv& a, const std::vector<Subset>& carrier,
                       const Ground& carrier_ground) {
  if (static_cast<int>(carrier.size()) != carrier_ground->size())
    throw Error("carrier size does not match carrier ground");
  std::map<Mask, Mask> by_saturation;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    by_saturation[a.saturate(carrier[i].bits())] |= Mask{1} << i;
  std::vector<Mask> blocks;
  for (auto& [sat, members] : by_saturation) blocks.push_back(members);
  return Equiv(carrier_ground, std::move(blocks));
}

namespace {

// Odometer over one choice list per block, rightmost block fastest.
void enumerate_choices(const std::vector<std::vector<Mask>>& alternatives,
                       Mask base, const std::function<bool(Mask)>& visit) {
  std::size_t k = alternatives.size();
  std::vector<std::size_t> pos(k, 0);
  for (;;) {
    Mask m = base;
    for (std::size_t i = 0; i < k; ++i) m |= alternatives[i][pos[i]];
    if (!visit(m)) return;
    std::size_t i = k;
    while (i > 0 && ++pos[i - 1] == alternatives[i - 1].size())
      pos[--i] = 0;
    if (i == 0) return;
  }
}

std::vector<Mask> singleton_choices(Mask block) {
  std::vector<Mask> out;
  for (Mask m = block; m; m &= m - 1) out.push_back(m & (~m + 1));
  return out;
}

}  // namespace

void for_each_section(const Equiv& a, const std::function<bool(Mask)>& visit) {
  std::vector<std::vector<Mask>> alternatives;
  for (Mask b : a.blocks()) alternatives.push_back(singleton_choices(b));
  if (alternatives.empty()) {
    visit(0);
    return;
  }
  enumerate_choices(alternatives, 0, visit);
}

void for_each_local_section(const Equiv& a,
                            const std::function<bool(Mask)>& visit) {
  std::vector<std::vector<Mask>> alternatives;
  for (Mask b : a.blocks()) {
    std::vector<Mask> alts{Mask{0}};
    for (Mask s : singleton_choices(b)) alts.push_back(s);
    alternatives.push_back(std::move(alts));
  }
  // Elements outside the domain are unconstrained: enumerate their subsets
  // as the outermost loop, ascending as plain masks.
  Mask free = full_mask(a.ground()->size()) & ~a.dom().bits();
  std::vector<Mask> free_subsets;
  Mask sub = 0;
  do {
    free_subsets.push_back(sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  for (Mask f : free_subsets) {
    bool go = true;
    if (alternatives.empty()) {
      go = visit(f);
    } else {
      enumerate_choices(alternatives, f, [&](Mask m) {
        go = visit(m);
        return go;
      });
    }
    if (!go) return;
  }
}

std::vector<Subset> sections(const Equiv& a) {
  std::vector<Subset> out;
  for_each_section(a, [&](Mask m) {
    out.emplace_back(a.ground(), m);
    return true;
  });
  return out;
}

std::vector<Subset> bisections(const Equiv& a, const Equiv& b) {
  require_same_ground(a.ground(), b.ground(), "bisections");
  std::vector<Subset> out;
  for_each_section(a, [&](Mask m) {
    Subset s(a.ground(), m);
    if (transversal(s, b)) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subset> local_sections(const Equiv& a) {
  std::vector<Subset> out;
  for_each_local_section(a, [&](Mask m) {
    out.emplace_back(a.ground(), m);
    return true;
  });
  return out;
}

std::vector<Subset> local_bisections(const Equiv& a, const Equiv& b) {
  require_same_ground(a.ground(), b.ground(), "local_bisections");
  std::vector<Subset> out;
  for_each_local_section(a, [&](Mask m) {
    Subset s(a.ground(), m);
    if (locally_transversal(s, b)) out.push_back(s);
    return true;
  });
  return out;
}

std::uint64_t section_count(const Equiv& a) {
  std::uint64_t n = 1;
  for (Mask b : a.blocks()) n *= static_cast<std::uint64_t>(std::popcount(b));
  return n;
}

}  // namespace associoid
