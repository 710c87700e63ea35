#include "associoid/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace associoid {

namespace {

std::vector<int> compose_perm(const std::vector<int>& f,
                              const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley,
                         std::vector<std::vector<int>> perms)
    : n_(static_cast<int>(cayley.size())),
      table_(std::move(cayley)),
      perms_(std::move(perms)) {
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      throw Error("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n_) throw Error("Cayley table entry out of range");
  }
  if (!perms_.empty() && static_cast<int>(perms_.size()) != n_)
    throw Error("permutation list length does not match group order");

  id_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x)
      ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      id_ = e;
      break;
    }
  }
  if (id_ < 0) throw Error("Cayley table has no identity element");

  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          throw Error("Cayley table not associative at (" + std::to_string(x) +
                      "," + std::to_string(y) + "," + std::to_string(z) + ")");

  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y)
      if (table_[x][y] == id_ && table_[y][x] == id_) {
        inv_[x] = y;
        break;
      }
    if (inv_[x] < 0)
      throw Error("element " + std::to_string(x) + " has no inverse");
  }
}

int FiniteGroup::order_of(int x) const {
  int k = 1, y = x;
  while (y != id_) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup symmetric(int n) {
  if (n < 1) throw Error("symmetric group degree must be positive");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      t[x][y] = index.at(compose_perm(perms[x], perms[y]));
  return FiniteGroup(std::move(t), std::move(perms));
}

FiniteGroup from_cayley(const std::vector<std::vector<int>>& table) {
  return FiniteGroup(table);
}

FiniteGroup close_generators(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw Error("close_generators needs at least one permutation");
  std::size_t degree = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != degree) throw Error("generators have mixed degrees");
    if (!is_permutation(g)) throw Error("generator is not a permutation");
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (const auto& g : gens)
    if (!index.count(g)) {
      index[g] = static_cast<int>(elems.size());
      elems.push_back(g);
    }
  for (std::size_t cur = 0; cur < elems.size(); ++cur)
    for (const auto& g : gens) {
      auto prod = compose_perm(elems[cur], g);
      if (!index.count(prod)) {
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
      }
    }

  int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      t[x][y] = index.at(compose_perm(elems[x], elems[y]));
  return FiniteGroup(std::move(t), std::move(elems));
}

bool is_subgroup(const FiniteGroup& g, const Subset& s) {
  if (s.ground()->size() != g.size())
    throw Error("subset ground does not match group order");
  if (!s.contains(g.identity())) return false;
  for (int x : s.elements()) {
    if (!s.contains(g.inverse(x))) return false;
    for (int y : s.elements())
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

void require_subgroup(const FiniteGroup& g, const Subset& s) {
  if (s.ground()->size() != g.size())
    throw Error("subset ground does not match group order");
  if (!s.contains(g.identity()))
    throw Error("not a subgroup: missing identity " +
                std::to_string(g.identity()));
  for (int x : s.elements()) {
    if (!s.contains(g.inverse(x)))
      throw Error("not a subgroup: missing inverse of " + std::to_string(x));
    for (int y : s.elements())
      if (!s.contains(g.mul(x, y)))
        throw Error("not a subgroup: product of " + std::to_string(x) + " and " +
                    std::to_string(y) + " escapes the set");
  }
}

namespace {

Equiv cosets(const FiniteGroup& g, const Ground& ground, Mask subgroup,
             bool right) {
  if (ground->size() != g.size())
    throw Error("coset ground does not match group order");
  Subset sub(ground, subgroup);
  require_subgroup(g, sub);
  std::vector<Mask> blocks;
  Mask seen = 0;
  for (int x = 0; x < g.size(); ++x) {
    if (seen & (Mask{1} << x)) continue;
    Mask blk = 0;
    for (int a : sub.elements())
      blk |= Mask{1} << (right ? g.mul(a, x) : g.mul(x, a));
    blocks.push_back(blk);
    seen |= blk;
  }
  return Equiv(ground, std::move(blocks));
}

}  // namespace

Equiv right_cosets(const FiniteGroup& g, const Ground& ground, Mask subgroup) {
  return cosets(g, ground, subgroup, /*right=*/true);
}

Equiv left_cosets(const FiniteGroup& g, const Ground& ground, Mask subgroup) {
  return cosets(g, ground, subgroup, /*right=*/false);
}

namespace {

// Greedy minimal generating sequence: scan elements in id order, keep
// those enlarging the generated subgroup.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<bool> closed(g.size(), false);
  closed[g.identity()] = true;
  int closed_count = 1;
  for (int x = 0; x < g.size() && closed_count < g.size(); ++x) {
    if (closed[x]) continue;
    gens.push_back(x);
    // Re-close from scratch with the enlarged generator set.
    std::fill(closed.begin(), closed.end(), false);
    closed[g.identity()] = true;
    std::vector<int> frontier{g.identity()};
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      for (int gen : gens) {
        int nxt = g.mul(cur, gen);
        if (!closed[nxt]) {
          closed[nxt] = true;
          frontier.push_back(nxt);
        }
      }
    }
    closed_count = static_cast<int>(std::count(closed.begin(), closed.end(), true));
  }
  return gens;
}

// Each element expressed as parent * generator, in BFS order.
struct Words {
  std::vector<int> order;                 // BFS order, identity first
  std::vector<std::pair<int, int>> from;  // element -> (parent, gen index)
};

Words element_words(const FiniteGroup& g, const std::vector<int>& gens) {
  Words w;
  w.from.assign(g.size(), {-1, -1});
  std::vector<bool> seen(g.size(), false);
  seen[g.identity()] = true;
  w.order.push_back(g.identity());
  for (std::size_t head = 0; head < w.order.size(); ++head) {
    int cur = w.order[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int nxt = g.mul(cur, gens[j]);
      if (!seen[nxt]) {
        seen[nxt] = true;
        w.from[nxt] = {cur, static_cast<int>(j)};
        w.order.push_back(nxt);
      }
    }
  }
  return w;
}

bool try_images(const FiniteGroup& g, const FiniteGroup& h,
                const std::vector<int>& gens, const Words& words,
                const std::vector<int>& images) {
  std::vector<int> phi(g.size(), -1);
  phi[g.identity()] = h.identity();
  for (std::size_t i = 1; i < words.order.size(); ++i) {
    int e = words.order[i];
    auto [parent, gen_idx] = words.from[e];
    phi[e] = h.mul(phi[parent], images[gen_idx]);
  }
  std::vector<bool> hit(h.size(), false);
  for (int v : phi) {
    if (v < 0 || hit[v]) return false;
    hit[v] = true;
  }
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (phi[g.mul(x, y)] != h.mul(phi[x], phi[y])) return false;
  return true;
}

bool search_images(const FiniteGroup& g, const FiniteGroup& h,
                   const std::vector<int>& gens, const Words& words,
                   std::vector<int>& images, std::size_t depth) {
  if (depth == gens.size()) return try_images(g, h, gens, words, images);
  int want_order = g.order_of(gens[depth]);
  for (int cand = 0; cand < h.size(); ++cand) {
    if (h.order_of(cand) != want_order) continue;
    images[depth] = cand;
    if (search_images(g, h, gens, words, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.size() != h.size()) return false;
  std::vector<int> og, oh;
  for (int x = 0; x < g.size(); ++x) og.push_back(g.order_of(x));
  for (int x = 0; x < h.size(); ++x) oh.push_back(h.order_of(x));
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh) return false;

  auto gens = generating_sequence(g);
  auto words = element_words(g, gens);
  std::vector<int> images(gens.size(), -1);
  return search_images(g, h, gens, words, images, 0);
}

}  // namespace associoid
