#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "associoid/relations.hpp"

namespace associoid {

class NotEquivalence : public Error {
 public:
  NotEquivalence(const std::string& msg, std::pair<int, int> witness)
      : Error(msg), witness(witness) {}
  std::pair<int, int> witness;
};

class NotTransversal : public Error {
 public:
  NotTransversal(const std::string& msg, int block) : Error(msg), block(block) {}
  int block;  // index of the offending class, -1 if not class-specific
};

/**
 * A partial equivalence relation: a partition of a subset of the ground
 * set into disjoint nonempty blocks. Total when the domain is the whole
 * ground set. Blocks are kept sorted by minimal element.
 */
class Equiv {
 public:
  Equiv(Ground ground, std::vector<Mask> blocks);

  static Equiv identity(const Ground& g);               // singleton blocks
  static Equiv indiscrete(const Ground& g);             // one block, all of g
  static Equiv from_blocks(const Ground& g,
                           const std::vector<std::vector<int>>& blocks);

  /// Block partition of a symmetric transitive relation.
  static Equiv from_relation(const BinRel& r);

  const Ground& ground() const { return ground_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  Mask block_mask(int i) const { return blocks_[i]; }
  const std::vector<Mask>& blocks() const { return blocks_; }

  /// Index of the block containing id, or -1 when id is outside the domain.
  int block_of(int id) const { return block_of_[id]; }
  bool in_domain(int id) const { return block_of_[id] >= 0; }
  Mask class_of(int id) const {
    int b = block_of_[id];
    return b < 0 ? 0 : blocks_[b];
  }
  bool related(int u, int v) const {
    int b = block_of_[u];
    return b >= 0 && b == block_of_[v];
  }

  Subset dom() const { return Subset(ground_, dom_); }
  bool is_total() const { return dom_ == full_mask(ground_->size()); }

  BinRel as_relation() const;

  /// Saturation a(x): union of all blocks meeting x.
  Mask saturate(Mask x) const;

  bool operator==(const Equiv& o) const {
    return ground_ == o.ground_ && blocks_ == o.blocks_;
  }

 private:
  Ground ground_;
  std::vector<Mask> blocks_;
  std::vector<int> block_of_;
  Mask dom_;
};

bool commutes(const Equiv& a, const Equiv& b);

/// First witness pair in the symmetric difference of ab and ba, if any.
std::optional<std::pair<int, int>> commutation_witness(const Equiv& a,
                                                       const Equiv& b);

/// x meets every class of a exactly once.
bool transversal(const Subset& x, const Equiv& a);
/// x meets every class of a at most once.
bool locally_transversal(const Subset& x, const Equiv& a);

/// a o b = O and a cap b = I, both relations total on the same ground.
bool transversal_pair(const Equiv& a, const Equiv& b);

/**
 * The canonical map w -> ([w]_a, [w]_b) together with its inverse by
 * class intersection, available exactly when (a,b) is a transversal pair.
 */
class CanonicalMap {
 public:
  CanonicalMap(const Equiv& a, const Equiv& b);

  std::pair<int, int> classes_of(int w) const {
    return {a_.block_of(w), b_.block_of(w)};
  }

  bool is_bijective() const;

  /// Element [xi]_a cap [zeta]_b; throws NotTransversal with the witness
  /// intersection when it is empty or has two or more elements.
  int inverse(int a_class, int b_class) const;

  const Equiv& a() const { return a_; }
  const Equiv& b() const { return b_; }

 private:
  Equiv a_;
  Equiv b_;
};

/// Generalized projection P^a_x = I_x o a as a raw relation.
BinRel gen_projection(const Equiv& a, const Subset& x);

/// The operator form of P^a_x: w -> the unique x-representative of [w]_a.
/// Requires a total and x transversal to a.
std::vector<int> as_operator(const Equiv& a, const Subset& x);

/// Induced relation on the power set: a I_x a = a I_y a, equivalently
/// equality of saturations.
bool induced_related(const Equiv& a, const Subset& x, const Subset& y);

/// The induced equivalence restricted to a finite carrier of subsets:
/// blocks of carrier indices with equal saturation under a.
Equiv induced_equiv_on(const Equiv& a, const std::vector<Subset>& carrier,
                       const Ground& carrier_ground);

// Enumeration of (local) sections and bisections. Visitors run in the
// canonical order: lexicographic in the tuple of chosen representatives,
// blocks ordered by minimal element. Returning false stops early.
void for_each_section(const Equiv& a, const std::function<bool(Mask)>& visit);
void for_each_local_section(const Equiv& a,
                            const std::function<bool(Mask)>& visit);

std::vector<Subset> sections(const Equiv& a);                      // U_a
std::vector<Subset> bisections(const Equiv& a, const Equiv& b);    // U_ab
std::vector<Subset> local_sections(const Equiv& a);                // U_a^loc
std::vector<Subset> local_bisections(const Equiv& a, const Equiv& b);

std::uint64_t section_count(const Equiv& a);

}  // namespace associoid
