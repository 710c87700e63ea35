#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace associoid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when values built over distinct ground sets are mixed.
class GroundMismatch : public Error {
 public:
  using Error::Error;
};

/**
 * A finite ground set with elements 0..size-1, optionally labelled.
 *
 * Ground sets are compared by identity, never by size: two independently
 * created sets of equal size are distinct, so subsets and relations over
 * one cannot silently be combined with values over the other.
 */
class GroundSet {
 public:
  explicit GroundSet(int size) : size_(size) {
    if (size < 0 || size > kMaxSize)
      throw Error("ground set size out of range: " + std::to_string(size));
  }
  GroundSet(int size, std::vector<std::string> labels)
      : size_(size), labels_(std::move(labels)) {
    if (size < 0 || size > kMaxSize)
      throw Error("ground set size out of range: " + std::to_string(size));
    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != size_)
        throw Error("label list length does not match ground set size");
      for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
          if (labels_[i] == labels_[j])
            throw Error("duplicate ground set label: " + labels_[i]);
    }
  }

  int size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int id) const { return labels_.at(id); }
  std::string name_of(int id) const {
    return has_labels() ? labels_[id] : std::to_string(id);
  }

  // Bit masks fit in one machine word.
  static constexpr int kMaxSize = 64;

 private:
  int size_;
  std::vector<std::string> labels_;
};

using Ground = std::shared_ptr<const GroundSet>;
using Mask = std::uint64_t;

inline Ground make_ground(int size) {
  return std::make_shared<const GroundSet>(size);
}

inline Ground make_ground(int size, std::vector<std::string> labels) {
  return std::make_shared<const GroundSet>(size, std::move(labels));
}

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline void require_same_ground(const Ground& a, const Ground& b,
                                const char* what) {
  if (a != b)
    throw GroundMismatch(std::string("incompatible ground sets in ") + what);
}

/// A subset of a ground set, stored as a membership bit mask.
class Subset {
 public:
  Subset(Ground ground, Mask bits) : ground_(std::move(ground)), bits_(bits) {
    if (bits_ & ~full_mask(ground_->size()))
      throw Error("subset bit outside ground set");
  }

  static Subset empty(Ground g) { return Subset(std::move(g), 0); }
  static Subset all(Ground g) {
    Mask m = full_mask(g->size());
    return Subset(std::move(g), m);
  }
  static Subset of(Ground g, std::initializer_list<int> ids) {
    Mask m = 0;
    for (int id : ids) m |= Mask{1} << id;
    return Subset(std::move(g), m);
  }
  static Subset of(Ground g, const std::vector<int>& ids) {
    Mask m = 0;
    for (int id : ids) m |= Mask{1} << id;
    return Subset(std::move(g), m);
  }

  const Ground& ground() const { return ground_; }
  Mask bits() const { return bits_; }
  int count() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int id) const { return (bits_ >> id) & 1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  bool operator==(const Subset& o) const {
    return ground_ == o.ground_ && bits_ == o.bits_;
  }

  Subset operator&(const Subset& o) const {
    require_same_ground(ground_, o.ground_, "subset intersection");
    return Subset(ground_, bits_ & o.bits_);
  }
  Subset operator|(const Subset& o) const {
    require_same_ground(ground_, o.ground_, "subset union");
    return Subset(ground_, bits_ | o.bits_);
  }
  bool subset_of(const Subset& o) const {
    require_same_ground(ground_, o.ground_, "subset inclusion");
    return (bits_ & ~o.bits_) == 0;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += ground_->name_of(e);
      first = false;
    }
    return s + "}";
  }

 private:
  Ground ground_;
  Mask bits_;
};

// Canonical order on subsets: lexicographic in the membership bit string,
// element 0 read first. The smallest differing element decides; absent
// sorts before present.
inline bool bitstring_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return false;
  Mask low = d & (~d + 1);
  return (a & low) == 0;
}

inline bool bitstring_less(const Subset& a, const Subset& b) {
  return bitstring_less(a.bits(), b.bits());
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (Mask t = m; t; t &= t - 1) {
    if (!first) s += ",";
    s += std::to_string(std::countr_zero(t));
    first = false;
  }
  return s + "}";
}

}  // namespace associoid
