#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "associoid/core.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace associoid {

enum class LawKind {
  kParaAssociativity,
  kIdempotent,
  kChaslesLeft,
  kChaslesRight,
  kSymmetry,
  kConditionC,
};

const char* law_name(LawKind law);

struct LawWitness {
  // Inputs of the failing instance (bit masks for power-set laws,
  // element ids for element-level laws) and the evaluated sides.
  std::vector<std::int64_t> inputs;
  std::vector<std::pair<std::string, std::int64_t>> sides;
  std::string text;
};

struct TernaryLawReport {
  LawKind law;
  bool holds = true;
  std::optional<LawWitness> witness;
  std::uint64_t instance_space = 0;  // 0 means too large to represent
  std::uint64_t checked = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;

  std::string summary() const;
};

struct CheckPolicy {
  std::uint64_t budget = 2'000'000;
  std::uint64_t seed = 0;
  bool force_exhaustive = false;
  bool parallel = true;
};

namespace check_detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based per-instance generator: instance streams do not depend on
// evaluation order, so serial and parallel scans sample identically.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t instance)
      : state_(seed ^ splitmix64(instance * 0x2545F4914F6CDD1DULL + 1)) {}

  std::uint64_t next() {
    state_ = splitmix64(state_);
    return state_;
  }

  Mask next_mask(int bits) { return next() & full_mask(bits); }

  int next_below(int n) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

 private:
  std::uint64_t state_;
};

template <class Ok>
std::optional<std::uint64_t> first_failure_serial(std::uint64_t n, Ok&& ok) {
  for (std::uint64_t i = 0; i < n; ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

template <class Ok>
std::optional<std::uint64_t> first_failure_parallel(std::uint64_t n, Ok&& ok) {
#ifdef _OPENMP
  long long best = static_cast<long long>(n);
#pragma omp parallel for reduction(min : best) schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    if (i < best && !ok(static_cast<std::uint64_t>(i))) best = i;
  }
  if (best < static_cast<long long>(n))
    return static_cast<std::uint64_t>(best);
  return std::nullopt;
#else
  return first_failure_serial(n, ok);
#endif
}

constexpr std::uint64_t kParallelThreshold = 1 << 12;

}  // namespace check_detail

/// Smallest failing instance index under the predicate, or nullopt.
/// The parallel path partitions the index range across OpenMP threads;
/// the result is the same as the serial scan.
template <class Ok>
std::optional<std::uint64_t> find_first_failure(std::uint64_t n, Ok&& ok,
                                                bool parallel = true) {
  if (parallel && n >= check_detail::kParallelThreshold)
    return check_detail::first_failure_parallel(n, ok);
  return check_detail::first_failure_serial(n, ok);
}

/**
 * Generic driver for laws quantified over k-tuples drawn from a space of
 * `space` values per slot. Exhausts when space^k fits the policy budget,
 * otherwise checks `budget` seeded random tuples. `eval` receives the
 * tuple and, on failure, fills the witness.
 */
template <class Eval>
TernaryLawReport run_tuple_check(LawKind law, int arity, std::uint64_t space,
                                 const CheckPolicy& policy, Eval&& eval) {
  TernaryLawReport report;
  report.law = law;
  report.seed = policy.seed;

  // space^arity, saturating.
  std::uint64_t total = 1;
  bool overflow = false;
  for (int i = 0; i < arity; ++i) {
    if (space != 0 && total > ~std::uint64_t{0} / space) {
      overflow = true;
      break;
    }
    total *= space;
  }
  report.instance_space = overflow ? 0 : total;

  bool exhaustive =
      !overflow && (policy.force_exhaustive || total <= policy.budget);
  report.exhaustive = exhaustive;
  std::uint64_t n = exhaustive ? total : policy.budget;
  report.checked = n;
  if (space == 0 || n == 0) return report;

  auto decode = [&](std::uint64_t idx, std::vector<std::uint64_t>& tuple) {
    tuple.resize(arity);
    if (exhaustive) {
      for (int j = arity - 1; j >= 0; --j) {
        tuple[j] = idx % space;
        idx /= space;
      }
    } else {
      check_detail::InstanceRng rng(policy.seed, idx);
      for (int j = 0; j < arity; ++j)
        tuple[j] = rng.next() % space;
    }
  };

  auto fail = find_first_failure(
      n,
      [&](std::uint64_t idx) {
        std::vector<std::uint64_t> tuple;
        decode(idx, tuple);
        return eval(tuple, nullptr);
      },
      policy.parallel);

  if (fail) {
    report.holds = false;
    std::vector<std::uint64_t> tuple;
    decode(*fail, tuple);
    LawWitness w;
    eval(tuple, &w);
    report.witness = std::move(w);
  }
  return report;
}

}  // namespace associoid
