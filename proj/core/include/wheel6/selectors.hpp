#pragma once

// Selection rules. Each maps an index pair (i, j), i, j >= 1, to a wheel
// index k whose candidate is composite:
//
//   S1: k = 6ij - i + j   6k - 1 = (6i + 1)(6j - 1)   class A
//   S2: k = 6ij + i + j   6k + 1 = (6i + 1)(6j + 1)   class B
//   S3: k = 6ij - i - j   6k + 1 = (6i - 1)(6j - 1)   class B
//
// Conversely every composite 6k-1 lies in image(S1), and every composite 6k+1
// lies in image(S2) u image(S3).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wheel6/errors.hpp"
#include "wheel6/residue.hpp"

namespace wheel6 {

enum class SelectorKind : std::uint8_t { S1, S2, S3 };

inline constexpr SelectorKind kAllSelectorKinds[] = {SelectorKind::S1, SelectorKind::S2,
                                                     SelectorKind::S3};

// Class targeted by a rule: A for S1, B for S2 and S3.
ResidueClass target_class(SelectorKind kind) noexcept;
std::string_view to_string(SelectorKind kind) noexcept;

// A solution (kind, i, j) of k = S(i, j), plus the factorization it induces.
// i and j keep the rule's own roles, so for S1 factor 6i+1 may be the larger.
struct SelectorWitness {
  SelectorKind kind = SelectorKind::S1;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t k = 0;
  std::uint64_t factor_lo = 0;
  std::uint64_t factor_hi = 0;

  // The candidate 6k -/+ 1 the witness proves composite.
  std::uint64_t value() const noexcept { return factor_lo * factor_hi; }

  friend bool operator==(const SelectorWitness&, const SelectorWitness&) = default;
};

// Builds the witness for a known pair. Throws RangeError on overflow.
SelectorWitness make_witness(SelectorKind kind, std::uint64_t i, std::uint64_t j);

// S(i, j). Throws RangeError if i or j is 0 or the result exceeds kMaxIndex.
std::uint64_t selector_value(SelectorKind kind, std::uint64_t i, std::uint64_t j);

// Same rule written over r = i - 1, s = j - 1 (r, s >= 0):
//   S1: 6 + 7s + (5 + 6s) r
//   S2: 8 + 7s + (7 + 6s) r
//   S3: 4 + 5s + (5 + 6s) r
std::uint64_t selector_value_shifted(SelectorKind kind, std::uint64_t r, std::uint64_t s);

// Smallest-factor witness that 6k-1 (class A) or 6k+1 (class B) is composite,
// or nullopt if none exists, i.e. the candidate is prime. For class B the S3
// factor 6t-1 is tried before the S2 factor 6t+1 at every step t.
// Throws RangeError for a class other than A/B or k outside [1, kMaxIndex].
std::optional<SelectorWitness> find_composite_witness(ResidueClass cls, std::uint64_t k);

namespace detail {

constexpr std::uint64_t selector_value_unchecked(SelectorKind kind, std::uint64_t i,
                                                 std::uint64_t j) noexcept {
  switch (kind) {
    case SelectorKind::S1: return 6 * i * j - i + j;
    case SelectorKind::S2: return 6 * i * j + i + j;
    case SelectorKind::S3: return 6 * i * j - i - j;
  }
  return 0;
}

}  // namespace detail

// Calls fn(i, j, k) for every pair with k = S(i, j) <= kmax, i ascending,
// then j ascending. S is increasing in each index, so the inner loop stops
// at the first overshoot and the outer loop stops once S(i, 1) > kmax.
template <typename Fn>
void for_each_selector_pair(SelectorKind kind, std::uint64_t kmax, Fn&& fn) {
  if (kmax > kMaxIndex) kmax = kMaxIndex;
  for (std::uint64_t i = 1;; ++i) {
    std::uint64_t k = detail::selector_value_unchecked(kind, i, 1);
    if (k > kmax) break;
    // S(i, j + 1) - S(i, j) = 6i + 1 (S1, S2) or 6i - 1 (S3)
    const std::uint64_t step = kind == SelectorKind::S3 ? 6 * i - 1 : 6 * i + 1;
    for (std::uint64_t j = 1; k <= kmax; ++j, k += step) fn(i, j, k);
  }
}

// Every (i, j) with S(i, j) <= kmax, in ascending (i, j) order. Loops stop
// on value overshoot; both orderings of symmetric pairs are listed.
std::vector<SelectorWitness> enumerate_selector_pairs(SelectorKind kind, std::uint64_t kmax);

// Deduplicated ascending image of S restricted to [1, kmax].
std::vector<std::uint64_t> enumerate_selector_indices(SelectorKind kind, std::uint64_t kmax);

// Closed-form index-bound estimators. Not tight bounds and never used to
// drive a correctness-critical loop.
//   S1: (floor((k-1)/5), floor((k+1)/7))
//   S2: (floor((k-1)/7), ceil((k-1)/7))
//   S3: (floor((k+1)/5), ceil((k+1)/5))
struct IndexBounds {
  std::int64_t i_max = 0;
  std::int64_t j_max = 0;

  friend bool operator==(const IndexBounds&, const IndexBounds&) = default;
};

IndexBounds estimated_index_bounds(SelectorKind kind, std::uint64_t k);

// i_max * j_max, counting duplicates and out-of-range pairs.
std::int64_t estimated_selector_count(SelectorKind kind, std::uint64_t k);

}  // namespace wheel6
