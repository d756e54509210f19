#pragma once

// Mod-6 partition of the naturals.
//
//   1            UNIT
//   6k - 4       TWO     (2, 8, 14, ...)
//   6k - 3       THREE   (3, 9, 15, ...)
//   6k - 2       FOUR
//   6k - 1       A       (5, 11, 17, ...)
//   6k           SIX
//   6k + 1       B       (7, 13, 19, ...)
//
// with k >= 1 for every class except UNIT. Only A and B can hold primes
// beyond 2 and 3.

#include <cstdint>
#include <optional>
#include <string_view>

namespace wheel6 {

enum class ResidueClass : std::uint8_t { Unit, Two, Three, Four, A, Six, B };

enum class TrivialStatus : std::uint8_t {
  PrimeException,   // 2 and 3
  AlwaysComposite,  // TWO/THREE past k = 1, FOUR, SIX
  Candidate,        // A and B
  Unit,             // n = 1
};

struct ClassifiedNumber {
  std::uint64_t n = 0;
  ResidueClass cls = ResidueClass::Unit;
  std::optional<std::uint64_t> k;  // empty for UNIT

  friend bool operator==(const ClassifiedNumber&, const ClassifiedNumber&) = default;
};

// Throws RangeError for n = 0 or n > kMaxValue.
ClassifiedNumber classify(std::uint64_t n);

// Class formula at k. Throws RangeError for UNIT, k = 0, or a result above
// kMaxValue.
std::uint64_t value_of(ResidueClass cls, std::uint64_t k);

// Throws RangeError for k = 0 on a non-UNIT class.
TrivialStatus trivial_status(ResidueClass cls, std::uint64_t k);

std::string_view to_string(ResidueClass cls) noexcept;
std::string_view to_string(TrivialStatus status) noexcept;

}  // namespace wheel6
