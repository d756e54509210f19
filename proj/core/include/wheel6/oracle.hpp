#pragma once

// Classical reference: sieve of Eratosthenes and trial division. Shares
// nothing with the wheel/selector code beyond integer types, so agreement
// between the two is meaningful.

#include <cstdint>
#include <optional>

#include "wheel6/prime_list.hpp"

namespace wheel6::oracle {

enum class OracleClass : std::uint8_t { Prime, Composite, Unit };

struct OracleVerdict {
  OracleClass verdict = OracleClass::Unit;
  std::optional<std::uint64_t> smallest_factor;  // set iff Composite

  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

// Throws RangeError above kMaxSieveLimit.
PrimeList eratosthenes(std::uint64_t limit);

// Throws RangeError for n = 0.
OracleVerdict trial_division(std::uint64_t n);

inline bool is_prime(std::uint64_t n) {
  return n >= 1 && trial_division(n).verdict == OracleClass::Prime;
}

}  // namespace wheel6::oracle
