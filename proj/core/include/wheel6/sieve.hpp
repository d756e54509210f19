#pragma once

#include <cstdint>

#include "wheel6/prime_list.hpp"

namespace wheel6 {

class CompositeIndexTable;

// All primes <= limit: 2, 3, then the unmarked 6k-1 and 6k+1 from a
// composite-index table with kmax = ceil((limit + 1) / 6), interleaved by value.
// Throws RangeError for limit < 2 or limit > kMaxSieveLimit.
PrimeList primes_up_to(std::uint64_t limit);

// Same emission over a caller-supplied table. Throws OutOfTableRange if the
// table is too small for limit.
PrimeList primes_up_to(std::uint64_t limit, const CompositeIndexTable& table);

// Wheel index count needed to cover every candidate <= limit.
std::uint64_t sieve_kmax(std::uint64_t limit) noexcept;

}  // namespace wheel6
