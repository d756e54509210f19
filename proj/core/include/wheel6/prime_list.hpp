#pragma once

#include <cstdint>
#include <vector>

namespace wheel6 {

// Ascending primes <= limit.
struct PrimeList {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  std::size_t size() const noexcept { return primes.size(); }

  friend bool operator==(const PrimeList&, const PrimeList&) = default;
};

}  // namespace wheel6
