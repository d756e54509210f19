#include "wheel6/oracle.hpp"

#include <string>
#include <vector>

#include "wheel6/errors.hpp"

namespace wheel6::oracle {

PrimeList eratosthenes(std::uint64_t limit) {
  if (limit > kMaxSieveLimit) {
    throw RangeError("eratosthenes: limit " + std::to_string(limit) + " exceeds the ceiling");
  }
  PrimeList out{limit, {}};
  if (limit < 2) return out;

  // Odd numbers only: slot i holds 2i + 1.
  const std::uint64_t slots = (limit + 1) / 2;
  std::vector<bool> composite(slots, false);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (composite[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  out.primes.push_back(2);
  for (std::uint64_t i = 1; i < slots; ++i) {
    if (!composite[i]) out.primes.push_back(2 * i + 1);
  }
  return out;
}

OracleVerdict trial_division(std::uint64_t n) {
  if (n == 0) throw RangeError("trial_division: n must be >= 1");
  if (n == 1) return {OracleClass::Unit, std::nullopt};
  for (std::uint64_t m = 2; m <= n / m; ++m) {
    if (n % m == 0) return {OracleClass::Composite, m};
  }
  return {OracleClass::Prime, std::nullopt};
}

}  // namespace wheel6::oracle
