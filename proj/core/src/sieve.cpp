#include "wheel6/sieve.hpp"

#include <string>

#include "wheel6/errors.hpp"
#include "wheel6/primality.hpp"

namespace wheel6 {

std::uint64_t sieve_kmax(std::uint64_t limit) noexcept { return (limit + 1 + 5) / 6; }

namespace {

void check_limit(std::uint64_t limit) {
  if (limit < 2) throw RangeError("primes_up_to: limit must be >= 2");
  if (limit > kMaxSieveLimit) {
    throw RangeError("primes_up_to: limit " + std::to_string(limit) + " exceeds the ceiling");
  }
}

}  // namespace

PrimeList primes_up_to(std::uint64_t limit, const CompositeIndexTable& table) {
  check_limit(limit);
  const std::uint64_t kmax = sieve_kmax(limit);
  if (kmax > table.kmax()) throw OutOfTableRange(kmax, table.kmax());

  PrimeList out{limit, {}};
  out.primes.push_back(2);
  if (limit >= 3) out.primes.push_back(3);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    const std::uint64_t a = 6 * k - 1;
    if (a > limit) break;
    if (!table.a_composite(k)) out.primes.push_back(a);
    const std::uint64_t b = 6 * k + 1;
    if (b <= limit && !table.b_composite(k)) out.primes.push_back(b);
  }
  return out;
}

PrimeList primes_up_to(std::uint64_t limit) {
  check_limit(limit);
  return primes_up_to(limit, build_composite_index_table(sieve_kmax(limit)));
}

}  // namespace wheel6
