#include <doctest.h>

#include <set>

#include "wheel6/errors.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/primality.hpp"
#include "wheel6/selectors.hpp"
#include "wheel6/sieve.hpp"

using namespace wheel6;

TEST_CASE("primes_up_to examples") {
  using V = std::vector<std::uint64_t>;
  CHECK(primes_up_to(10).primes == V{2, 3, 5, 7});
  CHECK(primes_up_to(61).primes ==
        V{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61});
  CHECK(primes_up_to(100).size() == 25);
  CHECK(primes_up_to(2).primes == V{2});
  CHECK(primes_up_to(3).primes == V{2, 3});
  CHECK(primes_up_to(4).primes == V{2, 3});
  CHECK(primes_up_to(5).primes == V{2, 3, 5});
  CHECK(primes_up_to(6).primes == V{2, 3, 5});
  CHECK(primes_up_to(7).primes == V{2, 3, 5, 7});
}

TEST_CASE("primes_up_to rejects out-of-range limits") {
  CHECK_THROWS_AS(primes_up_to(1), RangeError);
  CHECK_THROWS_AS(primes_up_to(kMaxSieveLimit + 1), RangeError);
  CHECK_THROWS_AS(primes_up_to(1000, build_composite_index_table(10)), OutOfTableRange);
}

TEST_CASE("sieve_kmax covers the last partial wheel block") {
  CHECK(sieve_kmax(10) == 2);
  CHECK(sieve_kmax(11) == 2);
  CHECK(sieve_kmax(12) == 3);
  for (std::uint64_t limit = 2; limit < 500; ++limit) {
    const std::uint64_t k = sieve_kmax(limit);
    REQUIRE(6 * k + 5 > limit);  // 6(k+1) - 1 > limit: nothing beyond kmax
  }
}

TEST_CASE("wheel sieve equals Eratosthenes") {
  for (std::uint64_t n : {2ULL, 3ULL, 25ULL, 26ULL, 100ULL, 10'000ULL, 1'000'000ULL}) {
    REQUIRE(primes_up_to(n) == oracle::eratosthenes(n));
  }
  for (std::uint64_t n = 2; n <= 400; ++n) REQUIRE(primes_up_to(n) == oracle::eratosthenes(n));
}

TEST_CASE("PrimeList shape invariants") {
  const auto list = primes_up_to(100'000);
  REQUIRE(list.primes[0] == 2);
  REQUIRE(list.primes[1] == 3);
  for (std::size_t i = 1; i < list.primes.size(); ++i) {
    REQUIRE(list.primes[i] > list.primes[i - 1]);
    if (list.primes[i] > 3) REQUIRE((list.primes[i] % 6 == 1 || list.primes[i] % 6 == 5));
  }
}

TEST_CASE("set-difference construction agrees with the bitmap construction") {
  const std::uint64_t N = 200'000;
  const std::uint64_t kmax = sieve_kmax(N);
  std::set<std::uint64_t> a_part, b_part;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if (6 * k - 1 <= N) a_part.insert(6 * k - 1);
    if (6 * k + 1 <= N) b_part.insert(6 * k + 1);
  }
  for (auto k : enumerate_selector_indices(SelectorKind::S1, kmax)) a_part.erase(6 * k - 1);
  for (auto kind : {SelectorKind::S2, SelectorKind::S3}) {
    for (auto k : enumerate_selector_indices(kind, kmax)) b_part.erase(6 * k + 1);
  }

  std::set<std::uint64_t> emitted_a, emitted_b;
  for (auto p : primes_up_to(N).primes) {
    if (p % 6 == 5) emitted_a.insert(p);
    if (p % 6 == 1) emitted_b.insert(p);
  }
  CHECK(emitted_a == a_part);
  CHECK(emitted_b == b_part);
}
