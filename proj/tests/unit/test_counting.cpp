#include <doctest.h>

#include <sstream>

#include "wheel6/counting.hpp"
#include "wheel6/errors.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/primality.hpp"
#include "wheel6/selectors.hpp"

using namespace wheel6;

namespace {

// Counts products directly: ordered A x B pairs, unordered-with-repetition
// A x A and B x B pairs, over the first s elements of each class.
CutCounts enumerate_cuts(std::uint64_t s) {
  std::uint64_t a = 0, b = 0;
  for (std::uint64_t x = 1; x <= s; ++x) {
    for (std::uint64_t y = 1; y <= s; ++y) {
      if (((6 * x - 1) * (6 * y + 1)) % 6 == 5) ++a;
      if (y >= x) {
        if (((6 * x - 1) * (6 * y - 1)) % 6 == 1) ++b;
        if (((6 * x + 1) * (6 * y + 1)) % 6 == 1) ++b;
      }
    }
  }
  return {s, a, b};
}

}  // namespace

TEST_CASE("cut_counts examples") {
  CHECK(cut_counts(10) == CutCounts{10, 100, 110});
  CHECK(cut_counts(1) == CutCounts{1, 1, 2});
  CHECK(cut_counts(1000) == CutCounts{1000, 1'000'000, 1'001'000});
  CHECK_THROWS_AS(cut_counts(0), RangeError);
  CHECK_THROWS_AS(cut_counts(1ULL << 32), RangeError);
}

TEST_CASE("cut_counts matches direct enumeration") {
  for (std::uint64_t s = 1; s <= 60; ++s) REQUIRE(cut_counts(s) == enumerate_cuts(s));
}

TEST_CASE("cut_ratio is exactly 1 + 1/s") {
  CHECK(cut_ratio(10) == Rational{11, 10});
  CHECK(cut_ratio(1000) == Rational{1001, 1000});
  CHECK(cut_ratio(1) == Rational{2, 1});
  for (std::uint64_t s : {1ULL, 2ULL, 7ULL, 10ULL, 1000ULL, 10'000ULL, 65'536ULL}) {
    const Rational r = cut_ratio(s);
    // r - 1 = 1/s  <=>  num - den = 1 and den = s
    REQUIRE(r.num - r.den == 1);
    REQUIRE(r.den == s);
  }
}

TEST_CASE("formula_prime_count examples") {
  CHECK(formula_prime_count(ResidueClass::A, 10) == 9);
  CHECK(formula_prime_count(ResidueClass::B, 10) == 2);
  CHECK(formula_prime_count(ResidueClass::A, 20) == 11);
  CHECK(formula_prime_count(ResidueClass::A, 1) == 1);
  CHECK(formula_prime_count(ResidueClass::B, 1) == 1);
  // the quadratic term dominates eventually
  CHECK(formula_prime_count(ResidueClass::B, 1000) < 0);
  CHECK_THROWS_AS(formula_prime_count(ResidueClass::Six, 10), RangeError);
}

TEST_CASE("exact_prime_count examples") {
  CHECK(exact_prime_count(ResidueClass::A, 10) == 9);
  CHECK(exact_prime_count(ResidueClass::B, 10) == 7);
  CHECK(exact_prime_count(ResidueClass::A, 20) == 15);
  CHECK_THROWS_AS(exact_prime_count(ResidueClass::A, 30, build_composite_index_table(20)),
                  OutOfTableRange);
}

TEST_CASE("exact counts + selector images = k for k <= 10^4") {
  const std::uint64_t K = 10'000;
  const auto table = build_composite_index_table(K);
  const auto rows = count_report(K, table);
  const auto s1 = enumerate_selector_indices(SelectorKind::S1, K);
  auto s2 = enumerate_selector_indices(SelectorKind::S2, K);
  const auto s3 = enumerate_selector_indices(SelectorKind::S3, K);
  std::vector<bool> b_hit(K + 1, false);
  for (auto k : s2) b_hit[k] = true;
  for (auto k : s3) b_hit[k] = true;

  std::size_t ai = 0;
  std::uint64_t b_union = 0, oracle_a = 0, oracle_b = 0;
  for (std::uint64_t k = 1; k <= K; ++k) {
    while (ai < s1.size() && s1[ai] <= k) ++ai;
    b_union += b_hit[k];
    oracle_a += oracle::is_prime(6 * k - 1);
    oracle_b += oracle::is_prime(6 * k + 1);
    const auto& row = rows[k - 1];
    REQUIRE(row.k == k);
    REQUIRE(row.exact_a + ai == k);
    REQUIRE(row.exact_b + b_union == k);
    REQUIRE(row.exact_a == oracle_a);
    REQUIRE(row.exact_b == oracle_b);
    if (k > 1) {
      REQUIRE(row.exact_a >= rows[k - 2].exact_a);
      REQUIRE(row.exact_b >= rows[k - 2].exact_b);
    }
  }
}

TEST_CASE("count_report rows") {
  const auto r10 = count_report(10);
  REQUIRE(r10.size() == 10);
  CHECK(r10[9].exact_a == 9);
  CHECK(r10[9].formula_a == 9);
  CHECK(r10[9].dev_a == 0);
  CHECK(r10[9].exact_b == 7);
  CHECK(r10[9].formula_b == 2);
  CHECK(r10[9].dev_b == 5);

  const auto r1 = count_report(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].exact_a == 1);
  CHECK(r1[0].formula_a == 1);
  CHECK(r1[0].exact_b == 1);
  CHECK(r1[0].formula_b == 1);
  CHECK(r1[0].ratio_ba == Rational{1, 1});

  const auto r20 = count_report(20);
  CHECK(r20[19].dev_a == 4);
  CHECK_THROWS_AS(count_report(0), RangeError);
}

TEST_CASE("count report CSV layout") {
  std::ostringstream out;
  write_count_report_csv(out, count_report(10));
  const std::string csv = out.str();
  CHECK(csv.rfind(std::string(kCountReportHeader) + "\n", 0) == 0);
  CHECK(csv.find("1,5,0,7,0,1,1,0,1,1,0,1\n") != std::string::npos);
  CHECK(csv.find("\n4,23,0,25,1,4,4,0,3,") != std::string::npos);
  CHECK(csv.find("\n10,59,0,61,0,9,9,0,7,2,5,0.777777777778\n") != std::string::npos);
  CHECK(csv.find("\r") == std::string::npos);
  CHECK(csv.find(",\n") == std::string::npos);
}

TEST_CASE("format_ratio uses 12 significant digits") {
  CHECK(format_ratio(1.0) == "1");
  CHECK(format_ratio(7.0 / 9.0) == "0.777777777778");
  CHECK(format_ratio(24524.0 / 24572.0) == "0.998046557057");
}
