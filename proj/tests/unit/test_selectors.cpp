#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "wheel6/errors.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/selectors.hpp"

using namespace wheel6;

namespace {

// Brute force over the full (i, j) square; independent of the early-exit
// loops in the library.
std::vector<std::uint64_t> brute_image(SelectorKind kind, std::uint64_t kmax) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 1; i <= kmax; ++i) {
    for (std::uint64_t j = 1; j <= kmax; ++j) {
      std::uint64_t v = 0;
      switch (kind) {
        case SelectorKind::S1: v = 6 * i * j - i + j; break;
        case SelectorKind::S2: v = 6 * i * j + i + j; break;
        case SelectorKind::S3: v = 6 * i * j - i - j; break;
      }
      if (v <= kmax) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("selector_value examples") {
  CHECK(selector_value(SelectorKind::S1, 1, 1) == 6);
  CHECK(selector_value(SelectorKind::S2, 1, 1) == 8);
  CHECK(selector_value(SelectorKind::S3, 1, 2) == 9);
  CHECK(6 * 6 - 1 == 5 * 7);
  CHECK(6 * 8 + 1 == 7 * 7);
  CHECK(6 * 9 + 1 == 5 * 11);
}

TEST_CASE("selector_value rejects zero indices and overflow") {
  CHECK_THROWS_AS(selector_value(SelectorKind::S1, 0, 1), RangeError);
  CHECK_THROWS_AS(selector_value(SelectorKind::S2, 1, 0), RangeError);
  CHECK_THROWS_AS(selector_value(SelectorKind::S2, 1ULL << 31, 1ULL << 31), RangeError);
  CHECK_THROWS_AS(selector_value(SelectorKind::S1, UINT64_MAX, 2), RangeError);
  CHECK_THROWS_AS(selector_value_shifted(SelectorKind::S3, UINT64_MAX, 0), RangeError);
}

TEST_CASE("selector_value_shifted examples") {
  CHECK(selector_value_shifted(SelectorKind::S1, 0, 0) == 6);
  CHECK(selector_value_shifted(SelectorKind::S2, 0, 0) == 8);
  CHECK(selector_value_shifted(SelectorKind::S3, 1, 0) == 9);
}

TEST_CASE("shift equivalence on [0, 1000]^2") {
  for (SelectorKind kind : kAllSelectorKinds) {
    for (std::uint64_t r = 0; r <= 1000; ++r) {
      for (std::uint64_t s = 0; s <= 1000; ++s) {
        REQUIRE(selector_value_shifted(kind, r, s) == selector_value(kind, r + 1, s + 1));
      }
    }
  }
}

TEST_CASE("S2 and S3 are symmetric") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
  for (int t = 0; t < 10'000; ++t) {
    const auto i = dist(rng), j = dist(rng);
    REQUIRE(selector_value(SelectorKind::S2, i, j) == selector_value(SelectorKind::S2, j, i));
    REQUIRE(selector_value(SelectorKind::S3, i, j) == selector_value(SelectorKind::S3, j, i));
  }
}

TEST_CASE("S1 swap law: {6ij-i+j} == {6ij+i-j} for i, j <= 200") {
  std::set<std::uint64_t> lhs, rhs;
  for (std::uint64_t i = 1; i <= 200; ++i) {
    for (std::uint64_t j = 1; j <= 200; ++j) {
      lhs.insert(6 * i * j - i + j);
      rhs.insert(6 * i * j + i - j);
    }
  }
  CHECK(lhs == rhs);
}

TEST_CASE("find_composite_witness examples") {
  const auto w35 = find_composite_witness(ResidueClass::A, 6);
  REQUIRE(w35);
  CHECK(w35->kind == SelectorKind::S1);
  CHECK(w35->i == 1);
  CHECK(w35->j == 1);
  CHECK(w35->factor_lo == 5);
  CHECK(w35->factor_hi == 7);

  CHECK_FALSE(find_composite_witness(ResidueClass::A, 1));

  const auto w55 = find_composite_witness(ResidueClass::B, 9);
  REQUIRE(w55);
  CHECK(*w55 == SelectorWitness{SelectorKind::S3, 1, 2, 9, 5, 11});

  CHECK_FALSE(find_composite_witness(ResidueClass::B, 10));

  // 49 = 7 * 7 via S2
  const auto w49 = find_composite_witness(ResidueClass::B, 8);
  REQUIRE(w49);
  CHECK(*w49 == SelectorWitness{SelectorKind::S2, 1, 1, 8, 7, 7});
}

TEST_CASE("find_composite_witness prefers the smallest factor") {
  // 6*54 + 1 = 325 = 5 * 65 = 13 * 25; S3 with factor 5 wins.
  const auto w = find_composite_witness(ResidueClass::B, 54);
  REQUIRE(w);
  CHECK(w->factor_lo == 5);
  CHECK(w->kind == SelectorKind::S3);
  // 6*32 + 1 = 193 is prime; 6*36 + 1 = 217 = 7 * 31
  CHECK_FALSE(find_composite_witness(ResidueClass::B, 32));
  const auto w217 = find_composite_witness(ResidueClass::B, 36);
  REQUIRE(w217);
  CHECK(w217->factor_lo == 7);
  CHECK(w217->factor_hi == 31);
}

TEST_CASE("find_composite_witness input validation") {
  CHECK_THROWS_AS(find_composite_witness(ResidueClass::Six, 3), RangeError);
  CHECK_THROWS_AS(find_composite_witness(ResidueClass::A, 0), RangeError);
  CHECK_THROWS_AS(find_composite_witness(ResidueClass::A, kMaxIndex + 1), RangeError);
}

TEST_CASE("witness soundness and completeness for k <= 10^5") {
  for (std::uint64_t k = 1; k <= 100'000; ++k) {
    for (ResidueClass cls : {ResidueClass::A, ResidueClass::B}) {
      const std::uint64_t n = cls == ResidueClass::A ? 6 * k - 1 : 6 * k + 1;
      const auto w = find_composite_witness(cls, k);
      const auto ov = oracle::trial_division(n);
      REQUIRE(w.has_value() == (ov.verdict == oracle::OracleClass::Composite));
      if (!w) continue;
      REQUIRE(w->k == k);
      REQUIRE(w->factor_lo * w->factor_hi == n);
      REQUIRE(w->factor_lo >= 5);
      REQUIRE(w->factor_lo <= w->factor_hi);
      REQUIRE(n % w->factor_lo == 0);
      // smallest factor: the oracle's smallest divisor
      REQUIRE(w->factor_lo == *ov.smallest_factor);
      REQUIRE(target_class(w->kind) == cls);
      REQUIRE(selector_value(w->kind, w->i, w->j) == k);
    }
  }
}

TEST_CASE("enumerate_selector_indices examples") {
  using V = std::vector<std::uint64_t>;
  CHECK(enumerate_selector_indices(SelectorKind::S1, 10) == V{6});
  CHECK(enumerate_selector_indices(SelectorKind::S3, 10) == V{4, 9});
  CHECK(enumerate_selector_indices(SelectorKind::S2, 10) == V{8});
  CHECK(enumerate_selector_indices(SelectorKind::S1, 1).empty());
  CHECK(enumerate_selector_indices(SelectorKind::S3, 3).empty());
}

TEST_CASE("enumeration matches brute force and witness existence") {
  for (std::uint64_t kmax : {1ULL, 4ULL, 9ULL, 57ULL, 300ULL}) {
    for (SelectorKind kind : kAllSelectorKinds) {
      REQUIRE(enumerate_selector_indices(kind, kmax) == brute_image(kind, kmax));
    }
  }
  // Indices admitting a witness of a given kind, by exact division.
  const std::uint64_t kmax = 10'000;
  for (SelectorKind kind : kAllSelectorKinds) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      const std::uint64_t n = kind == SelectorKind::S1 ? 6 * k - 1 : 6 * k + 1;
      bool found = false;
      for (std::uint64_t f = 5; f * f <= n && !found; f += 2) {
        if (n % f != 0) continue;
        const std::uint64_t g = n / f;
        switch (kind) {
          case SelectorKind::S1: found = true; break;  // any split of 6k-1 is (6i+1)(6j-1)
          case SelectorKind::S2: found = f % 6 == 1 && g % 6 == 1; break;
          case SelectorKind::S3: found = f % 6 == 5 && g % 6 == 5; break;
        }
      }
      if (found) expected.push_back(k);
    }
    REQUIRE(enumerate_selector_indices(kind, kmax) == expected);
  }
}

TEST_CASE("enumerate_selector_pairs lists every pair") {
  const auto pairs = enumerate_selector_pairs(SelectorKind::S3, 10);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == SelectorWitness{SelectorKind::S3, 1, 1, 4, 5, 5});
  CHECK(pairs[1] == SelectorWitness{SelectorKind::S3, 1, 2, 9, 5, 11});
  CHECK(pairs[2] == SelectorWitness{SelectorKind::S3, 2, 1, 9, 5, 11});
}

TEST_CASE("estimated index bounds and counts") {
  CHECK(estimated_index_bounds(SelectorKind::S1, 10) == IndexBounds{1, 1});
  CHECK(estimated_index_bounds(SelectorKind::S2, 10) == IndexBounds{1, 2});
  CHECK(estimated_index_bounds(SelectorKind::S3, 10) == IndexBounds{2, 3});
  CHECK(estimated_selector_count(SelectorKind::S1, 10) == 1);
  CHECK(estimated_selector_count(SelectorKind::S2, 10) == 2);
  CHECK(estimated_selector_count(SelectorKind::S3, 10) == 6);
  CHECK(estimated_index_bounds(SelectorKind::S1, 1) == IndexBounds{0, 0});
  CHECK(estimated_index_bounds(SelectorKind::S2, 1) == IndexBounds{0, 0});
  CHECK(estimated_index_bounds(SelectorKind::S3, 1) == IndexBounds{0, 1});
  CHECK_THROWS_AS(estimated_index_bounds(SelectorKind::S1, 0), RangeError);
}
