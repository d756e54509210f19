#pragma once

// Cut counts, closed-form prime-count estimators, exact counts, and the
// per-index deviation report that sets them side by side.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wheel6/residue.hpp"

namespace wheel6 {

class CompositeIndexTable;

// Nonnegative fraction kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Products drawn from the first s elements of A and B, counted with
// multiplicity: s^2 ordered A x B products land in A; the unordered pairs
// with repetition from A x A and B x B, C(s+1, 2) each, land in B.
struct CutCounts {
  std::uint64_t s = 0;
  std::uint64_t a_cuts = 0;  // s^2
  std::uint64_t b_cuts = 0;  // s^2 + s

  friend bool operator==(const CutCounts&, const CutCounts&) = default;
};

// Throws RangeError for s = 0 or overflow.
CutCounts cut_counts(std::uint64_t s);

// b_cuts / a_cuts = (s + 1) / s.
Rational cut_ratio(std::uint64_t s);

// Closed-form estimate of the primes among the first k candidates:
//   A: k - floor((k-1)/5) floor((k+1)/7)
//   B: k - floor((k-1)/7) ceil((k-1)/7) - floor((k+1)/5) ceil((k+1)/5)
// Evaluated verbatim; goes negative for large k.
std::int64_t formula_prime_count(ResidueClass cls, std::uint64_t k);

// Candidates k' <= k of the class with no selector hit, i.e. primes.
std::uint64_t exact_prime_count(ResidueClass cls, std::uint64_t k);
std::uint64_t exact_prime_count(ResidueClass cls, std::uint64_t k,
                                const CompositeIndexTable& table);

struct CountReportRow {
  std::uint64_t k = 0;
  std::uint64_t n_a = 0;  // 6k - 1
  bool a_composite = false;
  std::uint64_t n_b = 0;  // 6k + 1
  bool b_composite = false;
  std::uint64_t exact_a = 0;
  std::int64_t formula_a = 0;
  std::int64_t dev_a = 0;  // exact - formula
  std::uint64_t exact_b = 0;
  std::int64_t formula_b = 0;
  std::int64_t dev_b = 0;
  Rational ratio_ba;                       // exact_b / exact_a
  std::optional<double> formula_ratio_ba;  // formula_b / formula_a, when formula_a != 0
};

// One row per k in [1, kmax], ascending. Throws RangeError above the table
// ceiling.
std::vector<CountReportRow> count_report(std::uint64_t kmax);
std::vector<CountReportRow> count_report(std::uint64_t kmax, const CompositeIndexTable& table);

inline constexpr const char* kCountReportHeader =
    "k,n_A,a_composite,n_B,b_composite,exact_A,paper_A,dev_A,exact_B,paper_B,dev_B,ratio_BA";

// Decimal with 12 significant digits.
std::string format_ratio(double value);

// Header plus one LF-terminated line per row.
void write_count_report_csv(std::ostream& out, const std::vector<CountReportRow>& rows);

}  // namespace wheel6
