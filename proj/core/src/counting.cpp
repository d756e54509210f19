#include "wheel6/counting.hpp"

#include <cstdio>
#include <numeric>
#include <ostream>

#include "intmath.hpp"
#include "wheel6/errors.hpp"
#include "wheel6/primality.hpp"

namespace wheel6 {

using detail::ceil_div;
using detail::floor_div;

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw RangeError("Rational: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

CutCounts cut_counts(std::uint64_t s) {
  if (s == 0) throw RangeError("cut_counts: s must be >= 1");
  std::uint64_t sq = 0, b = 0;
  if (__builtin_mul_overflow(s, s, &sq) || __builtin_add_overflow(sq, s, &b)) {
    throw RangeError("cut_counts: s^2 + s overflows");
  }
  // A x B products: s * s ordered pairs.
  // A x A and B x B: C(s + 1, 2) unordered pairs with repetition each.
  const std::uint64_t pairs_with_repetition = s * (s + 1) / 2;
  return {s, sq, 2 * pairs_with_repetition};
}

Rational cut_ratio(std::uint64_t s) {
  const CutCounts c = cut_counts(s);
  return Rational::make(c.b_cuts, c.a_cuts);
}

std::int64_t formula_prime_count(ResidueClass cls, std::uint64_t k) {
  if (k == 0) throw RangeError("formula_prime_count: k must be >= 1");
  if (k > kMaxTableIndex) throw RangeError("formula_prime_count: k exceeds the ceiling");
  const auto kk = static_cast<std::int64_t>(k);
  switch (cls) {
    case ResidueClass::A:
      return kk - floor_div(kk - 1, 5) * floor_div(kk + 1, 7);
    case ResidueClass::B:
      return kk - floor_div(kk - 1, 7) * ceil_div(kk - 1, 7) -
             floor_div(kk + 1, 5) * ceil_div(kk + 1, 5);
    default:
      throw RangeError("formula_prime_count: class must be A or B");
  }
}

std::uint64_t exact_prime_count(ResidueClass cls, std::uint64_t k,
                                const CompositeIndexTable& table) {
  if (cls != ResidueClass::A && cls != ResidueClass::B) {
    throw RangeError("exact_prime_count: class must be A or B");
  }
  if (k == 0) throw RangeError("exact_prime_count: k must be >= 1");
  if (k > table.kmax()) throw OutOfTableRange(k, table.kmax());
  const std::uint64_t hits = [&] {
    std::uint64_t n = 0;
    for (std::uint64_t j = 1; j <= k; ++j) {
      n += cls == ResidueClass::A ? table.a_composite(j) : table.b_composite(j);
    }
    return n;
  }();
  return k - hits;
}

std::uint64_t exact_prime_count(ResidueClass cls, std::uint64_t k) {
  if (k == 0) throw RangeError("exact_prime_count: k must be >= 1");
  return exact_prime_count(cls, k, build_composite_index_table(k));
}

std::vector<CountReportRow> count_report(std::uint64_t kmax, const CompositeIndexTable& table) {
  if (kmax > table.kmax()) throw OutOfTableRange(kmax, table.kmax());
  std::vector<CountReportRow> rows;
  rows.reserve(static_cast<std::size_t>(kmax));
  std::uint64_t exact_a = 0, exact_b = 0;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    CountReportRow row;
    row.k = k;
    row.n_a = 6 * k - 1;
    row.n_b = 6 * k + 1;
    row.a_composite = table.a_composite(k);
    row.b_composite = table.b_composite(k);
    exact_a += row.a_composite ? 0 : 1;
    exact_b += row.b_composite ? 0 : 1;
    row.exact_a = exact_a;
    row.exact_b = exact_b;
    row.formula_a = formula_prime_count(ResidueClass::A, k);
    row.formula_b = formula_prime_count(ResidueClass::B, k);
    row.dev_a = static_cast<std::int64_t>(exact_a) - row.formula_a;
    row.dev_b = static_cast<std::int64_t>(exact_b) - row.formula_b;
    // 5 = 6*1 - 1 is prime, so exact_a >= 1.
    row.ratio_ba = Rational::make(exact_b, exact_a);
    if (row.formula_a != 0) {
      row.formula_ratio_ba =
          static_cast<double>(row.formula_b) / static_cast<double>(row.formula_a);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<CountReportRow> count_report(std::uint64_t kmax) {
  if (kmax == 0) throw RangeError("count_report: kmax must be >= 1");
  return count_report(kmax, build_composite_index_table(kmax));
}

std::string format_ratio(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_count_report_csv(std::ostream& out, const std::vector<CountReportRow>& rows) {
  out << kCountReportHeader << '\n';
  for (const auto& r : rows) {
    out << r.k << ',' << r.n_a << ',' << (r.a_composite ? 1 : 0) << ',' << r.n_b << ','
        << (r.b_composite ? 1 : 0) << ',' << r.exact_a << ',' << r.formula_a << ','
        << r.dev_a << ',' << r.exact_b << ',' << r.formula_b << ',' << r.dev_b << ','
        << format_ratio(r.ratio_ba.to_double()) << '\n';
  }
}

}  // namespace wheel6
