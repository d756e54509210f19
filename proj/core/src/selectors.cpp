#include "wheel6/selectors.hpp"

#include <algorithm>
#include <string>

#include "wheel6/errors.hpp"
#include "intmath.hpp"

namespace wheel6 {

using detail::ceil_div;
using detail::floor_div;

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw RangeError(std::string(what) + ": overflow");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw RangeError(std::string(what) + ": overflow");
  return out;
}

std::uint64_t checked_index(std::uint64_t k, const char* what) {
  if (k > kMaxIndex) {
    throw RangeError(std::string(what) + ": wheel index " + std::to_string(k) +
                     " exceeds the 2^62 value ceiling");
  }
  return k;
}

}  // namespace

ResidueClass target_class(SelectorKind kind) noexcept {
  return kind == SelectorKind::S1 ? ResidueClass::A : ResidueClass::B;
}

std::string_view to_string(SelectorKind kind) noexcept {
  switch (kind) {
    case SelectorKind::S1: return "s1";
    case SelectorKind::S2: return "s2";
    case SelectorKind::S3: return "s3";
  }
  return "?";
}

std::uint64_t selector_value(SelectorKind kind, std::uint64_t i, std::uint64_t j) {
  if (i == 0 || j == 0) throw RangeError("selector_value: i and j must be >= 1");
  const std::uint64_t six_ij = checked_mul(checked_mul(6, i, "selector_value"), j,
                                           "selector_value");
  std::uint64_t k = 0;
  switch (kind) {
    case SelectorKind::S1: k = checked_add(six_ij - i, j, "selector_value"); break;
    case SelectorKind::S2: k = checked_add(checked_add(six_ij, i, "selector_value"), j,
                                           "selector_value"); break;
    case SelectorKind::S3: k = six_ij - i - j; break;
  }
  return checked_index(k, "selector_value");
}

std::uint64_t selector_value_shifted(SelectorKind kind, std::uint64_t r, std::uint64_t s) {
  constexpr const char* what = "selector_value_shifted";
  // (base + slope * s) + (row + 6s) * r
  std::uint64_t base = 0, slope = 0, row = 0;
  switch (kind) {
    case SelectorKind::S1: base = 6; slope = 7; row = 5; break;
    case SelectorKind::S2: base = 8; slope = 7; row = 7; break;
    case SelectorKind::S3: base = 4; slope = 5; row = 5; break;
  }
  const std::uint64_t col = checked_add(base, checked_mul(slope, s, what), what);
  const std::uint64_t coeff = checked_add(row, checked_mul(6, s, what), what);
  return checked_index(checked_add(col, checked_mul(coeff, r, what), what), what);
}

SelectorWitness make_witness(SelectorKind kind, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t k = selector_value(kind, i, j);
  std::uint64_t a = 0, b = 0;
  switch (kind) {
    case SelectorKind::S1: a = 6 * i + 1; b = 6 * j - 1; break;
    case SelectorKind::S2: a = 6 * i + 1; b = 6 * j + 1; break;
    case SelectorKind::S3: a = 6 * i - 1; b = 6 * j - 1; break;
  }
  return {kind, i, j, k, std::min(a, b), std::max(a, b)};
}

std::optional<SelectorWitness> find_composite_witness(ResidueClass cls, std::uint64_t k) {
  if (cls != ResidueClass::A && cls != ResidueClass::B) {
    throw RangeError("find_composite_witness: class must be A or B");
  }
  if (k == 0) throw RangeError("find_composite_witness: wheel index must be >= 1");
  checked_index(k, "find_composite_witness");
  const std::uint64_t n = cls == ResidueClass::A ? 6 * k - 1 : 6 * k + 1;

  // Walk the smaller factor upward: 6t-1, then 6t+1. Solve the rule for the
  // partner index exactly. Stop once the smaller factor squared passes n,
  // which is where the diagonal selector value S(t, t) passes k.
  for (std::uint64_t t = 1;; ++t) {
    const std::uint64_t minus = 6 * t - 1;
    if (minus > n / minus) break;
    const std::uint64_t plus = 6 * t + 1;
    const bool plus_fits = plus <= n / plus;

    if (cls == ResidueClass::A) {
      // S1 with j = t: k = i(6t - 1) + t
      if (k > t && (k - t) % minus == 0) return make_witness(SelectorKind::S1, (k - t) / minus, t);
      // S1 with i = t: k = j(6t + 1) - t
      if (plus_fits && (k + t) % plus == 0) return make_witness(SelectorKind::S1, t, (k + t) / plus);
    } else {
      // S3 with i = t: k = j(6t - 1) - t
      if ((k + t) % minus == 0) return make_witness(SelectorKind::S3, t, (k + t) / minus);
      // S2 with i = t: k = j(6t + 1) + t
      if (plus_fits && k > t && (k - t) % plus == 0) {
        return make_witness(SelectorKind::S2, t, (k - t) / plus);
      }
    }
  }
  return std::nullopt;
}

std::vector<SelectorWitness> enumerate_selector_pairs(SelectorKind kind, std::uint64_t kmax) {
  std::vector<SelectorWitness> out;
  for_each_selector_pair(kind, kmax, [&](std::uint64_t i, std::uint64_t j, std::uint64_t) {
    out.push_back(make_witness(kind, i, j));
  });
  return out;
}

std::vector<std::uint64_t> enumerate_selector_indices(SelectorKind kind, std::uint64_t kmax) {
  if (kmax > kMaxTableIndex) {
    throw RangeError("enumerate_selector_indices: kmax " + std::to_string(kmax) +
                     " exceeds the table ceiling");
  }
  std::vector<bool> hit(kmax + 1, false);
  for_each_selector_pair(kind, kmax,
                         [&](std::uint64_t, std::uint64_t, std::uint64_t k) { hit[k] = true; });
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if (hit[k]) out.push_back(k);
  }
  return out;
}

IndexBounds estimated_index_bounds(SelectorKind kind, std::uint64_t k) {
  if (k == 0) throw RangeError("estimated_index_bounds: k must be >= 1");
  const auto kk = static_cast<std::int64_t>(checked_index(k, "estimated_index_bounds"));
  switch (kind) {
    case SelectorKind::S1: return {floor_div(kk - 1, 5), floor_div(kk + 1, 7)};
    case SelectorKind::S2: return {floor_div(kk - 1, 7), ceil_div(kk - 1, 7)};
    case SelectorKind::S3: return {floor_div(kk + 1, 5), ceil_div(kk + 1, 5)};
  }
  return {};
}

std::int64_t estimated_selector_count(SelectorKind kind, std::uint64_t k) {
  const IndexBounds b = estimated_index_bounds(kind, k);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(b.i_max, b.j_max, &out)) {
    throw RangeError("estimated_selector_count: overflow");
  }
  return out;
}

}  // namespace wheel6
