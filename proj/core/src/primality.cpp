#include "wheel6/primality.hpp"

#include <bit>
#include <string>

#include "intmath.hpp"
#include "wheel6/errors.hpp"

namespace wheel6 {

using detail::floor_div;

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Prime: return "PRIME";
    case Verdict::Composite: return "COMPOSITE";
    case Verdict::Unit: return "UNIT";
  }
  return "?";
}

std::string format_verdict(const PrimalityVerdict& v) {
  std::string out(to_string(v.verdict));
  if (v.verdict != Verdict::Composite) return out;
  if (const auto* w = std::get_if<SelectorWitness>(&v.evidence)) {
    out += " = " + std::to_string(w->factor_lo) + " x " + std::to_string(w->factor_hi);
  } else if (const auto* d = std::get_if<SmallDivisor>(&v.evidence)) {
    out += " = " + std::to_string(d->divisor) + " x " + std::to_string(d->cofactor);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CompositeIndexTable

namespace {

std::size_t bitmap_bytes(std::uint64_t kmax) { return static_cast<std::size_t>((kmax + 7) / 8); }

bool read_bit(const std::vector<std::uint8_t>& bits, std::uint64_t k) {
  return (bits[(k - 1) / 8] >> ((k - 1) % 8)) & 1U;
}

void write_bit(std::vector<std::uint8_t>& bits, std::uint64_t k) {
  bits[(k - 1) / 8] |= static_cast<std::uint8_t>(1U << ((k - 1) % 8));
}

std::uint64_t popcount(const std::vector<std::uint8_t>& bits) {
  std::uint64_t total = 0;
  for (std::uint8_t b : bits) total += static_cast<std::uint64_t>(std::popcount(b));
  return total;
}

bool padding_clear(const std::vector<std::uint8_t>& bits, std::uint64_t kmax) {
  const unsigned used = static_cast<unsigned>(kmax % 8);
  if (used == 0 || bits.empty()) return true;
  return (bits.back() >> used) == 0;
}

}  // namespace

CompositeIndexTable::CompositeIndexTable(std::uint64_t kmax)
    : kmax_(kmax), a_bits_(bitmap_bytes(kmax), 0), b_bits_(bitmap_bytes(kmax), 0) {}

bool CompositeIndexTable::a_composite(std::uint64_t k) const {
  if (k == 0 || k > kmax_) throw OutOfTableRange(k, kmax_);
  return read_bit(a_bits_, k);
}

bool CompositeIndexTable::b_composite(std::uint64_t k) const {
  if (k == 0 || k > kmax_) throw OutOfTableRange(k, kmax_);
  return read_bit(b_bits_, k);
}

void CompositeIndexTable::set_a(std::uint64_t k) {
  if (k == 0 || k > kmax_) throw OutOfTableRange(k, kmax_);
  write_bit(a_bits_, k);
}

void CompositeIndexTable::set_b(std::uint64_t k) {
  if (k == 0 || k > kmax_) throw OutOfTableRange(k, kmax_);
  write_bit(b_bits_, k);
}

std::uint64_t CompositeIndexTable::a_count() const noexcept { return popcount(a_bits_); }
std::uint64_t CompositeIndexTable::b_count() const noexcept { return popcount(b_bits_); }

CompositeIndexTable CompositeIndexTable::from_bytes(std::uint64_t kmax,
                                                    std::vector<std::uint8_t> a_bits,
                                                    std::vector<std::uint8_t> b_bits) {
  if (a_bits.size() != bitmap_bytes(kmax) || b_bits.size() != bitmap_bytes(kmax)) {
    throw FormatError("bitmap size does not match kmax " + std::to_string(kmax));
  }
  if (!padding_clear(a_bits, kmax) || !padding_clear(b_bits, kmax)) {
    throw FormatError("nonzero padding bits past kmax");
  }
  CompositeIndexTable t;
  t.kmax_ = kmax;
  t.a_bits_ = std::move(a_bits);
  t.b_bits_ = std::move(b_bits);
  return t;
}

CompositeIndexTable build_composite_index_table(std::uint64_t kmax) {
  if (kmax == 0) throw RangeError("build_composite_index_table: kmax must be >= 1");
  if (kmax > kMaxTableIndex) {
    throw RangeError("build_composite_index_table: kmax " + std::to_string(kmax) +
                     " exceeds the configured ceiling " + std::to_string(kMaxTableIndex));
  }
  CompositeIndexTable table(kmax);
  for_each_selector_pair(SelectorKind::S1, kmax,
                         [&](std::uint64_t, std::uint64_t, std::uint64_t k) { table.set_a(k); });
  for_each_selector_pair(SelectorKind::S2, kmax,
                         [&](std::uint64_t, std::uint64_t, std::uint64_t k) { table.set_b(k); });
  for_each_selector_pair(SelectorKind::S3, kmax,
                         [&](std::uint64_t, std::uint64_t, std::uint64_t k) { table.set_b(k); });
  return table;
}

// ---------------------------------------------------------------------------
// Verdicts

namespace {

void check_input(std::uint64_t n, const char* what) {
  if (n < 2) throw RangeError(std::string(what) + ": n must be >= 2");
  if (n > kMaxValue) throw RangeError(std::string(what) + ": n exceeds 2^62");
}

PrimalityVerdict residue_composite(std::uint64_t n) {
  const std::uint64_t d = n % 2 == 0 ? 2 : 3;
  return {Verdict::Composite, SmallDivisor{d, n / d}};
}

PrimalityVerdict composite(const SelectorWitness& w) { return {Verdict::Composite, w}; }

}  // namespace

NaiveScanBounds naive_scan_bounds(std::uint64_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  NaiveScanBounds b;
  b.r_max = floor_div(kk - 6, 5);
  b.s_max = floor_div(kk - 6, 7);
  b.l_max = floor_div(kk - 4, 5);
  b.m_max = b.l_max + 1;
  b.c_max = floor_div(kk - 8, 7);
  b.d_max = b.c_max + 1;
  return b;
}

PrimalityVerdict is_prime_naive(std::uint64_t n) {
  check_input(n, "is_prime_naive");
  if (n == 2 || n == 3) return {Verdict::Prime, {}};

  if ((n + 1) % 6 == 0) {
    const std::uint64_t k = (n + 1) / 6;
    const auto b = naive_scan_bounds(k);
    for (std::int64_t s = 0; s <= b.s_max; ++s) {
      for (std::int64_t r = 0; r <= b.r_max; ++r) {
        const auto kr = static_cast<std::uint64_t>(6 + 7 * s + (5 + 6 * s) * r);
        if (kr == k) {
          return composite(make_witness(SelectorKind::S1, static_cast<std::uint64_t>(r) + 1,
                                        static_cast<std::uint64_t>(s) + 1));
        }
      }
    }
    return {Verdict::Prime, {}};
  }

  if ((n - 1) % 6 == 0) {
    const std::uint64_t k = (n - 1) / 6;
    const auto b = naive_scan_bounds(k);
    // Both B rules are symmetric in their indices; the upper triangle suffices.
    for (std::int64_t m = 0; m <= b.m_max; ++m) {
      for (std::int64_t l = m; l <= b.l_max; ++l) {
        const auto kl = static_cast<std::uint64_t>(4 + 5 * m + (5 + 6 * m) * l);
        if (kl == k) {
          return composite(make_witness(SelectorKind::S3, static_cast<std::uint64_t>(l) + 1,
                                        static_cast<std::uint64_t>(m) + 1));
        }
      }
    }
    for (std::int64_t d = 0; d <= b.d_max; ++d) {
      for (std::int64_t c = d; c <= b.c_max; ++c) {
        const auto kc = static_cast<std::uint64_t>(8 + 7 * d + (7 + 6 * d) * c);
        if (kc == k) {
          return composite(make_witness(SelectorKind::S2, static_cast<std::uint64_t>(c) + 1,
                                        static_cast<std::uint64_t>(d) + 1));
        }
      }
    }
    return {Verdict::Prime, {}};
  }

  return residue_composite(n);
}

Verdict table_verdict(std::uint64_t n, const CompositeIndexTable& table) {
  check_input(n, "is_prime_table");
  if (n == 2 || n == 3) return Verdict::Prime;
  switch (n % 6) {
    case 5: return table.a_composite((n + 1) / 6) ? Verdict::Composite : Verdict::Prime;
    case 1: return table.b_composite((n - 1) / 6) ? Verdict::Composite : Verdict::Prime;
    default: return Verdict::Composite;
  }
}

PrimalityVerdict is_prime_table(std::uint64_t n, const CompositeIndexTable& table) {
  const Verdict v = table_verdict(n, table);
  if (v != Verdict::Composite) return {v, {}};
  switch (n % 6) {
    case 5:
      if (auto w = find_composite_witness(ResidueClass::A, (n + 1) / 6)) return composite(*w);
      break;
    case 1:
      if (auto w = find_composite_witness(ResidueClass::B, (n - 1) / 6)) return composite(*w);
      break;
    default:
      return residue_composite(n);
  }
  return {Verdict::Composite, {}};
}

}  // namespace wheel6
