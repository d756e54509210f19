#pragma once

// Two deterministic primality tests over the 6k -/+ 1 wheel.
//
// is_prime_naive scans the shifted selector rectangles for the candidate's
// wheel index. The full rectangle is always walked unless a hit is found, so
// the cost on prime input grows like n^2.
//
// is_prime_table answers from a precomputed CompositeIndexTable: two residue
// checks and one bit read.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wheel6/selectors.hpp"

namespace wheel6 {

enum class Verdict : std::uint8_t { Prime, Composite, Unit };

std::string_view to_string(Verdict v) noexcept;

// Composite by residue: n is even (divisor 2) or an odd multiple of 3.
struct SmallDivisor {
  std::uint64_t divisor = 0;
  std::uint64_t cofactor = 0;

  friend bool operator==(const SmallDivisor&, const SmallDivisor&) = default;
};

using CompositeEvidence = std::variant<std::monostate, SmallDivisor, SelectorWitness>;

struct PrimalityVerdict {
  Verdict verdict = Verdict::Unit;
  // Set whenever verdict == Composite. A table lookup knows the index is hit
  // but not by which pair, so it fills in the witness by search.
  CompositeEvidence evidence;

  bool is_prime() const noexcept { return verdict == Verdict::Prime; }
};

// Renders the CLI vocabulary: "PRIME", "UNIT", "COMPOSITE = a x b".
std::string format_verdict(const PrimalityVerdict& v);

// Bitmaps over k in [1, kmax]: bit set means the candidate at k is composite.
class CompositeIndexTable {
 public:
  CompositeIndexTable() = default;
  // Empty table; every candidate up to kmax reads as prime.
  explicit CompositeIndexTable(std::uint64_t kmax);

  std::uint64_t kmax() const noexcept { return kmax_; }

  bool a_composite(std::uint64_t k) const;
  bool b_composite(std::uint64_t k) const;
  void set_a(std::uint64_t k);
  void set_b(std::uint64_t k);

  std::uint64_t a_count() const noexcept;
  std::uint64_t b_count() const noexcept;

  // Raw storage: bit (k-1) lives LSB-first in byte (k-1)/8. Padding bits in
  // the last byte are always zero.
  std::span<const std::uint8_t> a_bytes() const noexcept { return a_bits_; }
  std::span<const std::uint8_t> b_bytes() const noexcept { return b_bits_; }

  // Takes ownership of raw bitmaps. Throws FormatError on size mismatch or
  // nonzero padding.
  static CompositeIndexTable from_bytes(std::uint64_t kmax, std::vector<std::uint8_t> a_bits,
                                        std::vector<std::uint8_t> b_bits);

  friend bool operator==(const CompositeIndexTable&, const CompositeIndexTable&) = default;

 private:
  std::uint64_t kmax_ = 0;
  std::vector<std::uint8_t> a_bits_;
  std::vector<std::uint8_t> b_bits_;
};

// Marks image(S1) in the A bitmap and image(S2) u image(S3) in the B bitmap.
// Throws RangeError for kmax = 0 or kmax > kMaxTableIndex.
CompositeIndexTable build_composite_index_table(std::uint64_t kmax);

// Throws RangeError for n < 2 or n > kMaxValue.
PrimalityVerdict is_prime_naive(std::uint64_t n);

// Throws OutOfTableRange when n is a candidate whose index exceeds
// table.kmax(); RangeError for n < 2.
PrimalityVerdict is_prime_table(std::uint64_t n, const CompositeIndexTable& table);

// The bare lookup behind is_prime_table, without building evidence.
Verdict table_verdict(std::uint64_t n, const CompositeIndexTable& table);

// Scan bounds used by is_prime_naive for wheel index k. Negative maxima mean
// an empty range.
struct NaiveScanBounds {
  std::int64_t r_max = 0, s_max = 0;  // S1 rectangle, class A
  std::int64_t l_max = 0, m_max = 0;  // S3 upper triangle, class B
  std::int64_t c_max = 0, d_max = 0;  // S2 upper triangle, class B
};

NaiveScanBounds naive_scan_bounds(std::uint64_t k);

}  // namespace wheel6
