#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wheel6 {

// Largest n accepted anywhere in the library. Keeps 6k+1 and every selector
// product inside an unsigned 64-bit word.
inline constexpr std::uint64_t kMaxValue = std::uint64_t{1} << 62;

// Largest wheel index k with 6k+1 <= kMaxValue.
inline constexpr std::uint64_t kMaxIndex = (kMaxValue - 1) / 6;

// Ceiling for anything that allocates per-index or per-value storage
// (tables, sieves, reports).
inline constexpr std::uint64_t kMaxTableIndex = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 34;

// Input outside the accepted domain: n = 0, overflow, ceilings.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Table lookup for an index the table does not cover. The caller has to
// rebuild a larger table.
class OutOfTableRange : public RangeError {
 public:
  OutOfTableRange(std::uint64_t k, std::uint64_t kmax)
      : RangeError("wheel index " + std::to_string(k) +
                   " exceeds table kmax " + std::to_string(kmax)),
        k_(k),
        kmax_(kmax) {}

  std::uint64_t index() const noexcept { return k_; }
  std::uint64_t kmax() const noexcept { return kmax_; }

 private:
  std::uint64_t k_;
  std::uint64_t kmax_;
};

// Table cache file errors.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadMagic : public FormatError {
 public:
  BadMagic() : FormatError("bad magic: not a P6TBL table file") {}
};

class TruncatedStream : public FormatError {
 public:
  explicit TruncatedStream(const std::string& what)
      : FormatError("truncated stream: " + what) {}
};

class VersionMismatch : public FormatError {
 public:
  explicit VersionMismatch(unsigned version)
      : FormatError("unsupported table version " + std::to_string(version)) {}
};

class ChecksumMismatch : public FormatError {
 public:
  ChecksumMismatch(std::uint32_t stored, std::uint32_t computed);
};

}  // namespace wheel6
