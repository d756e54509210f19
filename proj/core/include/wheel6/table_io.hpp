#pragma once

// Table cache file, little-endian throughout:
//
//   offset  size          field
//   0       5             magic "P6TBL"
//   5       1             version (0x01)
//   6       8             kmax (u64)
//   14      ceil(kmax/8)  A bitmap, bit (k-1) LSB-first in byte (k-1)/8
//   ...     ceil(kmax/8)  B bitmap, same layout
//   ...     4             CRC32 (IEEE) of every preceding byte

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "wheel6/primality.hpp"

namespace wheel6 {

inline constexpr std::uint8_t kTableMagic[5] = {'P', '6', 'T', 'B', 'L'};
inline constexpr std::uint8_t kTableVersion = 0x01;
inline constexpr std::size_t kTableHeaderSize = 14;

std::vector<std::uint8_t> serialize_table(const CompositeIndexTable& table);

// Throws BadMagic, VersionMismatch, TruncatedStream, ChecksumMismatch, or a
// plain FormatError for trailing bytes and nonzero padding.
CompositeIndexTable deserialize_table(std::span<const std::uint8_t> bytes);

// Throws FormatError when the file cannot be opened, read, or written.
void write_table_file(const std::filesystem::path& path, const CompositeIndexTable& table);
CompositeIndexTable read_table_file(const std::filesystem::path& path);

std::uint32_t crc32_ieee(std::span<const std::uint8_t> bytes) noexcept;

}  // namespace wheel6
