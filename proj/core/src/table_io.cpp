#include "wheel6/table_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>

#include "wheel6/errors.hpp"

namespace wheel6 {

ChecksumMismatch::ChecksumMismatch(std::uint32_t stored, std::uint32_t computed)
    : FormatError("CRC32 mismatch: stored " + std::to_string(stored) + ", computed " +
                  std::to_string(computed)) {}

std::uint32_t crc32_ieee(std::span<const std::uint8_t> bytes) noexcept {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths
  while (!bytes.empty()) {
    const auto chunk = std::min<std::size_t>(bytes.size(), std::numeric_limits<uInt>::max());
    crc = ::crc32(crc, bytes.data(), static_cast<uInt>(chunk));
    bytes = bytes.subspan(chunk);
  }
  return static_cast<std::uint32_t>(crc);
}

namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
  }
}

template <typename T>
T get_le(std::span<const std::uint8_t> in) {
  T value = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) value |= static_cast<T>(in[b]) << (8 * b);
  return value;
}

}  // namespace

std::vector<std::uint8_t> serialize_table(const CompositeIndexTable& table) {
  const auto a = table.a_bytes();
  const auto b = table.b_bytes();
  std::vector<std::uint8_t> out;
  out.reserve(kTableHeaderSize + a.size() + b.size() + 4);
  for (std::uint8_t c : kTableMagic) out.push_back(c);
  out.push_back(kTableVersion);
  put_le<std::uint64_t>(out, table.kmax());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  put_le<std::uint32_t>(out, crc32_ieee(out));
  return out;
}

CompositeIndexTable deserialize_table(std::span<const std::uint8_t> bytes) {
  const std::size_t magic_len = std::size(kTableMagic);
  const std::size_t probe = std::min(bytes.size(), magic_len);
  if (!std::equal(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(probe),
                  std::begin(kTableMagic))) {
    throw BadMagic();
  }
  if (bytes.size() < magic_len + 1) throw TruncatedStream("missing header");
  if (bytes[magic_len] != kTableVersion) throw VersionMismatch(bytes[magic_len]);
  if (bytes.size() < kTableHeaderSize) throw TruncatedStream("missing kmax");

  const auto kmax = get_le<std::uint64_t>(bytes.subspan(magic_len + 1));
  if (kmax > kMaxTableIndex) {
    throw FormatError("kmax " + std::to_string(kmax) + " exceeds the table ceiling");
  }
  const std::size_t map_len = static_cast<std::size_t>((kmax + 7) / 8);
  const std::size_t expected = kTableHeaderSize + 2 * map_len + 4;
  if (bytes.size() < expected) {
    throw TruncatedStream("expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(bytes.size()));
  }
  if (bytes.size() > expected) {
    throw FormatError(std::to_string(bytes.size() - expected) + " trailing bytes");
  }

  const auto stored = get_le<std::uint32_t>(bytes.subspan(expected - 4));
  const auto computed = crc32_ieee(bytes.first(expected - 4));
  if (stored != computed) throw ChecksumMismatch(stored, computed);

  const auto a = bytes.subspan(kTableHeaderSize, map_len);
  const auto b = bytes.subspan(kTableHeaderSize + map_len, map_len);
  return CompositeIndexTable::from_bytes(kmax, {a.begin(), a.end()}, {b.begin(), b.end()});
}

void write_table_file(const std::filesystem::path& path, const CompositeIndexTable& table) {
  const auto bytes = serialize_table(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write to " + path.string() + " failed");
}

CompositeIndexTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw FormatError("read from " + path.string() + " failed");
  return deserialize_table(bytes);
}

}  // namespace wheel6
