#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gsqg/spectral_field.hpp"

// Layout, all little-endian:
//   offset 0   "GSQG"
//   offset 4   u32 version (1)
//   offset 8   u32 n1
//   offset 12  u32 n2
//   offset 16  f64 time
//   offset 24  n1 * n2 f64 physical-space values, row-major
namespace gsqg::io {

inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 24;

struct Snapshot {
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  double t = 0.0;
  std::vector<double> values;
  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

std::vector<std::uint8_t> encode_snapshot(const Snapshot& s);
/// Throws FormatError on bad magic (naming the offset), version mismatch or
/// a payload that is not exactly n1 * n2 * 8 bytes.
Snapshot decode_snapshot(std::span<const std::uint8_t> bytes);

Snapshot snapshot_of(double t, const SpectralField& theta);

void write_snapshot(const std::filesystem::path& path, const Snapshot& s);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace gsqg::io
