#include "gsqg/io/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "gsqg/error.hpp"

namespace gsqg::io {

namespace {

constexpr char kMagic[4] = {'G', 'S', 'Q', 'G'};

template <class U>
void put(std::vector<std::uint8_t>& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

template <class U>
U get(std::span<const std::uint8_t> in, std::size_t offset) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(in[offset + i]) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_snapshot(const Snapshot& s) {
  if (s.values.size() != static_cast<std::size_t>(s.n1) * s.n2) {
    throw PreconditionError("snapshot value count does not match n1 * n2");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kSnapshotHeaderBytes + 8 * s.values.size());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put(out, kSnapshotVersion);
  put(out, s.n1);
  put(out, s.n2);
  put(out, std::bit_cast<std::uint64_t>(s.t));
  for (double v : s.values) put(out, std::bit_cast<std::uint64_t>(v));
  return out;
}

Snapshot decode_snapshot(std::span<const std::uint8_t> bytes) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (i >= bytes.size() || bytes[i] != static_cast<std::uint8_t>(kMagic[i])) {
      throw FormatError("bad snapshot magic at byte offset " + std::to_string(i));
    }
  }
  if (bytes.size() < kSnapshotHeaderBytes) {
    throw FormatError("truncated snapshot header: " + std::to_string(bytes.size()) + " bytes");
  }
  const auto version = get<std::uint32_t>(bytes, 4);
  if (version != kSnapshotVersion) {
    throw FormatError("unsupported snapshot version " + std::to_string(version) + " (expected " +
                      std::to_string(kSnapshotVersion) + ")");
  }
  Snapshot s;
  s.n1 = get<std::uint32_t>(bytes, 8);
  s.n2 = get<std::uint32_t>(bytes, 12);
  s.t = std::bit_cast<double>(get<std::uint64_t>(bytes, 16));
  const std::size_t count = static_cast<std::size_t>(s.n1) * s.n2;
  const std::size_t payload = bytes.size() - kSnapshotHeaderBytes;
  if (payload != 8 * count) {
    throw FormatError("snapshot payload is " + std::to_string(payload) + " bytes, expected " +
                      std::to_string(8 * count));
  }
  s.values.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    s.values[i] = std::bit_cast<double>(get<std::uint64_t>(bytes, kSnapshotHeaderBytes + 8 * i));
  return s;
}

Snapshot snapshot_of(double t, const SpectralField& theta) {
  return {static_cast<std::uint32_t>(theta.n1()), static_cast<std::uint32_t>(theta.n2()), t, theta.to_grid()};
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& s) {
  const auto bytes = encode_snapshot(s);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw Error("failed writing " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace gsqg::io
