#pragma once

// Binary layout of representations.
//
//   symbols   one byte per symbol index
//   trends    packed 8 per byte, bit i in byte i / 8 at position i % 8 (LSB first)
//   RLE       alternatively, repeated {bit: 1 byte (0/1), count: unsigned LEB128 varint}
//
// Cache file (all integers little-endian):
//
//   "TSXC" | u8 version | u8 alpha | u8 flags (bit 0: RLE trends) | u8 reserved
//   u32 count | u32 n | u32 m
//   count x { i32 label | m symbol bytes | trend payload }
//
// The trend payload is ceil(m / 8) packed bytes, or with RLE a varint record
// count followed by the records.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tsax/errors.hpp"
#include "tsax/representation.hpp"
#include "tsax/rle.hpp"
#include "tsax/trend.hpp"

namespace tsax {

using Bytes = std::vector<std::uint8_t>;

inline Bytes pack_trend_bytes(const TrendBits& bits) {
  Bytes out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == Trend::up) out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  return out;
}

inline TrendBits unpack_trend_bytes(std::span<const std::uint8_t> bytes, std::size_t m) {
  if (bytes.size() != (m + 7) / 8) throw FormatError("packed trend payload has the wrong size");
  TrendBits bits(m);
  for (std::size_t i = 0; i < m; ++i) {
    bits.set(i, static_cast<Trend>((bytes[i / 8] >> (i % 8)) & 1u));
  }
  return bits;
}

inline void write_varint(Bytes& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

/// Sequential reader over a byte buffer; every read is bounds-checked.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_++]) << (8 * i);
    return v;
  }

  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      const std::uint8_t b = u8();
      v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if ((b & 0x80) == 0) return v;
    }
    throw FormatError("varint longer than 64 bits");
  }

  std::span<const std::uint8_t> bytes(std::size_t count) {
    need(count);
    auto s = data_.subspan(pos_, count);
    pos_ += count;
    return s;
  }

  bool done() const noexcept { return pos_ == data_.size(); }

 private:
  void need(std::size_t count) const {
    if (data_.size() - pos_ < count) throw FormatError("unexpected end of data");
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

inline Bytes encode_rle_records(const std::vector<TrendRun>& runs) {
  Bytes out;
  for (const TrendRun& r : runs) {
    out.push_back(r.trend == Trend::up ? 1 : 0);
    write_varint(out, r.count);
  }
  return out;
}

inline std::vector<TrendRun> decode_rle_records(ByteReader& in, std::size_t record_count) {
  std::vector<TrendRun> runs;
  runs.reserve(record_count);
  for (std::size_t i = 0; i < record_count; ++i) {
    const std::uint8_t bit = in.u8();
    if (bit > 1) throw FormatError("RLE record bit must be 0 or 1");
    const std::uint64_t count = in.varint();
    if (count == 0) throw FormatError("RLE record with zero count");
    runs.push_back({static_cast<Trend>(bit), static_cast<std::size_t>(count)});
  }
  return runs;
}

inline std::vector<TrendRun> decode_rle_records(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  std::vector<TrendRun> runs;
  while (!in.done()) {
    const auto more = decode_rle_records(in, 1);
    runs.push_back(more.front());
  }
  return runs;
}

inline constexpr std::array<std::uint8_t, 4> kCacheMagic = {'T', 'S', 'X', 'C'};
inline constexpr std::uint8_t kCacheVersion = 1;

namespace detail {

inline void put_u32(Bytes& out, std::uint64_t v) {
  if (v > 0xffffffffu) throw InvalidParameter("value does not fit in 32 bits");
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace detail

/// Serializes representations that share n, m and alpha.
inline Bytes serialize_representations(std::span<const LabeledRepresentation> items, bool rle) {
  if (items.empty()) throw InvalidInput("nothing to serialize");
  const auto& first = items.front().rep;
  Bytes out(kCacheMagic.begin(), kCacheMagic.end());
  out.push_back(kCacheVersion);
  out.push_back(static_cast<std::uint8_t>(first.alpha()));
  out.push_back(rle ? 1 : 0);
  out.push_back(0);
  detail::put_u32(out, items.size());
  detail::put_u32(out, first.n());
  detail::put_u32(out, first.m());

  for (const auto& item : items) {
    const auto& rep = item.rep;
    if (rep.n() != first.n() || rep.m() != first.m() || rep.alpha() != first.alpha()) {
      throw IncompatibleRepresentation("all serialized representations must share n, m and alpha");
    }
    detail::put_u32(out, static_cast<std::uint32_t>(item.label));
    const auto symbols = rep.word().symbols();
    out.insert(out.end(), symbols.begin(), symbols.end());
    if (rle) {
      const auto runs = rle_encode(rep.trends());
      write_varint(out, runs.size());
      const Bytes records = encode_rle_records(runs);
      out.insert(out.end(), records.begin(), records.end());
    } else {
      const Bytes packed = pack_trend_bytes(rep.trends());
      out.insert(out.end(), packed.begin(), packed.end());
    }
  }
  return out;
}

inline std::vector<LabeledRepresentation> deserialize_representations(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  for (std::uint8_t expected : kCacheMagic) {
    if (in.u8() != expected) throw FormatError("not a representation cache (bad magic)");
  }
  if (const auto version = in.u8(); version != kCacheVersion) {
    throw FormatError("unsupported cache version " + std::to_string(version));
  }
  const std::size_t alpha = in.u8();
  const std::uint8_t flags = in.u8();
  in.u8();
  const std::size_t count = in.u32();
  const std::size_t n = in.u32();
  const std::size_t m = in.u32();
  const bool rle = (flags & 1u) != 0;

  std::vector<LabeledRepresentation> items;
  items.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Label label = in.i32();
    const auto raw = in.bytes(m);
    SaxWord word(std::vector<Symbol>(raw.begin(), raw.end()), n, alpha);
    TrendBits trends;
    if (rle) {
      const std::size_t records = static_cast<std::size_t>(in.varint());
      trends = rle_decode(decode_rle_records(in, records));
      if (trends.size() != m) throw FormatError("RLE trend payload does not cover m segments");
    } else {
      trends = unpack_trend_bytes(in.bytes((m + 7) / 8), m);
    }
    items.push_back({TsaxRepresentation(std::move(word), std::move(trends)), label});
  }
  if (!in.done()) throw FormatError("trailing bytes after representation cache");
  return items;
}

}  // namespace tsax
