#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tsax/errors.hpp"

namespace tsax {

enum class Trend : bool { down = false, up = true };

inline constexpr Trend opposite(Trend t) noexcept { return t == Trend::up ? Trend::down : Trend::up; }

/// Direction of the least-squares line through the segment at abscissae
/// 1..len. A zero slope counts as up.
///
/// Only the sign of sum_i (x_i - mean_x) * y_i is needed. It is accumulated
/// as weighted differences of mirrored points so that adding a constant to
/// the segment leaves every term unchanged.
inline Trend segment_trend(std::span<const double> segment) {
  if (segment.size() < 2) throw InvalidInput("trend needs a segment of at least 2 points");
  const std::size_t len = segment.size();
  double numerator = 0.0;
  for (std::size_t i = 0; i < len / 2; ++i) {
    const double weight = static_cast<double>(len - 1 - 2 * i);  // twice |x_i - mean_x|
    numerator += weight * (segment[len - 1 - i] - segment[i]);
  }
  return numerator < 0.0 ? Trend::down : Trend::up;
}

/// One trend bit per segment, packed 64 to a word (bit i of the vector is
/// bit i % 64 of word i / 64; set means up).
class TrendBits {
 public:
  TrendBits() = default;

  explicit TrendBits(std::size_t m) : size_(m), words_((m + 63) / 64, 0) {}

  TrendBits(std::initializer_list<Trend> trends) : TrendBits(trends.size()) {
    std::size_t i = 0;
    for (Trend t : trends) set(i++, t);
  }

  static TrendBits from_trends(std::span<const Trend> trends) {
    TrendBits bits(trends.size());
    for (std::size_t i = 0; i < trends.size(); ++i) bits.set(i, trends[i]);
    return bits;
  }

  std::size_t size() const noexcept { return size_; }

  Trend operator[](std::size_t i) const noexcept {
    return static_cast<Trend>((words_[i / 64] >> (i % 64)) & 1u);
  }

  Trend at(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("trend index out of range");
    return (*this)[i];
  }

  void set(std::size_t i, Trend t) {
    if (i >= size_) throw std::out_of_range("trend index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (t == Trend::up) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  // Trailing bits of the last word are always zero.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::vector<Trend> to_trends() const {
    std::vector<Trend> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i]);
    return out;
  }

  TrendBits complement() const {
    TrendBits out(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    out.clear_tail();
    return out;
  }

  std::size_t count_up() const noexcept {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Arrows as printed in the literature: "↗↗↘".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < size_; ++i) s += (*this)[i] == Trend::up ? "↗" : "↘";
    return s;
  }

  friend bool operator==(const TrendBits&, const TrendBits&) = default;

 private:
  void clear_tail() {
    if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tsax
