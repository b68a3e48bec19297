#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tsax/breakpoints.hpp"
#include "tsax/errors.hpp"
#include "tsax/paa.hpp"
#include "tsax/sax.hpp"
#include "tsax/series.hpp"
#include "tsax/trend.hpp"

namespace tsax {

/// Symbolic part plus trend part: [w_1 .. w_m tr_1 .. tr_m].
class TsaxRepresentation {
 public:
  TsaxRepresentation(SaxWord word, TrendBits trends) : word_(std::move(word)), trends_(std::move(trends)) {
    if (word_.size() != trends_.size()) {
      throw IncompatibleRepresentation("symbolic part and trend part differ in length");
    }
  }

  const SaxWord& word() const noexcept { return word_; }
  const TrendBits& trends() const noexcept { return trends_; }
  std::size_t m() const noexcept { return word_.size(); }
  std::size_t n() const noexcept { return word_.n(); }
  std::size_t alpha() const noexcept { return word_.alpha(); }

  friend bool operator==(const TsaxRepresentation&, const TsaxRepresentation&) = default;

 private:
  SaxWord word_;
  TrendBits trends_;
};

/// Trend of every PAA segment of an already normalized series.
inline TrendBits segment_trends(std::span<const double> values, std::size_t m) {
  const auto segments = segment_bounds(values.size(), m);
  TrendBits bits(m);
  for (std::size_t i = 0; i < m; ++i) {
    bits.set(i, segment_trend(values.subspan(segments[i].begin, segments[i].size)));
  }
  return bits;
}

/// z-normalize, then PAA + symbolize for the word and a least-squares trend
/// on each of the same segments. Segments must hold at least 2 points.
inline TsaxRepresentation tsax_transform(const TimeSeries& series, std::size_t m, const BreakpointTable& table) {
  const TimeSeries normalized = z_normalize(series);
  const auto values = normalized.values();
  const auto paa = paa_transform(values, m);
  return TsaxRepresentation(symbolize(paa, values.size(), table), segment_trends(values, m));
}

struct LabeledRepresentation {
  TsaxRepresentation rep;
  Label label;

  friend bool operator==(const LabeledRepresentation&, const LabeledRepresentation&) = default;
};

// Number of segments used for a series of length n at a given n/m ratio.
inline std::size_t segment_count(std::size_t n, std::size_t segment_ratio) {
  if (segment_ratio == 0) throw InvalidParameter("segment ratio must be positive");
  return std::max<std::size_t>(1, n / segment_ratio);
}

}  // namespace tsax
