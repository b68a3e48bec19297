#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tsax/errors.hpp"
#include "tsax/series.hpp"

namespace tsax {

struct Segment {
  std::size_t begin;
  std::size_t size;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Splits n points into m contiguous segments whose sizes differ by at most
/// one, the larger segments first. Every point belongs to exactly one segment.
inline std::vector<Segment> segment_bounds(std::size_t n, std::size_t m) {
  if (m == 0 || m > n) {
    throw InvalidParameter("segment count must be in [1, " + std::to_string(n) + "], got " +
                           std::to_string(m));
  }
  const std::size_t base = n / m;
  const std::size_t extra = n % m;
  std::vector<Segment> segments;
  segments.reserve(m);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    segments.push_back({begin, size});
    begin += size;
  }
  return segments;
}

/// Piecewise aggregate approximation: the mean of each segment.
inline std::vector<double> paa_transform(std::span<const double> values, std::size_t m) {
  std::vector<double> coefficients;
  coefficients.reserve(m);
  for (const Segment& s : segment_bounds(values.size(), m)) {
    const auto part = values.subspan(s.begin, s.size);
    coefficients.push_back(std::accumulate(part.begin(), part.end(), 0.0) / static_cast<double>(s.size));
  }
  return coefficients;
}

inline std::vector<double> paa_transform(const TimeSeries& series, std::size_t m) {
  return paa_transform(series.values(), m);
}

}  // namespace tsax
