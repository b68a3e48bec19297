#pragma once

#include <cstddef>
#include <vector>

#include "tsax/errors.hpp"
#include "tsax/trend.hpp"

namespace tsax {

struct TrendRun {
  Trend trend;
  std::size_t count;

  friend bool operator==(const TrendRun&, const TrendRun&) = default;
};

/// Maximal runs of equal trends; adjacent runs always differ.
inline std::vector<TrendRun> rle_encode(const TrendBits& bits) {
  std::vector<TrendRun> runs;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!runs.empty() && runs.back().trend == bits[i]) {
      ++runs.back().count;
    } else {
      runs.push_back({bits[i], 1});
    }
  }
  return runs;
}

inline TrendBits rle_decode(const std::vector<TrendRun>& runs) {
  std::size_t total = 0;
  for (const TrendRun& r : runs) {
    if (r.count == 0) throw FormatError("run-length record with zero count");
    total += r.count;
  }
  TrendBits bits(total);
  std::size_t i = 0;
  for (const TrendRun& r : runs) {
    for (std::size_t k = 0; k < r.count; ++k) bits.set(i++, r.trend);
  }
  return bits;
}

}  // namespace tsax
