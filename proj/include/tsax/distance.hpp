#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <string>

#include "tsax/breakpoints.hpp"
#include "tsax/errors.hpp"
#include "tsax/representation.hpp"
#include "tsax/sax.hpp"
#include "tsax/trend.hpp"

namespace tsax {

/// Weights of the trend terms: rew per matching segment trend, pen per
/// opposite one. rew is expected to be negative but this is not enforced.
struct TsaxDistanceParams {
  double rew = -1.0;
  double pen = 1.0;
};

struct TrendMatchCounts {
  std::size_t k1 = 0;  // matching trends
  std::size_t k2 = 0;  // opposite trends

  friend bool operator==(const TrendMatchCounts&, const TrendMatchCounts&) = default;
};

namespace detail {

inline void check_compatible(const SaxWord& a, const SaxWord& b, const BreakpointTable& table) {
  if (a.size() != b.size()) {
    throw IncompatibleRepresentation("word lengths differ: " + std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()));
  }
  if (a.n() != b.n()) {
    throw IncompatibleRepresentation("original lengths differ: " + std::to_string(a.n()) + " vs " +
                                     std::to_string(b.n()));
  }
  if (a.alpha() != b.alpha() || a.alpha() != table.alpha()) {
    throw IncompatibleRepresentation("alphabet sizes of the words and the table differ");
  }
}

// sqrt((n/m) * sum dist^2), shared by MINDIST and the TSAX distance.
inline double symbolic_distance(const SaxWord& a, const SaxWord& b, const BreakpointTable& table) {
  const auto sa = a.symbols();
  const auto sb = b.symbols();
  double sum = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double d = table.symbol_dist(sa[i], sb[i]);
    sum += d * d;
  }
  const double ratio = static_cast<double>(a.n()) / static_cast<double>(a.size());
  return std::sqrt(ratio * sum);
}

}  // namespace detail

/// SAX MINDIST between two words over the same alphabet, length and n.
inline double sax_mindist(const SaxWord& a, const SaxWord& b, const BreakpointTable& table) {
  detail::check_compatible(a, b, table);
  return detail::symbolic_distance(a, b, table);
}

inline double sax_mindist(const TsaxRepresentation& a, const TsaxRepresentation& b, const BreakpointTable& table) {
  return sax_mindist(a.word(), b.word(), table);
}

inline TrendMatchCounts trend_match_counts(const TrendBits& a, const TrendBits& b) {
  if (a.size() != b.size()) {
    throw IncompatibleRepresentation("trend vectors differ in length: " + std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()));
  }
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t mismatches = 0;
  for (std::size_t w = 0; w < wa.size(); ++w) mismatches += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  return {a.size() - mismatches, mismatches};
}

/// MINDIST plus rew * k1 + pen * k2.
///
/// Not a metric: with the default weights the distance of a representation
/// to itself is -m, and the triangle inequality does not hold. Use it only
/// to rank candidates.
inline double tsax_dist(const TsaxRepresentation& a, const TsaxRepresentation& b, const BreakpointTable& table,
                        const TsaxDistanceParams& params = {}) {
  detail::check_compatible(a.word(), b.word(), table);
  const TrendMatchCounts k = trend_match_counts(a.trends(), b.trends());
  const double trend_term = params.rew * static_cast<double>(k.k1) + params.pen * static_cast<double>(k.k2);
  return detail::symbolic_distance(a.word(), b.word(), table) + trend_term;
}

}  // namespace tsax
