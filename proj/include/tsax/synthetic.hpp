#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tsax/classify.hpp"
#include "tsax/errors.hpp"
#include "tsax/paa.hpp"
#include "tsax/representation.hpp"

namespace tsax {

struct TrendPairOptions {
  std::size_t per_class = 20;
  std::size_t length = 64;
  double noise = 0.1;  // half-width of the uniform per-point noise
  std::uint64_t seed = 7;
  std::size_t segment_width = 4;  // points per segment, i.e. the n/m ratio used downstream
};

namespace detail {

// Uniform in [0, 1) from the top 53 bits; identical on every standard library.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Two classes with identical segment means and opposite segment trends.
///
/// Each pair shares a random level per segment. Class 1 rises through every
/// segment around that level, class 2 is class 1 reversed inside each
/// segment, so without noise both have the same PAA (and SAX word) while
/// every trend bit differs. Class 1 occupies the first per_class entries,
/// class 2 the rest, in matching order.
inline LabeledDataset generate_trend_pair_dataset(const TrendPairOptions& opt) {
  if (opt.per_class < 1) throw InvalidParameter("per_class must be at least 1");
  if (opt.length < 8) throw InvalidParameter("length must be at least 8");
  if (opt.segment_width < 2 || opt.segment_width > opt.length / 2) {
    throw InvalidParameter("segment width must be in [2, length / 2]");
  }
  if (!(opt.noise >= 0.0) || !std::isfinite(opt.noise)) throw InvalidParameter("noise must be finite and >= 0");

  constexpr double level_span = 4.0;  // levels in [-2, 2)
  constexpr double step = 0.25;       // rise per point inside a segment

  std::mt19937_64 rng(opt.seed);
  const auto segments = segment_bounds(opt.length, segment_count(opt.length, opt.segment_width));

  std::vector<std::vector<double>> rising;
  rising.reserve(opt.per_class);
  for (std::size_t k = 0; k < opt.per_class; ++k) {
    std::vector<double> base(opt.length);
    for (const Segment& s : segments) {
      const double level = level_span * (detail::unit_uniform(rng) - 0.5);
      const double centre = static_cast<double>(s.size - 1) / 2.0;
      for (std::size_t j = 0; j < s.size; ++j) base[s.begin + j] = level + step * (static_cast<double>(j) - centre);
    }
    rising.push_back(std::move(base));
  }

  auto noisy = [&](std::vector<double> v) {
    if (opt.noise > 0.0) {
      for (double& x : v) x += opt.noise * (2.0 * detail::unit_uniform(rng) - 1.0);
    }
    return v;
  };

  std::vector<TimeSeries> series;
  series.reserve(2 * opt.per_class);
  for (const auto& base : rising) series.emplace_back(noisy(base), Label{1});
  for (const auto& base : rising) {
    std::vector<double> mirrored(base.size());
    for (const Segment& s : segments) {
      for (std::size_t j = 0; j < s.size; ++j) mirrored[s.begin + j] = base[s.begin + s.size - 1 - j];
    }
    series.emplace_back(noisy(std::move(mirrored)), Label{2});
  }
  return LabeledDataset("TrendPairs", std::move(series));
}

}  // namespace tsax
