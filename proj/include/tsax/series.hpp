#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsax/errors.hpp"

namespace tsax {

using Label = int;

/// A non-empty vector of finite measurements with an optional class label.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values, std::optional<Label> label = std::nullopt)
      : values_(std::move(values)), label_(label) {
    if (values_.empty()) throw InvalidInput("time series must not be empty");
    const auto bad = std::find_if(values_.begin(), values_.end(), [](double v) { return !std::isfinite(v); });
    if (bad != values_.end()) {
      throw InvalidInput("time series value at index " + std::to_string(bad - values_.begin()) +
                         " is not finite");
    }
  }

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::optional<Label>& label() const noexcept { return label_; }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<double> values_;
  std::optional<Label> label_;
};

// Below this population standard deviation a series is treated as constant.
inline constexpr double kFlatStdThreshold = 1e-12;

/// Zero mean, unit population standard deviation. Near-constant series map
/// to all zeros. The label is carried over.
inline TimeSeries z_normalize(const TimeSeries& series) {
  const auto v = series.values();
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  const double var = std::transform_reduce(v.begin(), v.end(), 0.0, std::plus<>{},
                                           [mean](double x) { return (x - mean) * (x - mean); }) / n;
  const double sd = std::sqrt(var);

  std::vector<double> out(v.size(), 0.0);
  if (sd >= kFlatStdThreshold) {
    std::transform(v.begin(), v.end(), out.begin(), [mean, sd](double x) { return (x - mean) / sd; });
  }
  return TimeSeries(std::move(out), series.label());
}

}  // namespace tsax
