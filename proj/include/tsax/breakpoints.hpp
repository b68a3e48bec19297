#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsax/errors.hpp"
#include "tsax/normal.hpp"

namespace tsax {

inline constexpr std::size_t kMinAlphabet = 2;  // 2 is only meant for testing
inline constexpr std::size_t kMaxAlphabet = 20;

/// Gaussian breakpoints for an alphabet of size alpha together with the
/// alpha x alpha MINDIST symbol-distance lookup table.
///
/// Breakpoint i (0-based) is the standard normal quantile (i + 1) / alpha, so
/// the alpha regions are equiprobable under N(0, 1). Symbol r and c are at
/// distance 0 when |r - c| <= 1, otherwise breakpoint[max - 1] - breakpoint[min].
class BreakpointTable {
 public:
  explicit BreakpointTable(std::size_t alpha) : alpha_(alpha) {
    if (alpha < kMinAlphabet || alpha > kMaxAlphabet) {
      throw InvalidParameter("alphabet size must be in [2, 20], got " + std::to_string(alpha));
    }
    breakpoints_.resize(alpha - 1);
    // Fill the lower half and mirror it so the table is exactly symmetric about 0.
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      const std::size_t mirror = breakpoints_.size() - 1 - i;
      if (2 * (i + 1) == alpha) {
        breakpoints_[i] = 0.0;
      } else if (i < mirror) {
        breakpoints_[i] = normal::quantile(static_cast<double>(i + 1) / static_cast<double>(alpha));
      } else {
        breakpoints_[i] = -breakpoints_[mirror];
      }
    }

    symbol_dist_.assign(alpha * alpha, 0.0);
    for (std::size_t r = 0; r < alpha; ++r) {
      for (std::size_t c = r + 2; c < alpha; ++c) {
        const double d = breakpoints_[c - 1] - breakpoints_[r];
        symbol_dist_[r * alpha + c] = d;
        symbol_dist_[c * alpha + r] = d;
      }
    }
  }

  std::size_t alpha() const noexcept { return alpha_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  double symbol_dist(std::size_t r, std::size_t c) const { return symbol_dist_.at(r * alpha_ + c); }

  // Row-major alpha x alpha matrix.
  const std::vector<double>& symbol_dist_matrix() const noexcept { return symbol_dist_; }

 private:
  std::size_t alpha_;
  std::vector<double> breakpoints_;
  std::vector<double> symbol_dist_;
};

inline BreakpointTable make_breakpoint_table(std::size_t alpha) { return BreakpointTable(alpha); }

}  // namespace tsax
