#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "tsax/breakpoints.hpp"

using tsax::BreakpointTable;

namespace {

// Standard normal quantiles computed with mpmath at 30 digits.
constexpr double kQ13 = 0.43072729929545749;  // 2/3
constexpr double kQ34 = 0.67448975019608174;  // 3/4
constexpr double kQ1920 = 1.6448536269514727;  // 19/20

}  // namespace

TEST(Breakpoints, AlphaFourMatchesQuartiles) {
  const BreakpointTable t(4);
  ASSERT_EQ(t.breakpoints().size(), 3u);
  EXPECT_NEAR(t.breakpoints()[0], -kQ34, 1e-14);
  EXPECT_EQ(t.breakpoints()[1], 0.0);
  EXPECT_NEAR(t.breakpoints()[2], kQ34, 1e-14);
}

TEST(Breakpoints, AlphaTwoIsMedian) {
  const BreakpointTable t(2);
  ASSERT_EQ(t.breakpoints().size(), 1u);
  EXPECT_EQ(t.breakpoints()[0], 0.0);
}

TEST(Breakpoints, AlphaThreeAgainstHighPrecisionQuantiles) {
  const BreakpointTable t(3);
  EXPECT_NEAR(t.breakpoints()[0], -kQ13, 1e-12);
  EXPECT_NEAR(t.breakpoints()[1], kQ13, 1e-12);
  EXPECT_NEAR(BreakpointTable(20).breakpoints().back(), kQ1920, 1e-12);
}

TEST(Breakpoints, EquiprobableForEveryAlphabet) {
  for (std::size_t alpha = 2; alpha <= 20; ++alpha) {
    const BreakpointTable t(alpha);
    const auto& bp = t.breakpoints();
    ASSERT_EQ(bp.size(), alpha - 1);
    for (std::size_t i = 0; i < bp.size(); ++i) {
      EXPECT_NEAR(oracle::phi(bp[i]), double(i + 1) / double(alpha), 1e-6) << "alpha=" << alpha << " i=" << i;
      EXPECT_NEAR(bp[i], oracle::quantile(double(i + 1) / double(alpha)), 1e-12);
      EXPECT_EQ(bp[i], -bp[bp.size() - 1 - i]);
      if (i > 0) {
        EXPECT_LT(bp[i - 1], bp[i]);
      }
    }
  }
}

TEST(Breakpoints, SymbolDistanceMatrixShape) {
  for (std::size_t alpha = 2; alpha <= 20; ++alpha) {
    const BreakpointTable t(alpha);
    for (std::size_t r = 0; r < alpha; ++r) {
      for (std::size_t c = 0; c < alpha; ++c) {
        EXPECT_EQ(t.symbol_dist(r, c), t.symbol_dist(c, r));
        if (r + 1 >= c && c + 1 >= r) {
          EXPECT_EQ(t.symbol_dist(r, c), 0.0);
        } else {
          EXPECT_GT(t.symbol_dist(r, c), 0.0);
        }
        if (c > r) {
          EXPECT_GE(t.symbol_dist(r, c), t.symbol_dist(r, c - 1));
        }
        if (c < r) {
          EXPECT_GE(t.symbol_dist(r, c), t.symbol_dist(r, c + 1));
        }
      }
    }
  }
}

TEST(Breakpoints, LookupTableForAlphabetFour) {
  // The published SAX lookup table prints these truncated to two decimals.
  const BreakpointTable t(4);
  const double expected[4][4] = {
      {0, 0, 0.67, 1.34}, {0, 0, 0, 0.67}, {0.67, 0, 0, 0}, {1.34, 0.67, 0, 0}};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_DOUBLE_EQ(std::floor(t.symbol_dist(r, c) * 100.0) / 100.0, expected[r][c]);
    }
  }
  EXPECT_NEAR(t.symbol_dist(0, 3), 2 * kQ34, 1e-14);
}

TEST(Breakpoints, RejectsOutOfRangeAlphabet) {
  EXPECT_THROW(BreakpointTable(1), tsax::InvalidParameter);
  EXPECT_THROW(BreakpointTable(21), tsax::InvalidParameter);
  EXPECT_NO_THROW(BreakpointTable(20));
}

TEST(NormalQuantile, TailsAndEdges) {
  for (double p : {1e-12, 1e-6, 0.01, 0.02425, 0.3, 0.97575, 0.999999}) {
    EXPECT_NEAR(tsax::normal::quantile(p), oracle::quantile(p), 1e-9 * (1 + std::abs(oracle::quantile(p)))) << p;
  }
  EXPECT_TRUE(std::isinf(tsax::normal::quantile(0.0)));
  EXPECT_TRUE(std::isnan(tsax::normal::quantile(1.5)));
}
