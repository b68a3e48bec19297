#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "tsax/classify.hpp"
#include "tsax/synthetic.hpp"

using namespace tsax;

namespace {

std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  double x = 0.0;
  for (double& y : v) y = (x += d(rng));
  return v;
}

LabeledDataset random_dataset(std::mt19937_64& rng, std::size_t count, std::size_t n, int classes) {
  std::vector<TimeSeries> series;
  for (std::size_t i = 0; i < count; ++i) series.emplace_back(random_walk(rng, n), int(1 + rng() % classes));
  return LabeledDataset("random", std::move(series));
}

struct RawSet {
  std::vector<std::vector<double>> values;
  std::vector<int> labels;
};

RawSet raw(const LabeledDataset& d) {
  RawSet r;
  for (const auto& s : d.series()) {
    r.values.emplace_back(s.values().begin(), s.values().end());
    r.labels.push_back(*s.label());
  }
  return r;
}

ClassifierConfig config(Method method, double rew = -1.0, double pen = 1.0) {
  return ClassifierConfig{4, 4, method, {rew, pen}};
}

}  // namespace

TEST(LabeledDataset, Invariants) {
  EXPECT_THROW(LabeledDataset("x", {TimeSeries({1.0, 2.0})}), InvalidInput);
  EXPECT_THROW(LabeledDataset("x", {TimeSeries({1.0, 2.0}, 1), TimeSeries({1.0}, 1)}), InvalidInput);
  const LabeledDataset d("x", {TimeSeries({1.0, 2.0}, 1), TimeSeries({1.0, 3.0}, 7), TimeSeries({0.0, 3.0}, 1)});
  EXPECT_EQ(d.class_count(), 2u);
  EXPECT_EQ(d.length(), 2u);
}

TEST(Classify1nn, ExactMatchWins) {
  const BreakpointTable table(4);
  std::vector<LabeledRepresentation> refs = {
      {TsaxRepresentation(SaxWord::from_string("aadd", 16, 4), TrendBits(4)), 1},
      {TsaxRepresentation(SaxWord::from_string("ddaa", 16, 4), TrendBits(4)), 2},
      {TsaxRepresentation(SaxWord::from_string("adad", 16, 4), TrendBits(4)), 3},
  };
  const RepresentationDistance sax(table, Method::sax, {});
  EXPECT_EQ(classify_1nn(refs[1].rep, refs, sax), 2);
  EXPECT_EQ(classify_1nn(refs[2].rep, refs, sax), 3);
}

TEST(Classify1nn, TiesGoToLowestIndex) {
  const BreakpointTable table(4);
  const TsaxRepresentation r(SaxWord::from_string("abcd", 16, 4), TrendBits(4));
  std::vector<LabeledRepresentation> refs = {{r, 5}, {r, 6}, {r, 7}};
  EXPECT_EQ(classify_1nn(r, refs, RepresentationDistance(table, Method::tsax, {})), 5);
  EXPECT_EQ(nearest_reference(r, refs, RepresentationDistance(table, Method::sax, {}), 0), 1u);
}

TEST(Classify1nn, EmptyReferencesRejected) {
  const BreakpointTable table(4);
  const TsaxRepresentation r(SaxWord::from_string("abcd", 16, 4), TrendBits(4));
  EXPECT_THROW(classify_1nn(r, std::span<const LabeledRepresentation>{}, RepresentationDistance(table, Method::sax, {})),
               InvalidInput);
}

TEST(EvaluateLoo, TrivialTwoSeriesSets) {
  const std::vector<double> v = {1, 3, 2, 5, 4, 6, 8, 7};
  const LabeledDataset same("same", {TimeSeries(v, 1), TimeSeries(v, 1)});
  const LabeledDataset diff("diff", {TimeSeries(v, 1), TimeSeries(v, 2)});
  for (Method m : {Method::sax, Method::tsax}) {
    EXPECT_EQ(evaluate_loo(same, config(m)).error_rate, 0.0);
    const auto r = evaluate_loo(diff, config(m));
    EXPECT_EQ(r.error_rate, 1.0);
    EXPECT_EQ(r.per_query, (std::vector<QueryOutcome>{{1, 2}, {2, 1}}));
  }
  EXPECT_THROW(evaluate_loo(LabeledDataset("one", {TimeSeries(v, 1)}), config(Method::sax)), InvalidInput);
}

TEST(EvaluateLoo, NoisyRampsSeparatedByTrend) {
  const auto data = generate_trend_pair_dataset({20, 64, 0.1, 7, 4});
  const auto r = raw(data);
  const auto tsax_result = evaluate_loo(data, config(Method::tsax));
  const auto sax_result = evaluate_loo(data, config(Method::sax));
  EXPECT_EQ(tsax_result.error_rate, oracle::loo_error(r.values, r.labels, 16, 4, true, -1.0, 1.0));
  EXPECT_EQ(sax_result.error_rate, oracle::loo_error(r.values, r.labels, 16, 4, false, 0.0, 0.0));
  EXPECT_EQ(tsax_result.error_rate, 0.0);
  EXPECT_GE(sax_result.error_rate, tsax_result.error_rate);
  EXPECT_EQ(tsax_result.n_series, 40u);
}

TEST(EvaluateLoo, AgreesWithEnumerationOracleOnRandomData) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 32 + rng() % 100;
    const auto data = random_dataset(rng, 25, n, 3);
    const auto r = raw(data);
    const std::size_t m = segment_count(n, 4);
    for (auto [rew, pen] : {std::pair{-1.0, 1.0}, std::pair{-0.5, 2.0}}) {
      EXPECT_DOUBLE_EQ(evaluate_loo(data, config(Method::tsax, rew, pen)).error_rate,
                       oracle::loo_error(r.values, r.labels, m, 4, true, rew, pen));
    }
    EXPECT_DOUBLE_EQ(evaluate_loo(data, config(Method::sax)).error_rate,
                     oracle::loo_error(r.values, r.labels, m, 4, false, 0, 0));
  }
}

TEST(EvaluateLoo, DeterministicAndBounded) {
  std::mt19937_64 rng(3);
  const auto data = random_dataset(rng, 30, 80, 4);
  const auto a = evaluate_loo(data, config(Method::tsax));
  EXPECT_EQ(a, evaluate_loo(data, config(Method::tsax)));
  EXPECT_GE(a.error_rate, 0.0);
  EXPECT_LE(a.error_rate, 1.0);
  EXPECT_EQ(a.error_rate, double(a.misclassified) / double(a.n_series));
}

TEST(EvaluateLoo, DuplicatedSeriesAreAlwaysFound) {
  std::mt19937_64 rng(8);
  const auto base = random_dataset(rng, 15, 128, 3);
  std::vector<TimeSeries> doubled;
  for (const auto& s : base.series()) {
    doubled.push_back(s);
    doubled.push_back(s);
  }
  EXPECT_EQ(evaluate_loo(LabeledDataset("dup", doubled), config(Method::tsax)).error_rate, 0.0);
}

TEST(EvaluateLoo, PredictionsInvariantUnderCommonShiftOfWeights) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 5; ++trial) {
    const auto data = random_dataset(rng, 30, 64 + rng() % 64, 3);
    const auto base = evaluate_loo(data, config(Method::tsax, -1.0, 1.0));
    for (double delta : {-3.0, -0.5, 0.25, 2.0, 10.0}) {
      EXPECT_EQ(evaluate_loo(data, config(Method::tsax, -1.0 + delta, 1.0 + delta)).per_query, base.per_query)
          << "delta=" << delta;
    }
  }
}

TEST(EvaluateTrainTest, TrivialAndSingleReference) {
  const std::vector<double> v = {1, 3, 2, 5, 4, 6, 8, 7};
  const LabeledDataset same("same", {TimeSeries(v, 1), TimeSeries(v, 1)});
  EXPECT_EQ(evaluate_train_test(same, same, config(Method::tsax)).error_rate, 0.0);

  std::mt19937_64 rng(1);
  const auto test = random_dataset(rng, 12, 64, 3);
  const LabeledDataset single("single", {TimeSeries(random_walk(rng, 64), 9)});
  const auto r = evaluate_train_test(single, test, config(Method::sax));
  for (const auto& q : r.per_query) EXPECT_EQ(q.predicted, 9);
  EXPECT_EQ(r.error_rate, 1.0);
}

TEST(EvaluateTrainTest, RampsSplitInHalf) {
  const auto data = generate_trend_pair_dataset({20, 64, 0.1, 7, 4});
  std::vector<TimeSeries> train, test;
  for (std::size_t i = 0; i < data.size(); ++i) (i % 2 == 0 ? train : test).push_back(data.series()[i]);
  const auto r = evaluate_train_test(LabeledDataset("tr", train), LabeledDataset("te", test), config(Method::tsax));
  EXPECT_EQ(r.error_rate, 0.0);
  EXPECT_EQ(r.n_series, 20u);
}

TEST(EvaluateTrainTest, RejectsEmptyOrMismatchedSplits) {
  const LabeledDataset a("a", {TimeSeries({1, 2, 3, 4, 5, 6, 7, 8}, 1)});
  const LabeledDataset b("b", {TimeSeries({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, 1)});
  const LabeledDataset empty("e", {});
  EXPECT_THROW(evaluate_train_test(empty, a, config(Method::sax)), InvalidInput);
  EXPECT_THROW(evaluate_train_test(a, empty, config(Method::sax)), InvalidInput);
  EXPECT_THROW(evaluate_train_test(a, b, config(Method::sax)), IncompatibleRepresentation);
}
