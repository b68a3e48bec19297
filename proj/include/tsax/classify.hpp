#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsax/breakpoints.hpp"
#include "tsax/distance.hpp"
#include "tsax/errors.hpp"
#include "tsax/representation.hpp"
#include "tsax/series.hpp"

namespace tsax {

/// Labeled series of equal length (UCR convention). Labels are kept as read;
/// class_count is the number of distinct labels.
class LabeledDataset {
 public:
  LabeledDataset(std::string name, std::vector<TimeSeries> series) : name_(std::move(name)), series_(std::move(series)) {
    std::set<Label> labels;
    for (std::size_t i = 0; i < series_.size(); ++i) {
      if (!series_[i].label()) throw InvalidInput("series " + std::to_string(i) + " of " + name_ + " has no label");
      if (series_[i].size() != series_.front().size()) {
        throw InvalidInput("series " + std::to_string(i) + " of " + name_ + " has length " +
                           std::to_string(series_[i].size()) + ", expected " + std::to_string(series_.front().size()));
      }
      labels.insert(*series_[i].label());
    }
    class_count_ = labels.size();
  }

  const std::string& name() const noexcept { return name_; }
  std::span<const TimeSeries> series() const noexcept { return series_; }
  std::size_t size() const noexcept { return series_.size(); }
  bool empty() const noexcept { return series_.empty(); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::size_t length() const noexcept { return series_.empty() ? 0 : series_.front().size(); }

 private:
  std::string name_;
  std::vector<TimeSeries> series_;
  std::size_t class_count_ = 0;
};

enum class Method { sax, tsax };

inline const char* to_string(Method m) { return m == Method::sax ? "SAX" : "TSAX"; }

/// Representation and distance settings for one evaluation run.
struct ClassifierConfig {
  std::size_t alpha = 4;
  std::size_t segment_ratio = 4;  // n / m
  Method method = Method::tsax;
  TsaxDistanceParams params{};
};

struct QueryOutcome {
  Label truth;
  Label predicted;

  friend bool operator==(const QueryOutcome&, const QueryOutcome&) = default;
};

struct EvalResult {
  std::string dataset;
  std::size_t n_series = 0;
  std::size_t misclassified = 0;
  double error_rate = 0.0;
  std::vector<QueryOutcome> per_query;

  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// Distance callable for a config: MINDIST on the words for SAX, the
/// trend-augmented distance for TSAX.
class RepresentationDistance {
 public:
  RepresentationDistance(const BreakpointTable& table, Method method, TsaxDistanceParams params)
      : table_(&table), method_(method), params_(params) {}

  double operator()(const TsaxRepresentation& a, const TsaxRepresentation& b) const {
    return method_ == Method::sax ? sax_mindist(a, b, *table_) : tsax_dist(a, b, *table_, params_);
  }

 private:
  const BreakpointTable* table_;
  Method method_;
  TsaxDistanceParams params_;
};

// Relative gap below which two distances count as tied. Mathematically equal
// distances can come out of different summations a few ulps apart.
inline constexpr double kTieTolerance = 1e-9;

/// Index of the nearest reference, skipping `exclude`. Ties, including those
/// within kTieTolerance, go to the lowest index.
template <typename Distance>
std::size_t nearest_reference(const TsaxRepresentation& query, std::span<const LabeledRepresentation> references,
                              Distance&& distance, std::optional<std::size_t> exclude = std::nullopt) {
  std::optional<std::size_t> best;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < references.size(); ++i) {
    if (exclude && *exclude == i) continue;
    const double d = distance(query, references[i].rep);
    if (!best || d < best_distance - kTieTolerance * std::max(1.0, std::abs(best_distance))) {
      best = i;
      best_distance = d;
    }
  }
  if (!best) throw InvalidInput("1NN needs at least one reference");
  return *best;
}

template <typename Distance>
Label classify_1nn(const TsaxRepresentation& query, std::span<const LabeledRepresentation> references,
                   Distance&& distance) {
  return references[nearest_reference(query, references, std::forward<Distance>(distance))].label;
}

/// Transforms every series once; all share m = n / segment_ratio.
inline std::vector<LabeledRepresentation> represent_dataset(const LabeledDataset& dataset, const BreakpointTable& table,
                                                            std::size_t segment_ratio) {
  std::vector<LabeledRepresentation> out;
  out.reserve(dataset.size());
  const std::size_t m = segment_count(dataset.length(), segment_ratio);
  for (const TimeSeries& s : dataset.series()) out.push_back({tsax_transform(s, m, table), *s.label()});
  return out;
}

namespace detail {

inline EvalResult tally(std::string name, std::vector<QueryOutcome> outcomes) {
  EvalResult r;
  r.dataset = std::move(name);
  r.n_series = outcomes.size();
  for (const auto& o : outcomes) r.misclassified += o.truth != o.predicted ? 1 : 0;
  r.error_rate = r.n_series == 0 ? 0.0 : static_cast<double>(r.misclassified) / static_cast<double>(r.n_series);
  r.per_query = std::move(outcomes);
  return r;
}

}  // namespace detail

/// Leave-one-out over precomputed representations.
inline EvalResult evaluate_loo(std::string name, std::span<const LabeledRepresentation> reps, const BreakpointTable& table,
                               const ClassifierConfig& config) {
  if (reps.size() < 2) throw InvalidInput("leave-one-out needs at least 2 series");
  const RepresentationDistance distance(table, config.method, config.params);
  std::vector<QueryOutcome> outcomes;
  outcomes.reserve(reps.size());
  for (std::size_t q = 0; q < reps.size(); ++q) {
    const std::size_t nn = nearest_reference(reps[q].rep, reps, distance, q);
    outcomes.push_back({reps[q].label, reps[nn].label});
  }
  return detail::tally(std::move(name), std::move(outcomes));
}

inline EvalResult evaluate_loo(const LabeledDataset& dataset, const ClassifierConfig& config) {
  if (dataset.size() < 2) throw InvalidInput("leave-one-out needs at least 2 series");
  const BreakpointTable table(config.alpha);
  const auto reps = represent_dataset(dataset, table, config.segment_ratio);
  return evaluate_loo(dataset.name(), reps, table, config);
}

/// Each test representation against the train set only.
inline EvalResult evaluate_train_test(std::string name, std::span<const LabeledRepresentation> train,
                                      std::span<const LabeledRepresentation> test, const BreakpointTable& table,
                                      const ClassifierConfig& config) {
  if (train.empty() || test.empty()) throw InvalidInput("train and test splits must be non-empty");
  const RepresentationDistance distance(table, config.method, config.params);
  std::vector<QueryOutcome> outcomes;
  outcomes.reserve(test.size());
  for (const auto& q : test) outcomes.push_back({q.label, classify_1nn(q.rep, train, distance)});
  return detail::tally(std::move(name), std::move(outcomes));
}

inline EvalResult evaluate_train_test(const LabeledDataset& train, const LabeledDataset& test,
                                      const ClassifierConfig& config) {
  if (train.empty() || test.empty()) throw InvalidInput("train and test splits must be non-empty");
  if (train.length() != test.length()) {
    throw IncompatibleRepresentation("train length " + std::to_string(train.length()) + " differs from test length " +
                                     std::to_string(test.length()));
  }
  const BreakpointTable table(config.alpha);
  const auto train_reps = represent_dataset(train, table, config.segment_ratio);
  const auto test_reps = represent_dataset(test, table, config.segment_ratio);
  return evaluate_train_test(test.name(), train_reps, test_reps, table, config);
}

}  // namespace tsax
