#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tsax/breakpoints.hpp"
#include "tsax/classify.hpp"
#include "tsax/errors.hpp"
#include "tsax/serialize.hpp"
#include "tsax/synthetic.hpp"
#include "tsax/ucr.hpp"

namespace tsax::bench {

enum class Protocol { loo, train_test };

/// Defaults reproduce the published setup: alpha = 4, n/m = 4, rew = -1, pen = +1, leave-one-out.
struct ExperimentConfig {
  std::size_t alpha = 4;
  std::size_t segment_ratio = 4;
  double rew = -1.0;
  double pen = 1.0;
  Protocol protocol = Protocol::loo;
  std::vector<std::filesystem::path> data;
  bool synthetic = false;
  std::uint64_t seed = 7;
  std::optional<std::filesystem::path> cache_dir;
};

enum class Winner { sax, tsax, tie };

inline const char* to_string(Winner w) {
  switch (w) {
    case Winner::sax: return "SAX";
    case Winner::tsax: return "TSAX";
    case Winner::tie: return "TIE";
  }
  return "?";
}

inline Winner winner_of(double sax_error, double tsax_error) {
  if (tsax_error < sax_error) return Winner::tsax;
  if (sax_error < tsax_error) return Winner::sax;
  return Winner::tie;
}

struct ReportRow {
  std::string dataset;
  std::size_t n_series = 0;
  std::size_t classes = 0;
  std::size_t length = 0;
  double sax_error = 0.0;
  double tsax_error = 0.0;

  Winner winner() const { return winner_of(sax_error, tsax_error); }
};

struct DatasetFailure {
  std::string source;
  std::string message;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<DatasetFailure> failures;

  std::size_t count(Winner w) const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.winner() == w ? 1 : 0;
    return c;
  }
};

/// 64-bit FNV-1a, used to key representation caches by file content.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Locates the split files for a --data argument. A directory `X` is looked
/// up as `X/X_TEST.*` and `X/X_TRAIN.*`; a file is taken as the test split
/// and its train sibling is found by replacing `_TEST` with `_TRAIN`.
struct DatasetFiles {
  std::string name;
  std::filesystem::path test;
  std::optional<std::filesystem::path> train;
};

inline DatasetFiles resolve_dataset(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  auto find_split = [](const fs::path& dir, const std::string& stem) -> std::optional<fs::path> {
    for (const char* ext : {".tsv", ".txt", ".csv", ""}) {
      const fs::path candidate = dir / (stem + ext);
      if (fs::is_regular_file(candidate)) return candidate;
    }
    return std::nullopt;
  };

  if (fs::is_directory(path)) {
    const std::string name = path.filename().empty() ? path.parent_path().filename().string() : path.filename().string();
    const auto test = find_split(path, name + "_TEST");
    if (!test) throw IoError("no " + name + "_TEST file in " + path.string());
    return {name, *test, find_split(path, name + "_TRAIN")};
  }
  if (!fs::is_regular_file(path)) throw IoError("no such dataset file: " + path.string());

  DatasetFiles files{dataset_name_from_path(path), path, std::nullopt};
  const std::string stem = path.stem().string();
  if (const auto pos = stem.rfind("_TEST"); pos != std::string::npos) {
    fs::path train = path;
    train.replace_filename(stem.substr(0, pos) + "_TRAIN" + stem.substr(pos + 5) + path.extension().string());
    if (fs::is_regular_file(train)) files.train = train;
  }
  return files;
}

/// Parses a split and builds its representations, going through the cache
/// directory when one is configured.
inline std::vector<LabeledRepresentation> load_representations(const std::filesystem::path& file,
                                                               const LabeledDataset& dataset,
                                                               const std::string& content,
                                                               const BreakpointTable& table,
                                                               const ExperimentConfig& config) {
  if (!config.cache_dir) return represent_dataset(dataset, table, config.segment_ratio);

  char key[64];
  std::snprintf(key, sizeof key, "%016llx_a%zu_r%zu.tsaxc", static_cast<unsigned long long>(fnv1a64(content)),
                config.alpha, config.segment_ratio);
  const std::filesystem::path cache_path = *config.cache_dir / key;
  if (std::filesystem::is_regular_file(cache_path)) {
    const std::string bytes = read_file(cache_path);
    return deserialize_representations(
        std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
  }

  auto reps = represent_dataset(dataset, table, config.segment_ratio);
  std::filesystem::create_directories(*config.cache_dir);
  const Bytes bytes = serialize_representations(reps, /*rle=*/true);
  std::ofstream out(cache_path, std::ios::binary);
  if (!out) throw IoError("cannot write cache file " + cache_path.string() + " for " + file.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  return reps;
}

/// SAX and TSAX errors for one dataset under one protocol.
inline ReportRow compare_methods(const std::string& name, std::span<const LabeledRepresentation> test_reps,
                                 std::span<const LabeledRepresentation> train_reps, const LabeledDataset& test,
                                 const BreakpointTable& table, const ExperimentConfig& config) {
  ClassifierConfig sax{config.alpha, config.segment_ratio, Method::sax, {config.rew, config.pen}};
  ClassifierConfig tsax = sax;
  tsax.method = Method::tsax;

  auto run = [&](const ClassifierConfig& c) {
    return config.protocol == Protocol::loo ? evaluate_loo(name, test_reps, table, c)
                                            : evaluate_train_test(name, train_reps, test_reps, table, c);
  };
  return {name, test.size(), test.class_count(), test.length(), run(sax).error_rate, run(tsax).error_rate};
}

inline ReportRow compare_methods(const LabeledDataset& test, const LabeledDataset* train, const ExperimentConfig& config) {
  const BreakpointTable table(config.alpha);
  const auto test_reps = represent_dataset(test, table, config.segment_ratio);
  std::vector<LabeledRepresentation> train_reps;
  if (train) train_reps = represent_dataset(*train, table, config.segment_ratio);
  return compare_methods(test.name(), test_reps, train_reps, test, table, config);
}

/// Runs SAX and TSAX on every dataset. Failures are recorded per dataset and
/// do not stop the batch; rows keep the input order.
inline ExperimentReport run_comparison(const ExperimentConfig& config) {
  if (config.data.empty() && !config.synthetic) throw InvalidParameter("no datasets given");
  const BreakpointTable table(config.alpha);
  ExperimentReport report;

  if (config.synthetic) {
    TrendPairOptions opt;
    opt.seed = config.seed;
    opt.segment_width = config.segment_ratio;
    const LabeledDataset all = generate_trend_pair_dataset(opt);
    if (config.protocol == Protocol::loo) {
      report.rows.push_back(compare_methods(all, nullptr, config));
    } else {
      // Alternate series into train and test so both splits hold both classes.
      std::vector<TimeSeries> train, test;
      for (std::size_t i = 0; i < all.size(); ++i) (i % 2 == 0 ? train : test).push_back(all.series()[i]);
      const LabeledDataset train_set(all.name(), std::move(train));
      const LabeledDataset test_set(all.name(), std::move(test));
      report.rows.push_back(compare_methods(test_set, &train_set, config));
    }
  }

  for (const auto& path : config.data) {
    try {
      const DatasetFiles files = resolve_dataset(path);
      const std::string test_content = read_file(files.test);
      std::istringstream test_stream(test_content);
      const LabeledDataset test = parse_ucr(test_stream, files.name);
      const auto test_reps = load_representations(files.test, test, test_content, table, config);

      std::vector<LabeledRepresentation> train_reps;
      if (config.protocol == Protocol::train_test) {
        if (!files.train) throw IoError("no train split found for " + files.name);
        const std::string train_content = read_file(*files.train);
        std::istringstream train_stream(train_content);
        const LabeledDataset train = parse_ucr(train_stream, files.name);
        if (train.length() != test.length()) throw FormatError("train and test lengths differ for " + files.name);
        train_reps = load_representations(*files.train, train, train_content, table, config);
      }
      report.rows.push_back(compare_methods(files.name, test_reps, train_reps, test, table, config));
    } catch (const std::exception& e) {
      report.failures.push_back({path.string(), e.what()});
    }
  }
  return report;
}

inline std::string format_error_rate(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", e);
  return buf;
}

inline void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  if (report.rows.empty()) throw InvalidInput("report has no rows");
  out << "dataset,n_series,classes,length,sax_error,tsax_error,winner\n";
  for (const auto& r : report.rows) {
    out << r.dataset << ',' << r.n_series << ',' << r.classes << ',' << r.length << ','
        << format_error_rate(r.sax_error) << ',' << format_error_rate(r.tsax_error) << ',' << to_string(r.winner())
        << '\n';
  }
  out << "# tsax_wins=" << report.count(Winner::tsax) << ",sax_wins=" << report.count(Winner::sax)
      << ",ties=" << report.count(Winner::tie) << '\n';
  for (const auto& f : report.failures) out << "# failed " << f.source << ": " << f.message << '\n';
}

inline void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  if (report.rows.empty()) throw InvalidInput("report has no rows");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_report_csv(out, report);
  if (!out) throw IoError("failed writing " + path.string());
}

// (sax_error, tsax_error) per dataset, for scatter plots.
inline void write_scatter_csv(std::ostream& out, const ExperimentReport& report) {
  out << "dataset,sax_error,tsax_error\n";
  for (const auto& r : report.rows) {
    out << r.dataset << ',' << format_error_rate(r.sax_error) << ',' << format_error_rate(r.tsax_error) << '\n';
  }
}

inline void write_scatter_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_scatter_csv(out, report);
  if (!out) throw IoError("failed writing " + path.string());
}

inline std::filesystem::path scatter_path_for(const std::filesystem::path& report_path) {
  std::filesystem::path p = report_path;
  p.replace_filename(report_path.stem().string() + "_scatter" + report_path.extension().string());
  return p;
}

}  // namespace tsax::bench
