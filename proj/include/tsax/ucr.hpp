#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tsax/classify.hpp"
#include "tsax/errors.hpp"
#include "tsax/series.hpp"

namespace tsax {

namespace detail {

enum class Delimiter { tab, comma, whitespace };

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline Delimiter detect_delimiter(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return Delimiter::tab;
  if (line.find(',') != std::string_view::npos) return Delimiter::comma;
  return Delimiter::whitespace;
}

inline std::vector<std::string_view> split_fields(std::string_view line, Delimiter delim) {
  std::vector<std::string_view> fields;
  if (delim == Delimiter::whitespace) {
    std::size_t pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      const auto end = line.find_first_of(" \t\r", pos);
      fields.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
      if (end == std::string_view::npos) break;
      pos = end;
    }
    return fields;
  }
  const char sep = delim == Delimiter::tab ? '\t' : ',';
  std::size_t start = 0;
  while (true) {
    const auto end = line.find(sep, start);
    fields.push_back(trim(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

inline double parse_number(std::string_view field, std::size_t line, std::size_t column) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("not a number: '" + std::string(field) + "'", line, column);
  }
  if (!std::isfinite(value)) throw ParseError("non-finite value '" + std::string(field) + "'", line, column);
  return value;
}

}  // namespace detail

/// Parses UCR-format text: one series per line, class label first, then the
/// measurements. Tab, comma or whitespace separated (detected from the first
/// data line). Labels may be written as reals and are truncated to integers.
inline LabeledDataset parse_ucr(std::istream& in, std::string name) {
  std::vector<TimeSeries> series;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::optional<detail::Delimiter> delim;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = detail::trim(line);
    if (content.empty()) continue;
    if (!delim) delim = detail::detect_delimiter(content);
    const auto fields = detail::split_fields(content, *delim);
    if (fields.size() < 2) throw FormatError("line " + std::to_string(line_no) + " has no measurements");
    if (width == 0) {
      width = fields.size();
    } else if (fields.size() != width) {
      throw FormatError("ragged row at line " + std::to_string(line_no) + ": " + std::to_string(fields.size()) +
                        " fields, expected " + std::to_string(width));
    }
    const double raw_label = detail::parse_number(fields[0], line_no, 1);
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) values.push_back(detail::parse_number(fields[f], line_no, f + 1));
    series.emplace_back(std::move(values), static_cast<Label>(std::trunc(raw_label)));
  }
  if (series.empty()) throw InvalidInput("dataset " + name + " contains no series");
  return LabeledDataset(std::move(name), std::move(series));
}

inline std::string dataset_name_from_path(const std::filesystem::path& path) {
  std::string stem = path.stem().string();
  for (std::string_view suffix : {"_TEST", "_TRAIN"}) {
    if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
      stem.resize(stem.size() - suffix.size());
      break;
    }
  }
  return stem;
}

inline LabeledDataset parse_ucr_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_ucr(in, dataset_name_from_path(path));
}

/// Tab-separated, values printed with enough digits to read back bit-exact.
inline void write_ucr(std::ostream& out, const LabeledDataset& dataset) {
  char buf[32];
  for (const TimeSeries& s : dataset.series()) {
    out << *s.label();
    for (double v : s.values()) {
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << '\t' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

inline void write_ucr_file(const std::filesystem::path& path, const LabeledDataset& dataset) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_ucr(out, dataset);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace tsax
