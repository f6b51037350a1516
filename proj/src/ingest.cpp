#include "tscx/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "tscx/error.hpp"

namespace tscx {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void parse_failure(const std::filesystem::path& path, std::size_t line, std::string_view text) {
  throw Error(ErrorKind::data, path.string() + ":" + std::to_string(line) + ": cannot parse '" + std::string(text) +
                                   "' as a finite number");
}

double parse_value(std::string_view text, const std::filesystem::path& path, std::size_t line) {
  std::string buf(text);
  // Accept a typographic minus sign (U+2212).
  if (buf.rfind("\xE2\x88\x92", 0) == 0) buf.replace(0, 3, "-");
  std::string_view s = buf;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    parse_failure(path, line, text);
  }
  return v;
}

bool is_index(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Series read_series(const SeriesFile& file) {
  std::ifstream in(file.path, std::ios::binary);
  if (!in) throw Error(ErrorKind::data, "cannot open series file " + file.path.string());

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  std::size_t column = 0;
  bool column_resolved = file.format == SeriesFormat::plain_lines || file.column.empty() || is_index(file.column);
  if (file.format == SeriesFormat::csv_column && is_index(file.column)) column = std::stoul(file.column);
  if (!column_resolved && !file.skip_header) {
    throw Error(ErrorKind::usage, "column '" + file.column + "' named but the file has no header (use skip_header)");
  }
  bool header_pending = file.skip_header;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (header_pending) {
      header_pending = false;
      if (!column_resolved) {
        const auto names = split_csv(text);
        const auto it = std::find(names.begin(), names.end(), file.column);
        if (it == names.end()) {
          throw Error(ErrorKind::data, file.path.string() + ": no column named '" + file.column + "'");
        }
        column = static_cast<std::size_t>(it - names.begin());
        column_resolved = true;
      }
      continue;
    }
    if (file.format == SeriesFormat::plain_lines) {
      values.push_back(parse_value(text, file.path, line_no));
    } else {
      const auto fields = split_csv(text);
      if (column >= fields.size()) {
        throw Error(ErrorKind::data, file.path.string() + ":" + std::to_string(line_no) + ": missing column " +
                                         std::to_string(column));
      }
      values.push_back(parse_value(fields[column], file.path, line_no));
    }
  }
  if (values.empty()) throw Error(ErrorKind::data, "empty input: " + file.path.string());
  return Series(std::move(values), file.path.stem().string());
}

void write_series(const Series& series, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::data, "cannot write " + path.string());
  char buf[40];
  for (double v : series.values()) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out << buf;
  }
  if (!out) throw Error(ErrorKind::data, "write failed for " + path.string());
}

}  // namespace tscx
