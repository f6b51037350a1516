#include "tscx/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tscx/error.hpp"

namespace tscx {

using ordered_json = nlohmann::ordered_json;

void ExperimentReport::add(ReportRow row) {
  if (find(row.label, row.scale, row.metric) != nullptr) {
    throw Error(ErrorKind::usage, "duplicate report key (" + row.label + ", " + std::to_string(row.scale) + ", " +
                                      row.metric + ")");
  }
  for (const auto& [name, cell] : row.extra) add_column(name);
  rows_.push_back(std::move(row));
}

std::string error_warning(ErrorKind kind, std::string_view message) {
  switch (kind) {
    case ErrorKind::usage: return "usage error: " + std::string(message);
    case ErrorKind::numerical: return "numerical error: " + std::string(message);
    case ErrorKind::data: break;
  }
  return "error: " + std::string(message);
}

std::optional<ErrorKind> row_error(const ReportRow& row) {
  if (row.warnings.empty()) return std::nullopt;
  const std::string_view w = row.warnings.front();
  if (w.starts_with("error: ")) return ErrorKind::data;
  if (w.starts_with("usage error: ")) return ErrorKind::usage;
  if (w.starts_with("numerical error: ")) return ErrorKind::numerical;
  return std::nullopt;
}

ReportRow& ExperimentReport::add_result(const std::string& label, std::size_t scale, const MetricResult& result) {
  ReportRow row;
  row.label = label;
  row.scale = scale;
  row.metric = result.name;
  row.value = result.value;
  row.statistic = result.statistic;
  row.df = result.df;
  row.p_value = result.p_value;
  row.warnings = result.warnings;
  if (result.error) row.warnings.insert(row.warnings.begin(), error_warning(result.error_kind, *result.error));
  add(std::move(row));
  return rows_.back();
}

void ExperimentReport::add_column(const std::string& name) {
  if (std::find(std::begin(kColumns), std::end(kColumns), name) != std::end(kColumns)) {
    throw Error(ErrorKind::usage, "extra column '" + name + "' shadows a fixed column");
  }
  if (std::find(extra_columns_.begin(), extra_columns_.end(), name) == extra_columns_.end()) {
    extra_columns_.push_back(name);
  }
}

const ReportRow* ExperimentReport::find(std::string_view label, std::size_t scale, std::string_view metric) const {
  for (const auto& r : rows_) {
    if (r.scale == scale && r.label == label && r.metric == metric) return &r;
  }
  return nullptr;
}

void ExperimentReport::merge(const ExperimentReport& other) {
  for (const auto& c : other.extra_columns_) add_column(c);
  for (const auto& r : other.rows_) add(r);
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw Error(ErrorKind::usage, "unknown report format '" + std::string(text) + "' (expected csv or json)");
}

namespace {

std::string fmt6(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt6(const std::optional<double>& v) { return v ? fmt6(*v) : std::string(); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_warnings(const std::vector<std::string>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "; ";
    out += w[i];
  }
  return out;
}

std::string cell_csv(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return fmt6(*d);
  if (const auto* s = std::get_if<std::string>(&c)) return csv_quote(*s);
  return {};
}

ordered_json num_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? ordered_json(*d) : ordered_json(nullptr);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

std::string render_csv(const ExperimentReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(ExperimentReport::kColumns); ++i) {
    if (i) out << ',';
    out << ExperimentReport::kColumns[i];
  }
  for (const auto& c : report.extra_columns()) out << ',' << csv_quote(c);
  out << '\n';
  for (const auto& r : report.rows()) {
    out << csv_quote(r.label) << ',' << r.scale << ',' << csv_quote(r.metric) << ',' << fmt6(r.value) << ','
        << fmt6(r.statistic) << ',' << fmt6(r.df) << ',' << fmt6(r.p_value) << ',' << csv_quote(join_warnings(r.warnings));
    for (const auto& c : report.extra_columns()) {
      out << ',';
      if (auto it = r.extra.find(c); it != r.extra.end()) out << cell_csv(it->second);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const ExperimentReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : report.rows()) {
    ordered_json o;
    o["label"] = r.label;
    o["scale"] = r.scale;
    o["metric"] = r.metric;
    o["value"] = num_or_null(r.value);
    o["statistic"] = num_or_null(r.statistic);
    o["df"] = num_or_null(r.df);
    o["p_value"] = num_or_null(r.p_value);
    o["warnings"] = r.warnings;
    for (const auto& c : report.extra_columns()) {
      if (auto it = r.extra.find(c); it != r.extra.end()) o[c] = cell_json(it->second);
    }
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::optional<double> opt_number(const ordered_json& o, const char* key) {
  if (!o.contains(key) || o.at(key).is_null()) return std::nullopt;
  return o.at(key).get<double>();
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::vector<std::string>> parse_csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      any = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !field.empty()) {
        fields.push_back(std::move(field));
        records.push_back(std::move(fields));
      }
      fields.clear();
      field.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (any || !field.empty()) {
    fields.push_back(std::move(field));
    records.push_back(std::move(fields));
  }
  return records;
}

}  // namespace

std::string render_report(const ExperimentReport& report, ReportFormat format) {
  return format == ReportFormat::csv ? render_csv(report) : render_json(report);
}

void write_report(const ExperimentReport& report, ReportFormat format, const std::filesystem::path& path) {
  if (report.empty()) throw Error(ErrorKind::usage, "refusing to write an empty report");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::data, "cannot write report to " + path.string());
  out << render_report(report, format);
  if (!out) throw Error(ErrorKind::data, "write failed for " + path.string());
}

ExperimentReport parse_report_json(std::string_view text) {
  ExperimentReport report;
  try {
    const auto arr = ordered_json::parse(text);
    if (!arr.is_array()) throw Error(ErrorKind::data, "report JSON must be an array");
    for (const auto& o : arr) {
      ReportRow row;
      row.label = o.at("label").get<std::string>();
      row.scale = o.at("scale").get<std::size_t>();
      row.metric = o.at("metric").get<std::string>();
      row.value = opt_number(o, "value");
      row.statistic = opt_number(o, "statistic");
      row.df = opt_number(o, "df");
      row.p_value = opt_number(o, "p_value");
      if (o.contains("warnings")) row.warnings = o.at("warnings").get<std::vector<std::string>>();
      for (const auto& [key, val] : o.items()) {
        if (std::find(std::begin(ExperimentReport::kColumns), std::end(ExperimentReport::kColumns), key) !=
            std::end(ExperimentReport::kColumns)) {
          continue;
        }
        if (val.is_number()) {
          row.extra[key] = val.get<double>();
        } else if (val.is_string()) {
          row.extra[key] = val.get<std::string>();
        } else {
          row.extra[key] = std::monostate{};
        }
        report.add_column(key);
      }
      report.add(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::data, std::string("malformed report JSON: ") + e.what());
  }
  return report;
}

ExperimentReport parse_report_csv(std::string_view text) {
  const auto records = parse_csv_records(text);
  if (records.empty()) throw Error(ErrorKind::data, "empty report CSV");
  const auto& header = records.front();
  const std::size_t fixed = std::size(ExperimentReport::kColumns);
  if (header.size() < fixed || !std::equal(header.begin(), header.begin() + fixed, std::begin(ExperimentReport::kColumns))) {
    throw Error(ErrorKind::data, "report CSV header does not start with label,scale,metric,value,statistic,df,p_value,warnings");
  }
  ExperimentReport report;
  for (std::size_t c = fixed; c < header.size(); ++c) report.add_column(header[c]);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != header.size()) {
      throw Error(ErrorKind::data, "report CSV record " + std::to_string(i + 1) + " has " + std::to_string(f.size()) +
                                       " fields, expected " + std::to_string(header.size()));
    }
    ReportRow row;
    row.label = f[0];
    const auto scale = parse_number(f[1]);
    if (!scale || *scale < 1) throw Error(ErrorKind::data, "bad scale in report CSV record " + std::to_string(i + 1));
    row.scale = static_cast<std::size_t>(*scale);
    row.metric = f[2];
    row.value = parse_number(f[3]);
    row.statistic = parse_number(f[4]);
    row.df = parse_number(f[5]);
    row.p_value = parse_number(f[6]);
    std::string_view w = f[7];
    while (!w.empty()) {
      const auto sep = w.find("; ");
      row.warnings.emplace_back(w.substr(0, sep));
      if (sep == std::string_view::npos) break;
      w.remove_prefix(sep + 2);
    }
    for (std::size_t c = fixed; c < header.size(); ++c) {
      if (f[c].empty()) continue;
      if (auto num = parse_number(f[c])) {
        row.extra[header[c]] = *num;
      } else {
        row.extra[header[c]] = f[c];
      }
    }
    report.add(std::move(row));
  }
  return report;
}

ExperimentReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::data, "cannot open report " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_report_json(text);
  return parse_report_csv(text);
}

}  // namespace tscx
