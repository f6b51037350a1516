#pragma once

#include <filesystem>
#include <string>

#include "tscx/series.hpp"

namespace tscx {

enum class SeriesFormat {
  plain_lines,  // one decimal value per line; blank lines skipped; LF or CRLF
  csv_column,   // comma separated, one column selected by name or 0-based index
};

struct SeriesFile {
  std::filesystem::path path;
  SeriesFormat format = SeriesFormat::plain_lines;
  std::string column;  // name (needs a header) or 0-based index; empty = first column
  bool skip_header = false;
};

// Reads one series labelled with the file stem. Parse failures name the
// 1-based line number.
Series read_series(const SeriesFile& file);

// Plain-lines writer, 17 significant digits so values survive a round trip.
void write_series(const Series& series, const std::filesystem::path& path);

}  // namespace tscx
