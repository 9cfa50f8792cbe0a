#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphentropy::cli {

/// 17 significant digits, round-trippable.
std::string format_double(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Quotes a field containing commas, quotes or newlines.
std::string csv_field(const std::string& s);

/// Comma-separated, mandatory header row; first column is `t`.
void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<double>& times,
               const std::vector<std::vector<double>>& columns);
void write_table_csv(std::ostream& out, const Table& table);

struct Series {
  std::string label;
  std::vector<double> y;
};

/// Single-panel line plot of series over a shared time axis.
void write_svg(std::ostream& out, const std::string& title, const std::vector<double>& times,
               const std::vector<Series>& series, bool log_time_axis);

/// Writes via a temporary stream; throws Error(Config) if the file cannot be opened.
void write_file(const std::string& path, const std::string& contents);

}  // namespace graphentropy::cli
