#include "graphentropy/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "graphentropy/error.hpp"

namespace graphentropy::cli {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<double>& times,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) throw Error(ErrorCode::DimensionMismatch, "one header per column");
  for (const auto& col : columns)
    if (col.size() != times.size()) throw Error(ErrorCode::DimensionMismatch, "column length differs from time grid");
  out << "t";
  for (const auto& h : header) out << ',' << csv_field(h);
  out << '\n';
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << format_double(times[i]);
    for (const auto& col : columns) out << ',' << format_double(col.at(i));
    out << '\n';
  }
}

void write_table_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << csv_field(table.header[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

void write_svg(std::ostream& out, const std::string& title, const std::vector<double>& times,
               const std::vector<Series>& series, bool log_time_axis) {
  constexpr double W = 800, H = 500, left = 70, right = 200, top = 40, bottom = 60;
  const double pw = W - left - right;
  const double ph = H - top - bottom;

  const auto xmap = [&](double t) { return log_time_axis ? std::log10(t) : t; };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  for (const double t : times) {
    if (log_time_axis && !(t > 0.0)) continue;
    x0 = std::min(x0, xmap(t));
    x1 = std::max(x1, xmap(t));
  }
  double y0 = 0.0, y1 = 0.0;
  for (const auto& s : series)
    for (const double y : s.y) y1 = std::max(y1, y);
  if (!(x1 > x0)) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = y0 + 1.0;
  const auto px = [&](double t) { return left + (xmap(t) - x0) / (x1 - x0) * pw; };
  const auto py = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" << escape(title)
      << "</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << left - 8 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << format_double(std::round(y * 1000.0) / 1000.0) << "</text>\n";
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double tv = log_time_axis ? std::pow(10.0, xv) : xv;
    out << "<text x=\"" << left + pw * i / 4.0 << "\" y=\"" << top + ph + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", tv);
    out << buf << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">t"
      << (log_time_axis ? " (log scale)" : "") << "</text>\n";
  out << "<text x=\"18\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 18 " << top + ph / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">H(X(t)|X(0))</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* colour = kPalette[s % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < times.size() && i < series[s].y.size(); ++i) {
      if (log_time_axis && !(times[i] > 0.0)) continue;
      out << px(times[i]) << ',' << py(series[s].y[i]) << ' ';
    }
    out << "\"/>\n";
    const double ly = top + 16.0 * static_cast<double>(s + 1);
    out << "<line x1=\"" << W - right + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 30 << "\" y2=\"" << ly
        << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << W - right + 35 << "\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape(series[s].label) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Config, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::Config, "failed writing " + path);
}

}  // namespace graphentropy::cli
