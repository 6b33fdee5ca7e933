#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppd::io {

// 17 significant digits: enough to round-trip a double exactly.
inline std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Row = std::vector<std::string>;

inline std::string csv_line(const Row& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

inline void write_csv(const std::string& path, const Row& header,
                      const std::vector<Row>& rows) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << csv_line(header);
  for (const auto& r : rows) f << csv_line(r);
}

// One-line summary record, "key=value" pairs separated by single spaces.
inline std::string summary_record(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) out += ' ';
    out += kv[i].first + "=" + kv[i].second;
  }
  return out;
}

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal static SVG 1.1 line plot; output is a pure function of the inputs.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel,
                    const std::vector<Series>& series, bool log_x = false);

}  // namespace ppd::io
