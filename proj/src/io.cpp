#include "ppd/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ppd::io {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel,
                    const std::vector<Series>& series, bool log_x) {
  const double W = 840, H = 520;
  const double ml = 80, mr = 30, mt = 50, mb = 60;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      double xv = log_x ? std::log10(s.x[i]) : s.x[i];
      if (!std::isfinite(xv) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, xv);
      xmax = std::max(xmax, xv);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (!(xmin < xmax)) { xmin -= 0.5; xmax += 0.5; }
  if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
  double xpad = 0.02 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
  xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

  auto px = [&](double v) {
    double t = log_x ? std::log10(v) : v;
    return ml + (t - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  auto py = [&](double v) {
    return H - mb - (v - ymin) / (ymax - ymin) * (H - mt - mb);
  };

  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
    << "\">\n"
    << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  // axes
  f << "<line x1=\"" << num(ml) << "\" y1=\"" << num(H - mb) << "\" x2=\""
    << num(W - mr) << "\" y2=\"" << num(H - mb)
    << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  f << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\""
    << num(ml) << "\" y2=\"" << num(H - mb)
    << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // ticks
  for (int k = 0; k <= 5; ++k) {
    double xt = xmin + (xmax - xmin) * k / 5.0;
    double yt = ymin + (ymax - ymin) * k / 5.0;
    double xp = ml + (W - ml - mr) * k / 5.0;
    double yp = H - mb - (H - mt - mb) * k / 5.0;
    f << "<line x1=\"" << num(xp) << "\" y1=\"" << num(H - mb) << "\" x2=\""
      << num(xp) << "\" y2=\"" << num(H - mb + 5)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    f << "<text x=\"" << num(xp) << "\" y=\"" << num(H - mb + 20)
      << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">"
      << (log_x ? "1e" + num(xt) : num(xt)) << "</text>\n";
    f << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(yp) << "\" x2=\""
      << num(ml) << "\" y2=\"" << num(yp)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    f << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(yp + 4)
      << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">"
      << num(yt) << "</text>\n";
  }
  f << "<text x=\"" << num(W / 2) << "\" y=\"" << num(mt - 20)
    << "\" font-size=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\">"
    << esc(title) << "</text>\n";
  f << "<text x=\"" << num(W / 2) << "\" y=\"" << num(H - 15)
    << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
    << esc(xlabel) << "</text>\n";
  f << "<text x=\"20\" y=\"" << num(H / 2)
    << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\""
    << " transform=\"rotate(-90 20 " << num(H / 2) << ")\">" << esc(ylabel)
    << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kColors[si % 6];
    f << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      if (i) f << ' ';
      f << num(px(s.x[i])) << ',' << num(py(s.y[i]));
    }
    f << "\"/>\n";
    double ly = mt + 18 + 16.0 * static_cast<double>(si);
    f << "<line x1=\"" << num(W - mr - 150) << "\" y1=\"" << num(ly - 4)
      << "\" x2=\"" << num(W - mr - 120) << "\" y2=\"" << num(ly - 4)
      << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    f << "<text x=\"" << num(W - mr - 114) << "\" y=\"" << num(ly)
      << "\" font-size=\"12\" font-family=\"sans-serif\">" << esc(s.name)
      << "</text>\n";
  }
  f << "</svg>\n";
}

}  // namespace ppd::io
