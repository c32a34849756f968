#include "photsub/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "photsub/errors.hpp"

namespace photsub::svg {

namespace {

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  void expand(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

Range tight_range(const std::vector<Series>& series, bool x_axis) {
  Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& s : series)
    for (double v : (x_axis ? s.x : s.y)) r.expand(v);
  if (!(r.hi > r.lo)) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  const double pad = 0.05 * (r.hi - r.lo);
  return {r.lo - pad, r.hi + pad};
}

// Perceptual-ish dark-to-bright map (approximates viridis with three
// anchor blends; fine for quick looks).
void colormap(double t, int& red, int& green, int& blue) {
  t = std::clamp(t, 0.0, 1.0);
  static const double anchors[][3] = {{0.267, 0.005, 0.329},
                                      {0.128, 0.567, 0.551},
                                      {0.993, 0.906, 0.144}};
  const double pos = t * 2.0;
  const int seg = std::min(1, static_cast<int>(pos));
  const double f = pos - seg;
  red = static_cast<int>(255 * ((1 - f) * anchors[seg][0] + f * anchors[seg + 1][0]));
  green = static_cast<int>(255 * ((1 - f) * anchors[seg][1] + f * anchors[seg + 1][1]));
  blue = static_cast<int>(255 * ((1 - f) * anchors[seg][2] + f * anchors[seg + 1][2]));
}

void axes(std::ostringstream& out, int width, int height, int ml, int mr, int mt, int mb,
          const Range& xr, const Range& yr, const std::string& x_label,
          const std::string& y_label, const std::string& title) {
  const int x0 = ml, x1 = width - mr, y0 = height - mb, y1 = mt;
  out << "<rect x='" << x0 << "' y='" << y1 << "' width='" << (x1 - x0) << "' height='"
      << (y0 - y1) << "' fill='none' stroke='#333'/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = i / 5.0;
    const double vx = xr.lo + fx * (xr.hi - xr.lo);
    const int px = static_cast<int>(x0 + fx * (x1 - x0));
    out << "<line x1='" << px << "' y1='" << y0 << "' x2='" << px << "' y2='" << (y0 + 5)
        << "' stroke='#333'/>\n"
        << "<text x='" << px << "' y='" << (y0 + 18)
        << "' font-size='11' text-anchor='middle'>" << num(vx) << "</text>\n";
    const double vy = yr.lo + fx * (yr.hi - yr.lo);
    const int py = static_cast<int>(y0 - fx * (y0 - y1));
    out << "<line x1='" << (x0 - 5) << "' y1='" << py << "' x2='" << x0 << "' y2='" << py
        << "' stroke='#333'/>\n"
        << "<text x='" << (x0 - 8) << "' y='" << (py + 4)
        << "' font-size='11' text-anchor='end'>" << num(vy) << "</text>\n";
  }
  out << "<text x='" << (x0 + (x1 - x0) / 2) << "' y='" << (height - 6)
      << "' font-size='13' text-anchor='middle'>" << x_label << "</text>\n";
  out << "<text x='14' y='" << (y1 + (y0 - y1) / 2)
      << "' font-size='13' text-anchor='middle' transform='rotate(-90 14 "
      << (y1 + (y0 - y1) / 2) << ")'>" << y_label << "</text>\n";
  out << "<text x='" << (width / 2) << "' y='16' font-size='14' text-anchor='middle'>"
      << title << "</text>\n";
}

}  // namespace

std::string line_chart(const std::vector<Series>& series, const std::string& x_label,
                       const std::string& y_label, const std::string& title, int width,
                       int height) {
  if (series.empty()) throw argument_error("line chart needs at least one series");
  const int ml = 62, mr = 16, mt = 28, mb = 42;
  const Range xr = tight_range(series, true);
  const Range yr = tight_range(series, false);

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
      << height << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  axes(out, width, height, ml, mr, mt, mb, xr, yr, x_label, y_label, title);

  const int x0 = ml, x1 = width - mr, y0 = height - mb, y1 = mt;
  auto px = [&](double v) { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  auto py = [&](double v) { return y0 - (v - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& sr = series[s];
    const std::string color =
        sr.color.empty() ? palette[s % std::size(palette)] : sr.color;
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.6' points='";
    for (std::size_t i = 0; i < sr.x.size(); ++i) {
      if (!std::isfinite(sr.y[i])) continue;
      out << num(px(sr.x[i])) << ',' << num(py(sr.y[i])) << ' ';
    }
    out << "'/>\n";
    out << "<text x='" << (x1 - 8) << "' y='" << (y1 + 16 + 16 * static_cast<int>(s))
        << "' font-size='12' text-anchor='end' fill='" << color << "'>" << sr.label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string heatmap(const Eigen::MatrixXd& values, const std::vector<double>& x_axis,
                    const std::vector<double>& y_axis, const std::string& x_label,
                    const std::string& y_label, const std::string& title, int width,
                    int height) {
  if (values.rows() != static_cast<long>(x_axis.size()) ||
      values.cols() != static_cast<long>(y_axis.size()))
    throw argument_error("heatmap axes do not match the value matrix");
  const int ml = 62, mr = 58, mt = 28, mb = 42;
  double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
  for (long i = 0; i < values.rows(); ++i)
    for (long j = 0; j < values.cols(); ++j)
      if (std::isfinite(values(i, j))) {
        vmin = std::min(vmin, values(i, j));
        vmax = std::max(vmax, values(i, j));
      }
  if (!(vmax > vmin)) vmax = vmin + 1.0;

  const int x0 = ml, x1 = width - mr, y0 = height - mb, y1 = mt;
  const double cw = static_cast<double>(x1 - x0) / values.rows();
  const double ch = static_cast<double>(y0 - y1) / values.cols();

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
      << height << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  for (long i = 0; i < values.rows(); ++i) {
    for (long j = 0; j < values.cols(); ++j) {
      const double v = values(i, j);
      int r = 220, g = 220, b = 220;  // grey for NaN rows
      if (std::isfinite(v)) colormap((v - vmin) / (vmax - vmin), r, g, b);
      out << "<rect x='" << num(x0 + i * cw) << "' y='" << num(y0 - (j + 1) * ch)
          << "' width='" << num(cw + 0.5) << "' height='" << num(ch + 0.5)
          << "' fill='rgb(" << r << ',' << g << ',' << b << ")'/>\n";
    }
  }
  Range xr{x_axis.front(), x_axis.back()}, yr{y_axis.front(), y_axis.back()};
  axes(out, width, height, ml, mr, mt, mb, xr, yr, x_label, y_label, title);
  // colour bar
  for (int i = 0; i < 100; ++i) {
    int r, g, b;
    colormap(i / 99.0, r, g, b);
    const double bar_h = (y0 - y1) / 100.0;
    out << "<rect x='" << (x1 + 14) << "' y='" << num(y0 - (i + 1) * bar_h)
        << "' width='14' height='" << num(bar_h + 0.5) << "' fill='rgb(" << r << ',' << g
        << ',' << b << ")'/>\n";
  }
  out << "<text x='" << (x1 + 32) << "' y='" << (y0 + 4) << "' font-size='10'>" << num(vmin)
      << "</text>\n<text x='" << (x1 + 32) << "' y='" << (y1 + 10) << "' font-size='10'>"
      << num(vmax) << "</text>\n</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& svg) {
  std::ofstream out(path);
  if (!out) throw argument_error("cannot open SVG output file: " + path);
  out << svg;
}

}  // namespace photsub::svg
