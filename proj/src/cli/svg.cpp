#include <algorithm>
#include <cmath>
#include <string>

#include "pfc/cli.hpp"
#include "pfc/errors.hpp"
#include "pfc/format.hpp"

namespace pfc::cli {
namespace {

constexpr const char* kPalette[] = {"#000000", "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
constexpr int kTicks = 5;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string px(double v) { return format_fixed(v, 2); }

// Digits after the point so that adjacent tick labels differ.
int tick_decimals(double step) {
  if (!(step > 0.0)) return 2;
  const int d = static_cast<int>(std::ceil(-std::log10(step))) + 1;
  return std::clamp(d, 0, 8);
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = lo == 0.0 ? 1.0 : 0.1 * std::fabs(lo);
    return {lo - pad, hi + pad};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const PlotSpec& spec, const std::vector<double>& x, const std::vector<PlotSeries>& series) {
  if (spec.width_px <= 0 || spec.height_px <= 0) throw DomainError("plot dimensions must be positive");
  if (x.size() < 2) throw DomainError("plot needs at least two abscissae");
  for (const auto& s : series) {
    if (s.y.size() != x.size()) throw DomainError("plot series '" + s.label + "' has the wrong length");
  }

  const double left = 80.0;
  const double right = 150.0;
  const double top = 40.0;
  const double bottom = 60.0;
  const double w = spec.width_px;
  const double h = spec.height_px;
  const double plot_w = std::max(1.0, w - left - right);
  const double plot_h = std::max(1.0, h - top - bottom);

  const Range xr{x.front(), x.back()};
  double ylo = INFINITY;
  double yhi = -INFINITY;
  for (const auto& s : series) {
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  }
  if (!std::isfinite(ylo)) {
    ylo = 0.0;
    yhi = 1.0;
  }
  const Range yr = padded(ylo, yhi);
  auto map_x = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto map_y = [&](double v) { return top + (yr.hi - v) / (yr.hi - yr.lo) * plot_h; };

  std::string o;
  o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width_px) + "\" height=\"" +
       std::to_string(spec.height_px) + "\" viewBox=\"0 0 " + std::to_string(spec.width_px) + ' ' +
       std::to_string(spec.height_px) + "\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    o += "<text x=\"" + px(left + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + escape(spec.title) + "</text>\n";
  }

  // Axes box and ticks.
  o += "<rect x=\"" + px(left) + "\" y=\"" + px(top) + "\" width=\"" + px(plot_w) + "\" height=\"" + px(plot_h) +
       "\" fill=\"none\" stroke=\"black\"/>\n";
  const int xdec = tick_decimals((xr.hi - xr.lo) / (kTicks - 1));
  const int ydec = tick_decimals((yr.hi - yr.lo) / (kTicks - 1));
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / (kTicks - 1);
    const double X = map_x(fx);
    o += "<line x1=\"" + px(X) + "\" y1=\"" + px(top + plot_h) + "\" x2=\"" + px(X) + "\" y2=\"" +
         px(top + plot_h + 6) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + px(X) + "\" y=\"" + px(top + plot_h + 22) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + format_fixed(fx, xdec) +
         "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * i / (kTicks - 1);
    const double Y = map_y(fy);
    o += "<line x1=\"" + px(left - 6) + "\" y1=\"" + px(Y) + "\" x2=\"" + px(left) + "\" y2=\"" + px(Y) +
         "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + px(left - 10) + "\" y=\"" + px(Y + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" + format_fixed(fy, ydec) + "</text>\n";
  }
  o += "<text x=\"" + px(left + plot_w / 2) + "\" y=\"" + px(h - 15) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(spec.x_label) + "</text>\n";

  // Curves; non-finite samples break the polyline.
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % (sizeof kPalette / sizeof kPalette[0])];
    std::string points;
    auto flush = [&] {
      if (points.empty()) return;
      o += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" + points +
           "\"/>\n";
      points.clear();
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = series[k].y[i];
      if (!std::isfinite(v)) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += px(map_x(x[i])) + ',' + px(map_y(v));
    }
    flush();

    const double ly = top + 10 + 20.0 * static_cast<double>(k);
    const double lx = left + plot_w + 15;
    o += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" + px(lx + 25) + "\" y2=\"" + px(ly) +
         "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    o += "<text x=\"" + px(lx + 32) + "\" y=\"" + px(ly + 4) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
         escape(series[k].label) + "</text>\n";
  }
  o += "</svg>\n";
  return o;
}

}  // namespace pfc::cli
