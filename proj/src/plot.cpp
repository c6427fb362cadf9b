#include "adsmana/plot.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <vector>

namespace adsmana {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr double kLeft = 70.0, kRight = 620.0, kTop = 20.0, kBottom = 550.0;
constexpr int kTicks = 6;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

}  // namespace

std::string render_svg_line_chart(const CsvTable& table,
                                  const PlotSpec& spec) {
  const int cx = table.column(spec.x);
  const int cy = table.column(spec.y);
  const int cg = table.column(spec.group_by);
  if (cx < 0) throw UsageError("plot: missing column '" + spec.x + "'");
  if (cy < 0) throw UsageError("plot: missing column '" + spec.y + "'");
  if (cg < 0) throw UsageError("plot: missing column '" + spec.group_by + "'");

  struct Point {
    double x, y;
  };
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<Point>> groups;
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  std::size_t n_points = 0;
  for (const auto& row : table.cells) {
    const double x = std::strtod(row[cx].c_str(), nullptr);
    const double y = std::strtod(row[cy].c_str(), nullptr);
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    const std::string& key = row[cg];
    if (groups.find(key) == groups.end()) group_order.push_back(key);
    groups[key].push_back({x, y});
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
    ++n_points;
  }
  if (n_points < 2 || xmin == xmax)
    throw UsageError("plot: not enough distinct data points to draw a chart");
  if (ymin == ymax) {
    const double pad = std::fabs(ymin) * 0.1 + 1e-12;
    ymin -= pad;
    ymax += pad;
  }

  auto px = [&](double x) {
    return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft);
  };
  auto py = [&](double y) {
    return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

  // axes and ticks
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kBottom) +
         "\" x2=\"" + fmt("%.2f", kRight) + "\" y2=\"" + fmt("%.2f", kBottom) +
         "\"/>\n";
  svg += "<line x1=\"" + fmt("%.2f", kLeft) + "\" y1=\"" + fmt("%.2f", kTop) +
         "\" x2=\"" + fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", kBottom) +
         "\"/>\n";
  svg += "</g>\n";
  for (int i = 0; i < kTicks; ++i) {
    const double tx = xmin + (xmax - xmin) * i / (kTicks - 1);
    const double ty = ymin + (ymax - ymin) * i / (kTicks - 1);
    const double pxx = px(tx), pyy = py(ty);
    svg += "<line stroke=\"black\" x1=\"" + fmt("%.2f", pxx) + "\" y1=\"" +
           fmt("%.2f", kBottom) + "\" x2=\"" + fmt("%.2f", pxx) + "\" y2=\"" +
           fmt("%.2f", kBottom + 5) + "\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", pxx) + "\" y=\"" +
           fmt("%.2f", kBottom + 18) + "\" text-anchor=\"middle\">" +
           fmt("%.4g", tx) + "</text>\n";
    svg += "<line stroke=\"black\" x1=\"" + fmt("%.2f", kLeft - 5) +
           "\" y1=\"" + fmt("%.2f", pyy) + "\" x2=\"" + fmt("%.2f", kLeft) +
           "\" y2=\"" + fmt("%.2f", pyy) + "\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", kLeft - 8) + "\" y=\"" +
           fmt("%.2f", pyy + 4) + "\" text-anchor=\"end\">" + fmt("%.4g", ty) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt("%.2f", 0.5 * (kLeft + kRight)) + "\" y=\"" +
         fmt("%.2f", kBottom + 38) + "\" text-anchor=\"middle\">" + spec.x +
         "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt("%.2f", 0.5 * (kTop + kBottom)) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fmt("%.2f", 0.5 * (kTop + kBottom)) + ")\">" + spec.y + "</text>\n";

  int gi = 0;
  for (const auto& key : group_order) {
    const char* color = kPalette[gi % 8];
    std::string pts;
    for (const auto& p : groups[key]) {
      pts += fmt("%.2f", px(p.x)) + "," + fmt("%.2f", py(p.y)) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 16.0 * gi + 8.0;
    svg += "<line stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" x1=\"640\" y1=\"" + fmt("%.2f", ly) +
           "\" x2=\"664\" y2=\"" + fmt("%.2f", ly) + "\"/>\n";
    svg += "<text x=\"670\" y=\"" + fmt("%.2f", ly + 4) + "\">" +
           spec.group_by + "=" + key + "</text>\n";
    ++gi;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace adsmana
