#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "svg.hpp"
#include "tsv.hpp"

namespace medalstats {

enum class PlotKind { series_band, confidence_curves };

/// One named curve. All y values are fractions in [0,1]; the series_band
/// renderer labels its axis in percent. Names starting with "interval " mark
/// endpoint-marker series (circles, no connecting line).
struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;  // empty picks from the default palette
  double width = 2.0;
  bool dashed = false;
};

struct PlotSpec {
  PlotKind kind = PlotKind::series_band;
  std::string title;
  std::vector<PlotSeries> series;
  std::optional<double> level_line;  // fraction in (0,1)
  std::string output_path;
};

namespace detail {

inline const char* kPalette[] = {"black", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

inline bool is_marker_series(const PlotSeries& s) { return s.name.rfind("interval ", 0) == 0; }

inline void check_plot_spec(const PlotSpec& spec) {
  if (spec.series.empty()) throw std::invalid_argument("plot: series must be nonempty");
  for (const auto& s : spec.series) {
    if (s.x.empty()) throw std::invalid_argument("plot: series '" + s.name + "' is empty");
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("plot: series '" + s.name + "' has mismatched x/y lengths");
  }
  if (spec.level_line && !(*spec.level_line > 0.0 && *spec.level_line < 1.0))
    throw std::invalid_argument("plot: level_line must lie strictly inside (0, 1)");
}

}  // namespace detail

/// Renders the fixed 800x500 layout shared by both plot kinds.
inline std::string render_plot(const PlotSpec& spec) {
  detail::check_plot_spec(spec);

  const double width = 800, height = 500;
  const double left = 65, right = 775, top = 45, bottom = 445;
  const bool curves = spec.kind == PlotKind::confidence_curves;

  double xmin = spec.series[0].x[0], xmax = xmin;
  double ymax_data = 0.0;
  for (const auto& s : spec.series) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) ymax_data = std::max(ymax_data, v);
  }
  if (spec.level_line) ymax_data = std::max(ymax_data, *spec.level_line);

  double ymin = 0.0, ymax;
  double xtick_step, ytick_step;
  if (curves) {
    xmin = 0.0;
    xmax = std::min(1.0, std::ceil((xmax + 0.01) * 50.0) / 50.0);
    ymax = 1.0;
    ytick_step = 0.25;
    xtick_step = 0.02;
    while (xmax / xtick_step > 12.0) xtick_step *= (xtick_step == 0.02 ? 2.5 : 2.0);
  } else {
    xmin -= 2.0;
    xmax += 2.0;
    ymax = std::max(0.05, std::ceil(ymax_data * 100.0 / 5.0) * 5.0 / 100.0);
    ytick_step = 0.05;
    xtick_step = 20.0;
  }

  auto sx = [&](double v) { return left + (v - xmin) / (xmax - xmin) * (right - left); };
  auto sy = [&](double v) { return bottom - (v - ymin) / (ymax - ymin) * (bottom - top); };

  svg::Document doc(static_cast<int>(width), static_cast<int>(height));
  doc.add_comment("medalstats plot format 1");
  if (!spec.title.empty())
    doc.add_text(0.5 * (left + right), top - 18, spec.title, "middle", 16);

  // Axes and ticks.
  doc.add_line(left, bottom, right, bottom, "black", 1.0);
  doc.add_line(left, bottom, left, top, "black", 1.0);
  double first_xtick = std::ceil(xmin / xtick_step) * xtick_step;
  for (double t = first_xtick; t <= xmax + 1e-9; t += xtick_step) {
    doc.add_line(sx(t), bottom, sx(t), bottom + 5, "black", 1.0);
    doc.add_text(sx(t), bottom + 20, curves ? tsv::format_fixed(t, 2) : tsv::format_fixed(t, 0),
                 "middle", 11);
  }
  for (double t = ymin; t <= ymax + 1e-9; t += ytick_step) {
    doc.add_line(left - 5, sy(t), left, sy(t), "black", 1.0);
    doc.add_text(left - 9, sy(t) + 4,
                 curves ? tsv::format_fixed(t, 2) : tsv::format_fixed(t * 100.0, 0), "end", 11);
  }
  doc.add_text(0.5 * (left + right), height - 10,
               curves ? "probability p" : "year", "middle", 12);
  doc.add_text(14, 0.5 * (top + bottom), curves ? "cc(p)" : "percent of medal chances",
               "middle", 12);

  if (spec.level_line) {
    double yl = sy(*spec.level_line);
    doc.add_line(left, yl, right, yl, "gray", 1.0, "6,4");
    std::string label = curves ? "level " + tsv::format_fixed(*spec.level_line, 2)
                               : "average " + tsv::format_fixed(*spec.level_line * 100.0, 1) + " %";
    doc.add_text(right - 4, yl - 6, label, "end", 11, "gray");
  }

  int palette_index = 0;
  double legend_y = top + 14;
  for (const auto& s : spec.series) {
    std::string color = s.color.empty()
                            ? detail::kPalette[palette_index % (sizeof(detail::kPalette) /
                                                                sizeof(detail::kPalette[0]))]
                            : s.color;
    ++palette_index;
    if (detail::is_marker_series(s)) {
      for (size_t i = 0; i < s.x.size(); ++i) doc.add_circle(sx(s.x[i]), sy(s.y[i]), 3.5, color);
      continue;
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(s.x.size());
    for (size_t i = 0; i < s.x.size(); ++i) pts.emplace_back(sx(s.x[i]), sy(s.y[i]));
    doc.add_polyline(pts, color, s.width, s.dashed ? "4,4" : "");
    if (!s.name.empty()) {
      doc.add_line(right - 120, legend_y - 4, right - 96, legend_y - 4, color, s.width,
                   s.dashed ? "4,4" : "");
      doc.add_text(right - 90, legend_y, s.name, "start", 11);
      legend_y += 16;
    }
  }
  return doc.str();
}

inline void save_plot(const PlotSpec& spec) {
  if (spec.output_path.empty()) throw std::invalid_argument("plot: empty output path");
  std::string svg_text = render_plot(spec);
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + spec.output_path + "' for writing");
  out << svg_text;
  if (!out.good()) throw std::runtime_error("error while writing '" + spec.output_path + "'");
}

}  // namespace medalstats
