#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsv.hpp"

namespace medalstats::svg {

inline std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Accumulates SVG elements and renders a standalone document. All numbers
/// go through the locale-independent formatter, so the output is byte-stable.
class Document {
 public:
  Document(int width, int height) : width_(width), height_(height) {}

  void add_comment(const std::string& text) {
    elements_.push_back("<!-- " + text + " -->");
  }

  void add_line(double x1, double y1, double x2, double y2, const std::string& stroke,
                double stroke_width = 1.0, const std::string& dash = "") {
    std::string e = "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                    "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                    num(stroke_width) + "\"";
    if (!dash.empty()) e += " stroke-dasharray=\"" + dash + "\"";
    e += "/>";
    elements_.push_back(std::move(e));
  }

  void add_polyline(const std::vector<std::pair<double, double>>& points,
                    const std::string& stroke, double stroke_width = 2.0,
                    const std::string& dash = "") {
    std::string e = "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                    num(stroke_width) + "\"";
    if (!dash.empty()) e += " stroke-dasharray=\"" + dash + "\"";
    e += " points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) e += ' ';
      e += num(points[i].first) + "," + num(points[i].second);
    }
    e += "\"/>";
    elements_.push_back(std::move(e));
  }

  void add_circle(double cx, double cy, double r, const std::string& fill) {
    elements_.push_back("<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
                        "\" fill=\"" + fill + "\"/>");
  }

  void add_text(double x, double y, const std::string& text, const std::string& anchor = "start",
                int size = 12, const std::string& fill = "black") {
    elements_.push_back("<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\"" +
                        " font-size=\"" + std::to_string(size) + "\" text-anchor=\"" + anchor +
                        "\" fill=\"" + fill + "\">" + escape(text) + "</text>");
  }

  std::string str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
           "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
           std::to_string(width_) + " " + std::to_string(height_) + "\">\n";
    for (const auto& e : elements_) {
      out += e;
      out += '\n';
    }
    out += "</svg>\n";
    return out;
  }

 private:
  static std::string num(double v) { return tsv::format_fixed(v, 2); }

  int width_;
  int height_;
  std::vector<std::string> elements_;
};

}  // namespace medalstats::svg
