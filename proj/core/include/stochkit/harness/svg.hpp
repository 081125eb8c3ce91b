#pragma once

#include <string>
#include <utility>
#include <vector>

namespace stochkit {

// Minimal SVG assembler. Every document is self-contained XML with no
// external references; text is escaped on the way in.
class svg_doc {
 public:
  svg_doc(double width, double height);

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& stroke = "none", double stroke_width = 1.0);
  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double width = 1.0, const std::string& dash = "");
  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                double width = 1.5, const std::string& dash = "");
  void circle(double cx, double cy, double r, const std::string& fill,
              const std::string& stroke = "none", double stroke_width = 1.0);
  // anchor: start | middle | end. rotate: degrees around (x, y).
  void text(double x, double y, const std::string& s, double size = 12.0,
            const std::string& anchor = "start", const std::string& fill = "#333333",
            double rotate = 0.0);

  double width() const { return width_; }
  double height() const { return height_; }

  std::string str() const;

 private:
  double width_;
  double height_;
  std::string body_;
};

std::string xml_escape(const std::string& s);

// Cycling line palette shared by all plot kinds.
const std::vector<std::string>& plot_palette();

// "1e-06", "0.01", "3", "2.5e+04": short round-trip-friendly tick labels.
std::string tick_label(double v);

} // namespace stochkit
