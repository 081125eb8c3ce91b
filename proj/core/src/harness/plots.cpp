#include "stochkit/harness/plots.hpp"

#include "stochkit/errors.hpp"
#include "stochkit/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stochkit {

namespace {

struct axis_range {
  double lo = 0.0;
  double hi = 1.0;

  void expand(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double span() const { return hi - lo; }
};

// Chart geometry shared by the line plots.
constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

double lerp_x(double v, const axis_range& r) {
  const double t = r.span() > 0.0 ? (v - r.lo) / r.span() : 0.5;
  return kLeft + t * (kWidth - kLeft - kRight);
}

double lerp_y(double v, const axis_range& r) {
  const double t = r.span() > 0.0 ? (v - r.lo) / r.span() : 0.5;
  return kHeight - kBottom - t * (kHeight - kTop - kBottom);
}

// About `count` round tick positions covering [lo, hi].
std::vector<double> linear_ticks(const axis_range& r, int count) {
  std::vector<double> ticks;
  if (!(r.span() > 0.0)) return {r.lo};
  const double raw = r.span() / count;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double mult : {1.0, 2.0, 5.0, 10.0}) {
    step = mult * mag;
    if (r.span() / step <= count) break;
  }
  const double first = std::ceil(r.lo / step) * step;
  for (double v = first; v <= r.hi + 1e-9 * r.span(); v += step) ticks.push_back(v);
  return ticks;
}

std::vector<double> decade_ticks(const axis_range& r) {
  std::vector<double> ticks;
  const int lo = static_cast<int>(std::ceil(r.lo - 1e-9));
  const int hi = static_cast<int>(std::floor(r.hi + 1e-9));
  int stride = 1;
  while ((hi - lo) / stride > 10) ++stride;
  for (int e = lo; e <= hi; e += stride) ticks.push_back(static_cast<double>(e));
  if (ticks.empty()) ticks.push_back(r.lo);
  return ticks;
}

void draw_frame(svg_doc& doc, const std::string& title, const std::string& x_label,
                const std::string& y_label) {
  doc.rect(0, 0, doc.width(), doc.height(), "#ffffff");
  doc.rect(kLeft, kTop, kWidth - kLeft - kRight, kHeight - kTop - kBottom, "none", "#888888");
  doc.text(kWidth / 2, kTop - 20, title, 16, "middle", "#111111");
  doc.text(kWidth / 2, kHeight - 15, x_label, 13, "middle");
  doc.text(20, kHeight / 2, y_label, 13, "middle", "#333333", -90);
}

} // namespace

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<plot_series>& series,
                          bool log_y) {
  // Clean the data first: log mode keeps only positive finite y.
  std::vector<plot_series> clean;
  axis_range xr{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
  axis_range yr = xr;
  for (const plot_series& s : series) {
    plot_series c{s.name, {}, {}};
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      double y = s.y[i];
      if (!std::isfinite(s.x[i]) || !std::isfinite(y)) continue;
      if (log_y) {
        if (!(y > 0.0)) continue;
        y = std::log10(y);
      }
      c.x.push_back(s.x[i]);
      c.y.push_back(y);
      xr.expand(s.x[i]);
      yr.expand(y);
    }
    clean.push_back(std::move(c));
  }

  svg_doc doc(kWidth, kHeight);
  draw_frame(doc, title, x_label, log_y ? y_label + " (log scale)" : y_label);

  bool any = false;
  for (const plot_series& s : clean) any = any || !s.x.empty();
  if (!any) {
    doc.text(kWidth / 2, kHeight / 2, "no finite data to plot", 14, "middle", "#777777");
    return doc.str();
  }
  if (!(xr.span() > 0.0)) {
    xr.lo -= 1.0;
    xr.hi += 1.0;
  }
  if (!(yr.span() > 0.0)) {
    yr.lo -= 1.0;
    yr.hi += 1.0;
  }

  for (const double t : linear_ticks(xr, 6)) {
    const double px = lerp_x(t, xr);
    doc.line(px, kHeight - kBottom, px, kHeight - kBottom + 5, "#555555");
    doc.line(px, kTop, px, kHeight - kBottom, "#eeeeee");
    doc.text(px, kHeight - kBottom + 20, tick_label(t), 11, "middle");
  }
  const std::vector<double> yticks = log_y ? decade_ticks(yr) : linear_ticks(yr, 6);
  for (const double t : yticks) {
    const double py = lerp_y(t, yr);
    doc.line(kLeft - 5, py, kLeft, py, "#555555");
    doc.line(kLeft, py, kWidth - kRight, py, "#eeeeee");
    doc.text(kLeft - 9, py + 4, tick_label(log_y ? std::pow(10.0, t) : t), 11, "end");
  }

  const auto& palette = plot_palette();
  for (std::size_t si = 0; si < clean.size(); ++si) {
    const plot_series& s = clean[si];
    std::vector<std::pair<double, double>> pts;
    pts.reserve(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i)
      pts.emplace_back(lerp_x(s.x[i], xr), lerp_y(s.y[i], yr));
    const std::string& color = palette[si % palette.size()];
    doc.polyline(pts, color, 1.8);
    if (pts.size() == 1) doc.circle(pts[0].first, pts[0].second, 3, color);
    // Legend entries stack below the title, right-aligned.
    const double ly = kTop + 16 + 16 * static_cast<double>(si);
    doc.line(kWidth - kRight - 120, ly - 4, kWidth - kRight - 90, ly - 4, color, 2.5);
    doc.text(kWidth - kRight - 84, ly, s.name, 12);
  }
  return doc.str();
}

std::string classification_svg(const problem& prob, const std::vector<std::string>& names,
                               const std::vector<vec>& finals, const mat& X_test,
                               const vec& y_test) {
  if (names.size() != finals.size())
    throw argument_error("classification_svg: names and finals differ in length");
  if (X_test.cols() != 2 && X_test.cols() != 3)
    throw argument_error("classification_svg: needs 2 or 3 feature columns, got " +
                         std::to_string(X_test.cols()));
  if (X_test.rows() == 0 || X_test.rows() != y_test.size())
    throw argument_error("classification_svg: test set is empty or mismatched");

  const double panel = 300.0;
  const double pad = 40.0;
  const auto cols = static_cast<std::size_t>(names.size() >= 2 ? 2 : 1);
  const std::size_t rows = (names.size() + cols - 1) / cols;
  svg_doc doc(pad + static_cast<double>(cols) * (panel + pad),
              pad + static_cast<double>(rows) * (panel + pad) + 20);
  doc.rect(0, 0, doc.width(), doc.height(), "#ffffff");

  axis_range xr{X_test.col(0).minCoeff(), X_test.col(0).maxCoeff()};
  axis_range yr{X_test.col(1).minCoeff(), X_test.col(1).maxCoeff()};
  if (!(xr.span() > 0.0)) xr.hi = xr.lo + 1.0;
  if (!(yr.span() > 0.0)) yr.hi = yr.lo + 1.0;

  const auto& palette = plot_palette();
  for (std::size_t pi = 0; pi < names.size(); ++pi) {
    const double ox = pad + static_cast<double>(pi % cols) * (panel + pad);
    const double oy = pad + static_cast<double>(pi / cols) * (panel + pad) + 10;
    doc.rect(ox, oy, panel, panel, "#fcfcfc", "#888888");

    const vec pred = prob.predict(finals[pi], X_test);
    std::size_t hits = 0;
    for (index_t i = 0; i < X_test.rows(); ++i) {
      const double px = ox + 8 + (X_test(i, 0) - xr.lo) / xr.span() * (panel - 16);
      const double py = oy + panel - 8 - (X_test(i, 1) - yr.lo) / yr.span() * (panel - 16);
      // Class labels are -1/+1 or 0-based ints; hash either into the palette.
      const auto cls = static_cast<std::size_t>(
          std::llabs(static_cast<long long>(std::lround(pred(i) + 2))));
      const bool correct = pred(i) == y_test(i);
      if (correct) ++hits;
      doc.circle(px, py, 4, palette[cls % palette.size()],
                 correct ? "none" : "#111111", correct ? 0.0 : 1.6);
    }
    const double acc =
        static_cast<double>(hits) / static_cast<double>(X_test.rows()) * 100.0;
    doc.text(ox + panel / 2, oy - 6,
             names[pi] + "  (" + tick_label(std::round(acc * 10) / 10) + "% correct)", 13,
             "middle", "#111111");
  }
  return doc.str();
}

std::string trajectory_svg(const problem& prob, const std::vector<std::string>& names,
                           const std::vector<std::vector<vec>>& paths) {
  if (prob.dim() != 2)
    throw argument_error("trajectory_svg: needs parameter dimension 2, got " +
                         std::to_string(prob.dim()));
  if (names.size() != paths.size())
    throw argument_error("trajectory_svg: names and paths differ in length");

  // Bounding box over every stored iterate, padded a quarter span.
  axis_range xr{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
  axis_range yr = xr;
  for (const auto& path : paths)
    for (const vec& w : path) {
      xr.expand(w(0));
      yr.expand(w(1));
    }
  if (!std::isfinite(xr.lo) || !(xr.span() >= 0.0))
    throw argument_error("trajectory_svg: no stored iterates (store_w was off?)");
  const double padx = std::max(0.25 * xr.span(), 0.5);
  const double pady = std::max(0.25 * yr.span(), 0.5);
  xr.lo -= padx;
  xr.hi += padx;
  yr.lo -= pady;
  yr.hi += pady;

  const double size = 560.0;
  const double margin = 60.0;
  svg_doc doc(size + 2 * margin + 140, size + 2 * margin);
  doc.rect(0, 0, doc.width(), doc.height(), "#ffffff");
  doc.rect(margin, margin, size, size, "#fcfcfc", "#888888");

  const auto to_px = [&](double wx) { return margin + (wx - xr.lo) / xr.span() * size; };
  const auto to_py = [&](double wy) { return margin + size - (wy - yr.lo) / yr.span() * size; };

  // Cost field on a grid; contour lines via marching squares on log cost.
  constexpr int G = 61;
  mat field(G, G);
  double fmin = std::numeric_limits<double>::infinity();
  double fmax = -fmin;
  vec w(2);
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      w(0) = xr.lo + xr.span() * i / (G - 1);
      w(1) = yr.lo + yr.span() * j / (G - 1);
      const double c = prob.cost(w);
      field(i, j) = c;
      fmin = std::min(fmin, c);
      fmax = std::max(fmax, c);
    }
  const double base = fmin - 1e-12;
  const int levels = 12;
  for (int li = 1; li <= levels; ++li) {
    // Log-spaced level set between the field extremes.
    const double level =
        base + (fmax - base) * std::pow(10.0, -3.0 * (1.0 - static_cast<double>(li) / levels));
    for (int i = 0; i + 1 < G; ++i)
      for (int j = 0; j + 1 < G; ++j) {
        // Marching squares: interpolate the level crossing on each cell edge.
        const double x0 = xr.lo + xr.span() * i / (G - 1);
        const double x1 = xr.lo + xr.span() * (i + 1) / (G - 1);
        const double y0 = yr.lo + yr.span() * j / (G - 1);
        const double y1 = yr.lo + yr.span() * (j + 1) / (G - 1);
        const double c00 = field(i, j), c10 = field(i + 1, j);
        const double c01 = field(i, j + 1), c11 = field(i + 1, j + 1);
        std::vector<std::pair<double, double>> pts;
        const auto cross = [&](double a, double b, double pa_x, double pa_y, double pb_x,
                               double pb_y) {
          if ((a - level) * (b - level) < 0.0) {
            const double t = (level - a) / (b - a);
            pts.emplace_back(pa_x + t * (pb_x - pa_x), pa_y + t * (pb_y - pa_y));
          }
        };
        cross(c00, c10, x0, y0, x1, y0);
        cross(c10, c11, x1, y0, x1, y1);
        cross(c11, c01, x1, y1, x0, y1);
        cross(c01, c00, x0, y1, x0, y0);
        if (pts.size() == 2)
          doc.line(to_px(pts[0].first), to_py(pts[0].second), to_px(pts[1].first),
                   to_py(pts[1].second), "#c9d7e6", 1.0);
      }
  }

  const auto& palette = plot_palette();
  for (std::size_t si = 0; si < paths.size(); ++si) {
    const std::string& color = palette[si % palette.size()];
    std::vector<std::pair<double, double>> pts;
    for (const vec& p : paths[si]) pts.emplace_back(to_px(p(0)), to_py(p(1)));
    doc.polyline(pts, color, 1.8);
    for (const auto& [px, py] : pts) doc.circle(px, py, 2.2, color);
    if (!pts.empty()) {
      doc.circle(pts.front().first, pts.front().second, 4.5, "none", color, 1.6);
      doc.circle(pts.back().first, pts.back().second, 4.5, color, "#111111", 1.0);
    }
    const double ly = margin + 16 + 18 * static_cast<double>(si);
    doc.line(margin + size + 16, ly - 4, margin + size + 46, ly - 4, color, 2.5);
    doc.text(margin + size + 52, ly, names[si], 12);
  }
  doc.text(margin + size / 2, margin - 14, "iterate trajectories over cost contours", 14,
           "middle", "#111111");
  return doc.str();
}

} // namespace stochkit
