#include "curvcmp/cli/figure.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>

#include "curvcmp/cli/csv.hpp"
#include "curvcmp/error.hpp"
#include "curvcmp/fitting.hpp"
#include "curvcmp/model_spaces.hpp"
#include "curvcmp/sampled_function.hpp"

namespace curvcmp::cli {

std::vector<double> default_figure_ks() {
  return {6, 5, 4, 3, 2, 1, 0, -1, -2, -3, -4, -5, -6, -100, -4000};
}

FigureData figure_data(const FigureConfig& config) {
  FigureData data;
  data.ts = uniform_grid(config.t1, config.t2, config.n);

  std::vector<double> ks = config.ks;
  std::sort(ks.begin(), ks.end(), std::greater<>());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  for (double k : ks) {
    try {
      const FitResult fitted = fit({config.t1, config.t2, config.g1, config.g2, Curvature(k)});
      FigureCurve curve{k, {}};
      curve.gs.reserve(data.ts.size());
      for (double t : data.ts) curve.gs.push_back(eval_g(fitted.params, t));
      data.curves.push_back(std::move(curve));
    } catch (const Error& e) {
      data.warnings.push_back("k=" + format_double(k) + " skipped (" + to_string(e.kind()) +
                              "): " + e.what());
    }
  }
  return data;
}

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 110.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;

std::string fixed2(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick_label(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

std::string colour(std::size_t index, std::size_t count) {
  const double hue = count > 1 ? 300.0 * static_cast<double>(index) / static_cast<double>(count - 1) : 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.0f,70%%,40%%)", hue);
  return buf;
}

}  // namespace

std::string render_svg(const FigureData& data) {
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();
  for (const FigureCurve& c : data.curves) {
    for (double g : c.gs) {
      y_lo = std::min(y_lo, g);
      y_hi = std::max(y_hi, g);
    }
  }
  if (data.curves.empty()) {
    y_lo = 0.0;
    y_hi = 1.0;
  }
  const Range xr = padded(data.ts.front(), data.ts.back());
  const Range yr = padded(y_lo, y_hi);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double t) { return kLeft + (t - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double g) { return kTop + (yr.hi - g) / (yr.hi - yr.lo) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"600\" viewBox=\"0 0 900 600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"900\" height=\"600\" fill=\"white\"/>\n";

  // Axes with five ticks each.
  const std::string x0 = fixed2(kLeft);
  const std::string x1 = fixed2(kLeft + plot_w);
  const std::string y0 = fixed2(kTop + plot_h);
  const std::string y1 = fixed2(kTop);
  svg += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
  svg += "</g>\n";
  svg += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const std::string x = fixed2(px(t));
    svg += "<line x1=\"" + x + "\" y1=\"" + y0 + "\" x2=\"" + x + "\" y2=\"" + fixed2(kTop + plot_h + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + x + "\" y=\"" + fixed2(kTop + plot_h + 20) + "\" text-anchor=\"middle\">" +
           tick_label(t) + "</text>\n";
    const double g = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const std::string y = fixed2(py(g));
    svg += "<line x1=\"" + fixed2(kLeft - 5) + "\" y1=\"" + y + "\" x2=\"" + x0 + "\" y2=\"" + y +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fixed2(kLeft - 8) + "\" y=\"" + fixed2(py(g) + 4) + "\" text-anchor=\"end\">" +
           tick_label(g) + "</text>\n";
  }
  svg += "<text x=\"" + fixed2(kLeft + plot_w / 2) + "\" y=\"" + fixed2(kHeight - 10) +
         "\" text-anchor=\"middle\">t</text>\n";
  svg += "<text x=\"15\" y=\"" + fixed2(kTop + plot_h / 2) + "\" text-anchor=\"middle\">g</text>\n";
  svg += "</g>\n";

  // Curves from largest k to smallest, each labelled in the right margin.
  svg += "<g class=\"curves\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t c = 0; c < data.curves.size(); ++c) {
    const FigureCurve& curve = data.curves[c];
    svg += "<polyline data-k=\"" + format_double(curve.k) + "\" stroke=\"" +
           colour(c, data.curves.size()) + "\" points=\"";
    for (std::size_t i = 0; i < data.ts.size(); ++i) {
      if (i) svg += ' ';
      svg += fixed2(px(data.ts[i])) + "," + fixed2(py(curve.gs[i]));
    }
    svg += "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double label_x = kLeft + plot_w + 15;
  const double label_step = std::min(20.0, plot_h / std::max<std::size_t>(1, data.curves.size()));
  for (std::size_t c = 0; c < data.curves.size(); ++c) {
    svg += "<text x=\"" + fixed2(label_x) + "\" y=\"" + fixed2(kTop + 12 + label_step * c) + "\" fill=\"" +
           colour(c, data.curves.size()) + "\">k = " + format_double(data.curves[c].k) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

std::string render_csv(const FigureData& data) {
  std::string csv = "t";
  for (const FigureCurve& c : data.curves) csv += ",g_" + format_double(c.k);
  csv += '\n';
  for (std::size_t i = 0; i < data.ts.size(); ++i) {
    csv += format_csv_double(data.ts[i]);
    for (const FigureCurve& c : data.curves) csv += "," + format_csv_double(c.gs[i]);
    csv += '\n';
  }
  return csv;
}

}  // namespace curvcmp::cli
