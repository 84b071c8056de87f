#pragma once

// The curvature-scale figure: g_k through two fixed boundary values for a
// list of curvatures, drawn as one SVG polyline per k.

#include <string>
#include <vector>

namespace curvcmp::cli {

/// 6, 5, ..., 1, 0, -1, ..., -6, -100, -4000.
std::vector<double> default_figure_ks();

struct FigureConfig {
  std::vector<double> ks = default_figure_ks();
  double t1 = 0.0;
  double t2 = 1.0;
  double g1 = 0.6;
  double g2 = 0.8;
  std::size_t n = 1001;
};

struct FigureCurve {
  double k;
  std::vector<double> gs;
};

struct FigureData {
  std::vector<double> ts;
  std::vector<FigureCurve> curves;    // largest k first
  std::vector<std::string> warnings;  // one per skipped k
};

/// Fits and samples each k; a k whose fit or evaluation fails is skipped
/// with a warning. Repeated k values are drawn once.
FigureData figure_data(const FigureConfig& config);

std::string render_svg(const FigureData& data);

/// Header t,g_<k>,... then one row per grid node.
std::string render_csv(const FigureData& data);

}  // namespace curvcmp::cli
