#include "curvcmp/inequality_checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "curvcmp/error.hpp"
#include "curvcmp/kernels.hpp"

namespace curvcmp {

const char* to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::upper_satisfied: return "upper_satisfied";
    case VerdictKind::lower_satisfied: return "lower_satisfied";
    case VerdictKind::equality: return "equality";
    case VerdictKind::neither: return "neither";
  }
  return "unknown";
}

const char* to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::h_neg: return "h_neg";
    case WitnessKind::H_pos: return "H_pos";
    case WitnessKind::w_zero: return "w_zero";
  }
  return "unknown";
}

namespace {

double checked_step(const SampledFunction& f, Curvature k, double grid_tol, std::size_t min_nodes) {
  if (f.size() < min_nodes) {
    throw Error(ErrorKind::grid, "need at least " + std::to_string(min_nodes) + " nodes");
  }
  if (!(f.min_value() > 0.0)) {
    throw Error(ErrorKind::domain, "inequality checks need strictly positive samples");
  }
  if (k.sign() == CurvatureSign::positive && !(k.root() * f.max_value() < std::numbers::pi)) {
    throw Error(ErrorKind::domain, "spherical guard: sqrt(k) max g must stay below pi");
  }
  const auto h = f.uniform_step(grid_tol);
  if (!h) {
    throw Error(ErrorKind::grid, "grid is not uniform; resample it first");
  }
  return *h;
}

template <typename Kernel>
ResidualSeries build_residuals(const SampledFunction& f, Curvature k, double grid_tol, int order,
                               Kernel kernel) {
  if (!kernels::valid_stencil_order(order)) {
    throw Error(ErrorKind::argument, "stencil order must be 2, 4 or 6");
  }
  const auto width = static_cast<std::size_t>(order);
  const double h = checked_step(f, k, grid_tol, width + 1);
  const std::size_t count = f.size() - width;

  ResidualSeries series{{f.ts().begin() + order / 2, f.ts().begin() + order / 2 + count},
                        std::vector<double>(count),
                        {order, h},
                        1.0};
  std::vector<double> second(count);
  kernel(f.gs(), h, k, order, kernels::StencilOut{series.rs, second});
  for (double d2 : second) series.second_scale = std::max(series.second_scale, std::abs(d2));
  return series;
}

}  // namespace

ResidualSeries residual_series(const SampledFunction& f, Curvature k, double grid_tol, int order) {
  return build_residuals(f, k, grid_tol, order, kernels::parallel::stencil_residuals);
}

namespace reference {

ResidualSeries residual_series(const SampledFunction& f, Curvature k, double grid_tol, int order) {
  return build_residuals(f, k, grid_tol, order, kernels::serial::stencil_residuals);
}

}  // namespace reference

double default_tolerance(const ResidualSeries& series) {
  const double h = series.stencil.step;
  return std::max(1e-6, 10.0 * h * h * series.second_scale);
}

Verdict classify(const ResidualSeries& series, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::argument, "classification tolerance must be positive");
  }
  const auto [lo, hi] = std::minmax_element(series.rs.begin(), series.rs.end());
  Verdict verdict{VerdictKind::neither, *lo, *hi, tol};
  const bool upper = *lo >= -tol;
  const bool lower = *hi <= tol;
  if (upper && lower) {
    verdict.kind = VerdictKind::equality;
  } else if (upper) {
    verdict.kind = VerdictKind::upper_satisfied;
  } else if (lower) {
    verdict.kind = VerdictKind::lower_satisfied;
  }
  return verdict;
}

Verdict check(const SampledFunction& f, Curvature k) {
  const ResidualSeries series = residual_series(f, k);
  return classify(series, default_tolerance(series));
}

WitnessSeries witness_series(const SampledFunction& f, Curvature k, double grid_tol) {
  const double h = checked_step(f, k, grid_tol, 3);
  const double s = k.root();
  if (k.sign() == CurvatureSign::positive &&
      (f.a() < 0.0 || !(s * f.b() < 0.5 * std::numbers::pi))) {
    throw Error(ErrorKind::domain, "spherical witness needs 0 <= t and sqrt(k) t < pi/2");
  }

  const std::size_t n = f.size();
  const auto g = f.gs();
  WitnessSeries out{{f.ts().begin(), f.ts().end()}, std::vector<double>(n), WitnessKind::w_zero, h,
                    std::numeric_limits<double>::infinity(), 0.0};
  switch (k.sign()) {
    case CurvatureSign::negative: out.kind = WitnessKind::h_neg; break;
    case CurvatureSign::positive: out.kind = WitnessKind::H_pos; break;
    case CurvatureSign::zero: break;
  }

  for (std::size_t i = 0; i < n; ++i) {
    double gp = 0.0;
    if (i == 0) {
      gp = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
    } else if (i == n - 1) {
      gp = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h);
    } else {
      gp = (g[i + 1] - g[i - 1]) / (2.0 * h);
    }
    const double t = f.t(i);
    double factor = 0.0;
    switch (k.sign()) {
      case CurvatureSign::negative: {
        const double decay = std::exp(-s * t);
        out.ws[i] = decay * (std::cosh(s * g[i]) + gp * std::sinh(s * g[i]));
        factor = decay * std::sinh(s * g[i]);
        break;
      }
      case CurvatureSign::positive:
        out.ws[i] = gp * std::cos(s * t) * std::sin(s * g[i]) - std::sin(s * t) * std::cos(s * g[i]);
        factor = std::cos(s * t) * std::sin(s * g[i]);
        break;
      case CurvatureSign::zero:
        out.ws[i] = g[i] * gp - t;
        factor = g[i];
        break;
    }
    out.min_factor = std::min(out.min_factor, factor);
    out.max_factor = std::max(out.max_factor, factor);
  }
  return out;
}

bool witness_monotone(const WitnessSeries& series, double tol) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double w : series.ws) {
    peak = std::max(peak, w);
    if (w < peak - tol) return false;
  }
  return true;
}

double default_witness_tolerance(const WitnessSeries& series, double residual_tol) {
  const double length = series.ts.back() - series.ts.front();
  return residual_tol * series.max_factor * (length + 1.0);
}

}  // namespace curvcmp
