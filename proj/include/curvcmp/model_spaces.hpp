#pragma once

// Comparison functions on the model planes M_k.
//
//   k = 0 : Euclidean plane, geodesic t -> (t, 0), point (u, v), v > 0
//   k < 0 : upper half-plane with metric scaled by 1/sqrt(-k),
//           geodesic t -> (0, exp(sqrt(-k) t)), point (u, v), v > 0
//   k > 0 : sphere of radius 1/sqrt(k) in R^3,
//           geodesic t -> (cos(sqrt(k) t), sin(sqrt(k) t), 0) / sqrt(k),
//           point (u, v, +sqrt(1/k - u^2 - v^2))
//
// g_k(t) is the model distance from the point to the geodesic at time t.

#include <array>
#include <cstddef>
#include <span>

namespace curvcmp {

enum class CurvatureSign { negative, zero, positive };

class Curvature {
 public:
  explicit Curvature(double k);

  double value() const noexcept { return k_; }
  CurvatureSign sign() const noexcept;
  /// sqrt(|k|); the inverse length scale of the model.
  double root() const noexcept { return root_; }

  friend bool operator==(Curvature, Curvature) = default;

 private:
  double k_;
  double root_;
};

/// (k, u, v) identifying one comparison function. The constructor validates
/// the invariants and canonicalizes u >= 0 for k < 0, where g_k only sees u^2.
class ComparisonParams {
 public:
  ComparisonParams(Curvature k, double u, double v);

  Curvature k() const noexcept { return k_; }
  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }

 private:
  Curvature k_;
  double u_;
  double v_;
};

/// A point of M_k in the chart above: two coordinates for k <= 0, three
/// ambient coordinates for k > 0.
class ModelPoint {
 public:
  ModelPoint(double x, double y) : coords_{x, y, 0.0}, dim_(2) {}
  ModelPoint(double x, double y, double z) : coords_{x, y, z}, dim_(3) {}

  std::size_t dimension() const noexcept { return dim_; }
  std::span<const double> coords() const noexcept { return {coords_.data(), dim_}; }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::array<double, 3> coords_;
  std::size_t dim_;
};

/// Arguments of arccos within this distance outside [-1, 1] are clamped.
inline constexpr double kClampTolerance = 1e-12;
/// Below |k| g^2 < this, ct_k switches to its Laurent series.
inline constexpr double kSeriesThreshold = 1e-8;

double eval_g(const ComparisonParams& params, double t);
double eval_g_prime(const ComparisonParams& params, double t);
/// g_k''(t), obtained from the model ODE g'' = rhs(k, g, g').
double eval_g_second(const ComparisonParams& params, double t);

/// Generalized cotangent: 1/g, sqrt(-k) coth(sqrt(-k) g), sqrt(k) cot(sqrt(k) g).
double generalized_cot(Curvature k, double g);
/// (1 - gp^2) * ct_k(g), the right-hand side of the comparison inequalities.
double rhs(Curvature k, double g, double gp);

ModelPoint geodesic_point(Curvature k, double t);
ModelPoint comparison_point(const ComparisonParams& params);
double model_distance(Curvature k, const ModelPoint& p, const ModelPoint& q);

namespace detail {
// No argument checks; callers guarantee g > 0 and, for k > 0, sqrt(k) g < pi.
double generalized_cot_unchecked(Curvature k, double g) noexcept;
}  // namespace detail

}  // namespace curvcmp
