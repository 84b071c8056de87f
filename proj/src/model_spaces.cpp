#include "curvcmp/model_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "curvcmp/error.hpp"

namespace curvcmp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::domain: return "domain";
    case ErrorKind::singular: return "singular";
    case ErrorKind::grid: return "grid";
    case ErrorKind::bracket: return "bracket";
  }
  return "unknown";
}

namespace {

// arccosh(1 + x) for x >= 0 without the cancellation of acosh near 1.
double acosh1p(double x) { return std::log1p(x + std::sqrt(x * (x + 2.0))); }

// cosh(sqrt(-k) g_k(t)) - 1 for the half-plane comparison function. The
// closed form's bracket (u^2+v^2) e^{-st} + e^{st} - 2v regroups as a sum
// of squares, so the result is nonnegative in floating point as well.
double hyperbolic_excess(double s, double u, double v, double t) {
  const double half_up = std::exp(0.5 * s * t);
  const double half_down = std::exp(-0.5 * s * t);
  const double diff = half_up - v * half_down;
  return (u * u * half_down * half_down + diff * diff) / (2.0 * v);
}

}  // namespace

Curvature::Curvature(double k) : k_(k), root_(std::sqrt(std::abs(k))) {
  if (!std::isfinite(k)) {
    throw Error(ErrorKind::argument, "curvature must be finite");
  }
}

CurvatureSign Curvature::sign() const noexcept {
  if (k_ < 0.0) return CurvatureSign::negative;
  if (k_ > 0.0) return CurvatureSign::positive;
  return CurvatureSign::zero;
}

ComparisonParams::ComparisonParams(Curvature k, double u, double v) : k_(k), u_(u), v_(v) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw Error(ErrorKind::argument, "comparison parameters must be finite");
  }
  switch (k.sign()) {
    case CurvatureSign::negative:
      u_ = std::abs(u);
      [[fallthrough]];
    case CurvatureSign::zero:
      if (!(v > 0.0)) {
        throw Error(ErrorKind::argument, "comparison parameter v must be positive for k <= 0");
      }
      break;
    case CurvatureSign::positive:
      if (!(u * u + v * v < 1.0 / k.value())) {
        throw Error(ErrorKind::argument, "comparison parameters need u^2 + v^2 < 1/k for k > 0");
      }
      break;
  }
}

double eval_g(const ComparisonParams& params, double t) {
  const double s = params.k().root();
  const double u = params.u();
  const double v = params.v();
  switch (params.k().sign()) {
    case CurvatureSign::zero:
      return std::hypot(u - t, v);
    case CurvatureSign::negative:
      return acosh1p(hyperbolic_excess(s, u, v, t)) / s;
    case CurvatureSign::positive: {
      double arg = s * (u * std::cos(s * t) + v * std::sin(s * t));
      if (std::abs(arg) > 1.0 + kClampTolerance) {
        throw Error(ErrorKind::domain, "arccos argument outside [-1, 1]: " + std::to_string(arg));
      }
      arg = std::clamp(arg, -1.0, 1.0);
      return std::acos(arg) / s;
    }
  }
  return 0.0;
}

double eval_g_prime(const ComparisonParams& params, double t) {
  const double s = params.k().root();
  const double u = params.u();
  const double v = params.v();
  double num = 0.0;
  double den = 0.0;
  switch (params.k().sign()) {
    case CurvatureSign::zero:
      num = t - u;
      den = std::hypot(num, v);
      break;
    case CurvatureSign::negative: {
      // g' sinh(s g) = N and sinh^2(s g) = N^2 + (u/v)^2.
      num = (std::exp(s * t) - (u * u + v * v) * std::exp(-s * t)) / (2.0 * v);
      den = std::hypot(num, u / v);
      break;
    }
    case CurvatureSign::positive: {
      // g' sin(s g) = s (u sin - v cos) and sin(s g) = s |P x gamma(t)| / |P|.
      const double w2 = std::max(0.0, 1.0 / params.k().value() - u * u - v * v);
      num = u * std::sin(s * t) - v * std::cos(s * t);
      den = std::hypot(num, std::sqrt(w2));
      break;
    }
  }
  if (den == 0.0) {
    throw Error(ErrorKind::singular, "comparison point lies on the geodesic at t = " + std::to_string(t));
  }
  return num / den;
}

double eval_g_second(const ComparisonParams& params, double t) {
  const double gp = eval_g_prime(params, t);
  return rhs(params.k(), eval_g(params, t), gp);
}

namespace detail {

double generalized_cot_unchecked(Curvature k, double g) noexcept {
  const double kv = k.value();
  if (std::abs(kv) * g * g < kSeriesThreshold) {
    return 1.0 / g - kv * g / 3.0 - kv * kv * g * g * g / 45.0;
  }
  const double s = k.root();
  return k.sign() == CurvatureSign::negative ? s / std::tanh(s * g) : s / std::tan(s * g);
}

}  // namespace detail

double generalized_cot(Curvature k, double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw Error(ErrorKind::domain, "ct_k needs a positive distance, got " + std::to_string(g));
  }
  if (k.sign() == CurvatureSign::positive && !(k.root() * g < std::numbers::pi)) {
    throw Error(ErrorKind::domain, "sqrt(k) g must lie in (0, pi) for k > 0");
  }
  return detail::generalized_cot_unchecked(k, g);
}

double rhs(Curvature k, double g, double gp) {
  return (1.0 - gp) * (1.0 + gp) * generalized_cot(k, g);
}

ModelPoint geodesic_point(Curvature k, double t) {
  const double s = k.root();
  switch (k.sign()) {
    case CurvatureSign::zero:
      return {t, 0.0};
    case CurvatureSign::negative:
      return {0.0, std::exp(s * t)};
    case CurvatureSign::positive:
      if (t < 0.0) {
        throw Error(ErrorKind::argument, "spherical geodesic is parametrized for t >= 0");
      }
      return {std::cos(s * t) / s, std::sin(s * t) / s, 0.0};
  }
  return {0.0, 0.0};
}

ModelPoint comparison_point(const ComparisonParams& params) {
  const double u = params.u();
  const double v = params.v();
  if (params.k().sign() != CurvatureSign::positive) {
    return {u, v};
  }
  return {u, v, std::sqrt(std::max(0.0, 1.0 / params.k().value() - u * u - v * v))};
}

double model_distance(Curvature k, const ModelPoint& p, const ModelPoint& q) {
  const std::size_t dim = k.sign() == CurvatureSign::positive ? 3 : 2;
  if (p.dimension() != dim || q.dimension() != dim) {
    throw Error(ErrorKind::domain, "model point dimension does not match the curvature sign");
  }
  switch (k.sign()) {
    case CurvatureSign::zero:
      return std::hypot(p[0] - q[0], p[1] - q[1]);
    case CurvatureSign::negative: {
      if (!(p[1] > 0.0) || !(q[1] > 0.0)) {
        throw Error(ErrorKind::domain, "half-plane points need a positive second coordinate");
      }
      const double dx = p[0] - q[0];
      const double dy = p[1] - q[1];
      return acosh1p((dx * dx + dy * dy) / (2.0 * p[1] * q[1])) / k.root();
    }
    case CurvatureSign::positive: {
      const double radius = 1.0 / k.root();
      for (const ModelPoint* pt : {&p, &q}) {
        const double norm = std::hypot((*pt)[0], (*pt)[1], (*pt)[2]);
        if (std::abs(norm - radius) > 1e-12 * radius) {
          throw Error(ErrorKind::domain, "point is not on the sphere of radius 1/sqrt(k)");
        }
      }
      const double cx = p[1] * q[2] - p[2] * q[1];
      const double cy = p[2] * q[0] - p[0] * q[2];
      const double cz = p[0] * q[1] - p[1] * q[0];
      const double dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
      return std::atan2(std::hypot(cx, cy, cz), dot) / k.root();
    }
  }
  return 0.0;
}

}  // namespace curvcmp
