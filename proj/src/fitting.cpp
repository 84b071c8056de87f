#include "curvcmp/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "curvcmp/error.hpp"

namespace curvcmp {

namespace {

// Slack allowed on |alpha - beta| <= t2 - t1 for collinear hyperbolic chords.
constexpr double kCollinearTolerance = 1e-12;

FitResult finish(const ChordSpec& spec, double u, double v) {
  ComparisonParams params(spec.k, u, v);
  return {params, eval_g(params, spec.t1) - spec.alpha, eval_g(params, spec.t2) - spec.beta};
}

void require_sign(const ChordSpec& spec, CurvatureSign sign, const char* who) {
  if (spec.k.sign() != sign) {
    throw Error(ErrorKind::argument, std::string(who) + " called with the wrong curvature sign");
  }
}

}  // namespace

void validate(const ChordSpec& spec) {
  if (!std::isfinite(spec.t1) || !std::isfinite(spec.t2) || !std::isfinite(spec.alpha) ||
      !std::isfinite(spec.beta)) {
    throw Error(ErrorKind::argument, "chord data must be finite");
  }
  if (!(spec.t1 < spec.t2)) {
    throw Error(ErrorKind::argument, "chord needs t1 < t2");
  }
  if (!(spec.alpha > 0.0) || !(spec.beta > 0.0)) {
    throw Error(ErrorKind::domain, "chord endpoint values must be positive");
  }
  const double length = spec.t2 - spec.t1;
  if (spec.k.sign() == CurvatureSign::positive) {
    const double s = spec.k.root();
    if (spec.t1 < 0.0) {
      throw Error(ErrorKind::domain, "spherical chords need t1 >= 0");
    }
    if (!(s * length < std::numbers::pi)) {
      throw Error(ErrorKind::domain, "spherical chord longer than half a great circle");
    }
    if (!(s * std::max(spec.alpha, spec.beta) < std::numbers::pi)) {
      throw Error(ErrorKind::domain, "spherical endpoint distance reaches the antipode");
    }
  }
  if (!(length < spec.alpha + spec.beta)) {
    throw Error(ErrorKind::infeasible, "chord violates t2 - t1 < g(t1) + g(t2)");
  }
  const double spread = std::abs(spec.alpha - spec.beta);
  const bool collinear_ok = spec.k.sign() == CurvatureSign::negative &&
                            spread <= length + kCollinearTolerance * (1.0 + length);
  if (!(spread < length) && !collinear_ok) {
    throw Error(ErrorKind::infeasible, "chord violates |g(t1) - g(t2)| < t2 - t1");
  }
}

FitResult fit_euclidean(const ChordSpec& spec) {
  require_sign(spec, CurvatureSign::zero, "fit_euclidean");
  validate(spec);
  const double length = spec.t2 - spec.t1;
  const double offset = (spec.alpha * spec.alpha - spec.beta * spec.beta) / (2.0 * length) + 0.5 * length;
  const double v2 = (spec.alpha - offset) * (spec.alpha + offset);
  if (!(v2 > 0.0)) {
    throw Error(ErrorKind::infeasible, "chord forces the comparison point onto the geodesic");
  }
  return finish(spec, spec.t1 + offset, std::sqrt(v2));
}

// Two instances of cosh(s g) = A e^{-s t} + B e^{s t}, A = (u^2+v^2)/(2v),
// B = 1/(2v). Solved at t1 = 0 and mapped back with the dilation
// (x, y) -> e^{s t1} (x, y), an isometry that shifts the geodesic by t1.
FitResult fit_hyperbolic(const ChordSpec& spec) {
  require_sign(spec, CurvatureSign::negative, "fit_hyperbolic");
  validate(spec);
  const double s = spec.k.root();
  const double length = spec.t2 - spec.t1;
  const double c1 = std::cosh(s * spec.alpha);
  const double c2 = std::cosh(s * spec.beta);
  const double det = 2.0 * std::sinh(s * length);
  const double a = (c1 * std::exp(s * length) - c2) / det;
  const double b = (c2 - c1 * std::exp(-s * length)) / det;
  if (!(b > 0.0)) {
    throw Error(ErrorKind::infeasible, "hyperbolic chord not realizable (B <= 0)");
  }
  const double disc = 4.0 * a * b - 1.0;
  if (disc < -kCollinearTolerance) {
    throw Error(ErrorKind::infeasible, "hyperbolic chord not realizable (4AB < 1)");
  }
  const double scale = std::exp(s * spec.t1);
  const double v = scale / (2.0 * b);
  const double u = scale * std::sqrt(std::max(0.0, disc)) / (2.0 * b);
  return finish(spec, u, v);
}

// u cos(s t) + v sin(s t) = cos(s g) / s at both ends. Solved at t1 = 0 and
// rotated back about the polar axis by s t1.
FitResult fit_spherical(const ChordSpec& spec) {
  require_sign(spec, CurvatureSign::positive, "fit_spherical");
  validate(spec);
  const double s = spec.k.root();
  const double length = spec.t2 - spec.t1;
  const double r1 = std::cos(s * spec.alpha) / s;
  const double r2 = std::cos(s * spec.beta) / s;
  const double u0 = r1;
  const double v0 = (r2 - r1 * std::cos(s * length)) / std::sin(s * length);
  if (!(u0 * u0 + v0 * v0 < 1.0 / spec.k.value() - 1e-12)) {
    throw Error(ErrorKind::infeasible, "spherical chord not embeddable (u^2 + v^2 >= 1/k)");
  }
  const double c = std::cos(s * spec.t1);
  const double sn = std::sin(s * spec.t1);
  return finish(spec, u0 * c - v0 * sn, u0 * sn + v0 * c);
}

FitResult fit(const ChordSpec& spec) {
  switch (spec.k.sign()) {
    case CurvatureSign::zero: return fit_euclidean(spec);
    case CurvatureSign::negative: return fit_hyperbolic(spec);
    case CurvatureSign::positive: return fit_spherical(spec);
  }
  throw Error(ErrorKind::argument, "unreachable curvature sign");
}

}  // namespace curvcmp
