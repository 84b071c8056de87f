#pragma once

// Pointwise residual of the comparison inequality
//
//   g'' >= (1 - g'^2) ct_k(g)      ("curvature <= k" side, g below its chords)
//   g'' <= (1 - g'^2) ct_k(g)      ("curvature >= k" side, g above its chords)
//
// on uniformly sampled data, and the monotone witness functions whose
// nondecrease is equivalent to the first inequality.

#include <vector>

#include "curvcmp/model_spaces.hpp"
#include "curvcmp/sampled_function.hpp"

namespace curvcmp {

inline constexpr double kDefaultGridTolerance = 1e-9;

struct StencilInfo {
  int order;    // 2, 4 or 6
  double step;  // grid spacing h
};

struct ResidualSeries {
  std::vector<double> ts;  // interior nodes
  std::vector<double> rs;  // g'' - rhs at those nodes
  StencilInfo stencil;
  double second_scale;     // max(1, max |g''| estimate)
};

enum class VerdictKind { upper_satisfied, lower_satisfied, equality, neither };

struct Verdict {
  VerdictKind kind;
  double min_residual;
  double max_residual;
  double tol;

  /// True for upper_satisfied and equality.
  bool upper() const noexcept {
    return kind == VerdictKind::upper_satisfied || kind == VerdictKind::equality;
  }
  bool lower() const noexcept {
    return kind == VerdictKind::lower_satisfied || kind == VerdictKind::equality;
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(VerdictKind kind) noexcept;

/// Throws domain on nonpositive samples or sqrt(k) max g >= pi; grid on a
/// nonuniform grid (beyond grid_tol relative) or too few nodes; argument on
/// an unsupported stencil order.
ResidualSeries residual_series(const SampledFunction& f, Curvature k,
                               double grid_tol = kDefaultGridTolerance, int order = 2);

namespace reference {
ResidualSeries residual_series(const SampledFunction& f, Curvature k,
                               double grid_tol = kDefaultGridTolerance, int order = 2);
}  // namespace reference

/// max(1e-6, 10 h^2 scale), tied to the order-2 stencil error.
double default_tolerance(const ResidualSeries& series);

Verdict classify(const ResidualSeries& series, double tol);

/// residual_series + classify with the default tolerance.
Verdict check(const SampledFunction& f, Curvature k);

enum class WitnessKind { h_neg, H_pos, w_zero };

const char* to_string(WitnessKind kind) noexcept;

// h(t) = e^{-st} (cosh(s g) + g' sinh(s g))   k < 0, s = sqrt(-k)
// H(t) = g' cos(s t) sin(s g) - sin(s t) cos(s g)   k > 0, s = sqrt(k)
// w(t) = g g' - t   k = 0
// Their derivatives are factor(t) * (g'' - rhs) with a positive factor,
// e^{-st} sinh(s g), cos(s t) sin(s g) and g respectively.
struct WitnessSeries {
  std::vector<double> ts;
  std::vector<double> ws;
  WitnessKind kind;
  double step;
  double min_factor;
  double max_factor;
};

/// g' by central differences inside, one-sided second order at the ends.
/// For k > 0 additionally needs a >= 0 and sqrt(k) b < pi/2.
WitnessSeries witness_series(const SampledFunction& f, Curvature k,
                             double grid_tol = kDefaultGridTolerance);

/// Nondecreasing up to tol: w_j >= w_i - tol for every i < j (bounded
/// drawdown, so slow cumulative decrease is caught as well).
bool witness_monotone(const WitnessSeries& series, double tol);

/// tol * max factor * (b - a + 1): the drawdown a residual of -tol can cause
/// over [a, b], plus one band width for the O(h^2) one-sided end stencils.
double default_witness_tolerance(const WitnessSeries& series, double residual_tol);

}  // namespace curvcmp
