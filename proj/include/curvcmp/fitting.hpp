#pragma once

#include "curvcmp/model_spaces.hpp"

namespace curvcmp {

/// Boundary data for g_k^{t1,t2}: g(t1) = alpha, g(t2) = beta.
struct ChordSpec {
  double t1;
  double t2;
  double alpha;
  double beta;
  Curvature k;
};

struct FitResult {
  ComparisonParams params;
  double residual_t1;  // eval_g(params, t1) - alpha
  double residual_t2;  // eval_g(params, t2) - beta
};

/// Throws unless the chord is admissible for its curvature: t1 < t2, positive
/// targets, triangle feasibility, and the spherical size guards
/// (t1 >= 0, sqrt(k)(t2 - t1) < pi, sqrt(k) max(alpha, beta) < pi).
void validate(const ChordSpec& spec);

FitResult fit_euclidean(const ChordSpec& spec);
FitResult fit_hyperbolic(const ChordSpec& spec);
FitResult fit_spherical(const ChordSpec& spec);
FitResult fit(const ChordSpec& spec);

}  // namespace curvcmp
