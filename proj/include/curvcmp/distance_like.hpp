#pragma once

// Distance-like samples: nonnegative, nonexpanding, and
// |t1 - t2| <= g(t1) + g(t2) for every pair of parameters.
//
// The cheap route checks consecutive slopes plus the single endpoint bound
// b - a <= g(a) + g(b), which together imply the pairwise bound. The pairwise
// oracle checks both conditions over every grid pair and exists to confirm
// that implication independently.

#include <optional>

#include "curvcmp/kernels.hpp"
#include "curvcmp/sampled_function.hpp"

namespace curvcmp {

/// Relative slack on slopes when testing |g_j - g_i| <= (t_j - t_i).
inline constexpr double kDefaultSlopeTolerance = 1e-9;

struct PairCheck {
  bool ok;
  std::optional<IndexPair> violation;
  double worst_slack;
};

struct DistanceLikeReport {
  bool nonexpanding;
  bool endpoint_ok;
  std::optional<bool> pairwise_ok;   // set only when the oracle ran
  std::optional<IndexPair> first_violation;
  std::optional<IndexPair> oracle_violation;
  double worst_slack;

  bool distance_like() const noexcept { return nonexpanding && endpoint_ok; }
};

enum class OracleMode { skip, run };

/// Consecutive-pair slope check; reports the first offending step.
PairCheck is_nonexpanding(const SampledFunction& f, double tol = kDefaultSlopeTolerance);

bool endpoint_condition(const SampledFunction& f);

DistanceLikeReport is_distance_like(const SampledFunction& f, double tol = kDefaultSlopeTolerance,
                                    OracleMode oracle = OracleMode::skip);

/// All-pairs check of both conditions; reports the worst-violating pair.
PairCheck pairwise_oracle(const SampledFunction& f, double tol = kDefaultSlopeTolerance);

namespace reference {
PairCheck pairwise_oracle(const SampledFunction& f, double tol = kDefaultSlopeTolerance);
}  // namespace reference

}  // namespace curvcmp
