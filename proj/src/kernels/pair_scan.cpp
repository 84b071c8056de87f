#include <algorithm>
#include <cmath>
#include <limits>

#include "curvcmp/kernels.hpp"

namespace curvcmp::kernels {

namespace {

inline double pair_slack(double ti, double gi, double tj, double gj, double slope_tol) {
  const double dt = tj - ti;
  const double nonexpanding = dt * (1.0 + slope_tol) - std::abs(gj - gi);
  const double two_point = gi + gj + kTwoPointAllowance - dt;
  return std::min(nonexpanding, two_point);
}

}  // namespace

namespace serial {

PairScan pair_scan(std::span<const double> ts, std::span<const double> gs, double slope_tol) {
  PairScan best{std::numeric_limits<double>::infinity(), {0, 1}};
  const std::size_t n = ts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double slack = pair_slack(ts[i], gs[i], ts[j], gs[j], slope_tol);
      if (slack < best.min_slack) best = {slack, {i, j}};
    }
  }
  return best;
}

}  // namespace serial

namespace parallel {

PairScan pair_scan(std::span<const double> ts, std::span<const double> gs, double slope_tol) {
  const std::size_t n = ts.size();
  std::vector<PairScan> rows(n, PairScan{std::numeric_limits<double>::infinity(), {0, 1}});

  // Rows shrink with i, so hand them out dynamically.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < n; ++i) {
    PairScan row{std::numeric_limits<double>::infinity(), {i, i + 1}};
    for (std::size_t j = i + 1; j < n; ++j) {
      const double slack = pair_slack(ts[i], gs[i], ts[j], gs[j], slope_tol);
      if (slack < row.min_slack) row = {slack, {i, j}};
    }
    rows[i] = row;
  }

  PairScan best{std::numeric_limits<double>::infinity(), {0, 1}};
  for (const PairScan& row : rows) {
    if (row.min_slack < best.min_slack) best = row;
  }
  return best;
}

}  // namespace parallel

}  // namespace curvcmp::kernels
