#include "curvcmp/distance_like.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvcmp {

PairCheck is_nonexpanding(const SampledFunction& f, double tol) {
  PairCheck result{true, std::nullopt, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double slack = (f.t(i + 1) - f.t(i)) * (1.0 + tol) - std::abs(f.g(i + 1) - f.g(i));
    result.worst_slack = std::min(result.worst_slack, slack);
    if (slack < 0.0 && result.ok) {
      result.ok = false;
      result.violation = IndexPair{i, i + 1};
    }
  }
  return result;
}

bool endpoint_condition(const SampledFunction& f) {
  return f.b() - f.a() <= f.g(0) + f.g(f.size() - 1) + kernels::kTwoPointAllowance;
}

DistanceLikeReport is_distance_like(const SampledFunction& f, double tol, OracleMode oracle) {
  const PairCheck slopes = is_nonexpanding(f, tol);
  const std::size_t last = f.size() - 1;
  DistanceLikeReport report{};
  report.nonexpanding = slopes.ok;
  report.endpoint_ok = endpoint_condition(f);
  report.worst_slack = std::min(slopes.worst_slack, f.g(0) + f.g(last) - (f.b() - f.a()));
  if (!slopes.ok) {
    report.first_violation = slopes.violation;
  } else if (!report.endpoint_ok) {
    report.first_violation = IndexPair{0, last};
  }
  if (oracle == OracleMode::run) {
    const PairCheck all = pairwise_oracle(f, tol);
    report.pairwise_ok = all.ok;
    report.oracle_violation = all.violation;
  }
  return report;
}

namespace {

PairCheck to_check(const kernels::PairScan& scan) {
  const bool ok = !(scan.min_slack < 0.0);
  return {ok, ok ? std::nullopt : std::optional<IndexPair>(scan.worst), scan.min_slack};
}

}  // namespace

PairCheck pairwise_oracle(const SampledFunction& f, double tol) {
  return to_check(kernels::parallel::pair_scan(f.ts(), f.gs(), tol));
}

namespace reference {

PairCheck pairwise_oracle(const SampledFunction& f, double tol) {
  return to_check(kernels::serial::pair_scan(f.ts(), f.gs(), tol));
}

}  // namespace reference

}  // namespace curvcmp
