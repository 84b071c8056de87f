#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference and an
// OpenMP version; both produce bit-identical results (ties are broken by
// index order in both), and tests hold the parallel one to the reference.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "curvcmp/model_spaces.hpp"
#include "curvcmp/sampled_function.hpp"

namespace curvcmp {

struct IndexPair {
  std::size_t i;
  std::size_t j;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

namespace kernels {

/// Additive allowance on the two-point bound |t_i - t_j| <= g_i + g_j.
inline constexpr double kTwoPointAllowance = 1e-12;

/// Minimum over all pairs i < j of the slacks
///   (t_j - t_i)(1 + slope_tol) - |g_j - g_i|       (nonexpanding)
///   g_i + g_j + kTwoPointAllowance - (t_j - t_i)   (two-point bound)
/// and the pair attaining it; ties go to the lexicographically smallest pair.
struct PairScan {
  double min_slack;
  IndexPair worst;
};

/// Central-difference residuals g'' - rhs(k, g, g') at interior nodes
/// order/2 .. n-1-order/2 of a uniform grid with step h. `residuals` and
/// `second` must hold n - order values. Callers check the domain first.
struct StencilOut {
  std::span<double> residuals;
  std::span<double> second;
};

/// Extreme signed gaps g - g_k^{t_i,t_j} over the nodes of one chord.
struct GapRange {
  double min_gap;
  double max_gap;
};

bool valid_stencil_order(int order) noexcept;

namespace serial {
PairScan pair_scan(std::span<const double> ts, std::span<const double> gs, double slope_tol);
void stencil_residuals(std::span<const double> gs, double h, Curvature k, int order, StencilOut out);
std::vector<GapRange> chord_gap_ranges(const SampledFunction& f, Curvature k,
                                       std::span<const IndexPair> chords);
}  // namespace serial

namespace parallel {
PairScan pair_scan(std::span<const double> ts, std::span<const double> gs, double slope_tol);
void stencil_residuals(std::span<const double> gs, double h, Curvature k, int order, StencilOut out);
std::vector<GapRange> chord_gap_ranges(const SampledFunction& f, Curvature k,
                                       std::span<const IndexPair> chords);
}  // namespace parallel

}  // namespace kernels
}  // namespace curvcmp
