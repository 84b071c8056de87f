#pragma once

#include <cstdint>
#include <vector>

#include "curvcmp/inequality_checker.hpp"
#include "curvcmp/kernels.hpp"
#include "curvcmp/model_spaces.hpp"
#include "curvcmp/sampled_function.hpp"

namespace curvcmp {

enum class ChordRelation { below, above, equal, mixed };

const char* to_string(ChordRelation relation) noexcept;

/// g against g_k^{t1,t2} at every node of [t1, t2]; gap = g - g_k^{t1,t2}.
struct ChordComparison {
  double t1;
  double t2;
  IndexPair nodes;
  ChordRelation relation;
  double max_signed_gap;
  double min_signed_gap;

  /// The signed gap of largest magnitude.
  double extreme_gap() const noexcept {
    return max_signed_gap >= -min_signed_gap ? max_signed_gap : min_signed_gap;
  }
};

ChordRelation relate(double min_gap, double max_gap, double tol) noexcept;

/// t1 and t2 must be grid nodes (within 1e-12 relative), else a grid error.
ChordComparison compare_on_chord(const SampledFunction& f, Curvature k, double t1, double t2,
                                 double tol);
ChordComparison compare_on_nodes(const SampledFunction& f, Curvature k, IndexPair nodes, double tol);

enum class ChordAgreement { agrees, inconclusive, mismatch };

/// How a chord's gap range [min_gap, max_gap] bears on a verdict: by how much
/// it leans against the predicted side (g below its chords for upper, above
/// for lower, both for equality); beyond tol is inconclusive, beyond 3 tol a
/// mismatch. A neither verdict predicts nothing and always agrees.
ChordAgreement judge_chord(VerdictKind verdict, double min_gap, double max_gap, double tol) noexcept;

struct ChordMismatch {
  double t1;
  double t2;
  double gap;

  friend bool operator==(const ChordMismatch&, const ChordMismatch&) = default;
};

struct AuditReport {
  Verdict verdict;
  std::size_t chords_tested;
  std::size_t agreements;
  std::size_t inconclusive;  // contradicting by more than tol but at most 3 tol
  std::size_t below;
  std::size_t above;
  std::size_t equal;
  std::size_t mixed;
  std::vector<ChordMismatch> mismatches;
  double tol;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Distinct node pairs drawn with the seeded generator, sorted by (i, j).
/// Returns every pair when pair_count exceeds n(n-1)/2.
std::vector<IndexPair> draw_chords(std::size_t nodes, std::size_t pair_count, std::uint64_t seed);

/// Draws pair_count chords and checks each against the inequality verdict at
/// k. A chord contradicting the verdict by more than 3 tol is a mismatch.
/// tol <= 0 selects the default classification tolerance of the sample.
AuditReport equivalence_audit(const SampledFunction& f, Curvature k, std::size_t pair_count,
                              std::uint64_t seed, double tol = 0.0);

namespace reference {
AuditReport equivalence_audit(const SampledFunction& f, Curvature k, std::size_t pair_count,
                              std::uint64_t seed, double tol = 0.0);
}  // namespace reference

enum class Side { upper, lower };

const char* to_string(Side side) noexcept;

struct ThresholdResult {
  double k_lo;
  double k_hi;
  std::size_t iterations;
  Side side;

  double estimate() const noexcept { return 0.5 * (k_lo + k_hi); }
};

/// Bisection for the curvature at which the chosen inequality side starts
/// (upper: inf of k with the upper side) or stops (lower: sup of k with the
/// lower side) holding. Both ends must classify differently.
ThresholdResult estimate_threshold(const SampledFunction& f, Side side, double k_min, double k_max,
                                   double k_tol);

/// n uniform samples of g_k on [a, b].
SampledFunction synth(const ComparisonParams& params, double a, double b, std::size_t n);

/// Unit-peak C^2 cubic B-spline hat supported on |x| < 2.
double bump(double x) noexcept;

/// f + amplitude * bump((t - center) / width). Throws domain if a perturbed
/// value becomes nonpositive, argument if width <= 0.
SampledFunction perturb(const SampledFunction& f, double amplitude, double center, double width);

}  // namespace curvcmp
