#include "curvcmp/comparison_engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "curvcmp/error.hpp"
#include "curvcmp/lcg.hpp"

namespace curvcmp {

const char* to_string(ChordRelation relation) noexcept {
  switch (relation) {
    case ChordRelation::below: return "below";
    case ChordRelation::above: return "above";
    case ChordRelation::equal: return "equal";
    case ChordRelation::mixed: return "mixed";
  }
  return "unknown";
}

const char* to_string(Side side) noexcept { return side == Side::upper ? "upper" : "lower"; }

ChordRelation relate(double min_gap, double max_gap, double tol) noexcept {
  const bool not_above = max_gap <= tol;
  const bool not_below = min_gap >= -tol;
  if (not_above && not_below) return ChordRelation::equal;
  if (not_above) return ChordRelation::below;
  if (not_below) return ChordRelation::above;
  return ChordRelation::mixed;
}

ChordComparison compare_on_nodes(const SampledFunction& f, Curvature k, IndexPair nodes, double tol) {
  if (!(nodes.i < nodes.j) || nodes.j >= f.size()) {
    throw Error(ErrorKind::argument, "chord needs node indices i < j inside the grid");
  }
  const IndexPair chord[] = {nodes};
  const kernels::GapRange range = kernels::serial::chord_gap_ranges(f, k, chord).front();
  return {f.t(nodes.i), f.t(nodes.j), nodes, relate(range.min_gap, range.max_gap, tol),
          range.max_gap, range.min_gap};
}

ChordComparison compare_on_chord(const SampledFunction& f, Curvature k, double t1, double t2,
                                 double tol) {
  const auto i = f.node_index(t1);
  const auto j = f.node_index(t2);
  if (!i || !j) {
    throw Error(ErrorKind::grid, "chord endpoints must be grid nodes");
  }
  return compare_on_nodes(f, k, {*i, *j}, tol);
}

std::vector<IndexPair> draw_chords(std::size_t nodes, std::size_t pair_count, std::uint64_t seed) {
  std::vector<IndexPair> chords;
  if (nodes < 2) return chords;
  const std::size_t total = nodes * (nodes - 1) / 2;
  if (pair_count >= total) {
    chords.reserve(total);
    for (std::size_t i = 0; i < nodes; ++i) {
      for (std::size_t j = i + 1; j < nodes; ++j) chords.push_back({i, j});
    }
    return chords;
  }
  Lcg64 rng(seed);
  std::set<IndexPair> picked;
  while (picked.size() < pair_count) {
    const auto i = static_cast<std::size_t>(rng.below(nodes));
    const auto j = static_cast<std::size_t>(rng.below(nodes));
    if (i == j) continue;
    picked.insert({std::min(i, j), std::max(i, j)});
  }
  return {picked.begin(), picked.end()};
}

ChordAgreement judge_chord(VerdictKind verdict, double min_gap, double max_gap, double tol) noexcept {
  double against = 0.0;
  switch (verdict) {
    case VerdictKind::upper_satisfied: against = max_gap; break;
    case VerdictKind::lower_satisfied: against = -min_gap; break;
    case VerdictKind::equality: against = std::max(max_gap, -min_gap); break;
    case VerdictKind::neither: return ChordAgreement::agrees;
  }
  if (against > 3.0 * tol) return ChordAgreement::mismatch;
  if (against > tol) return ChordAgreement::inconclusive;
  return ChordAgreement::agrees;
}

namespace {

template <typename ResidualFn, typename GapFn>
AuditReport run_audit(const SampledFunction& f, Curvature k, std::size_t pair_count,
                      std::uint64_t seed, double tol, ResidualFn residuals, GapFn gaps) {
  if (pair_count == 0) {
    throw Error(ErrorKind::argument, "audit needs at least one chord");
  }
  const ResidualSeries series = residuals(f, k, kDefaultGridTolerance, 2);
  if (!(tol > 0.0)) tol = default_tolerance(series);

  AuditReport report{};
  report.verdict = classify(series, tol);
  report.tol = tol;

  const std::vector<IndexPair> chords = draw_chords(f.size(), pair_count, seed);
  const std::vector<kernels::GapRange> ranges = gaps(f, k, chords);
  report.chords_tested = chords.size();

  for (std::size_t c = 0; c < chords.size(); ++c) {
    const kernels::GapRange& r = ranges[c];
    switch (relate(r.min_gap, r.max_gap, tol)) {
      case ChordRelation::below: ++report.below; break;
      case ChordRelation::above: ++report.above; break;
      case ChordRelation::equal: ++report.equal; break;
      case ChordRelation::mixed: ++report.mixed; break;
    }

    switch (judge_chord(report.verdict.kind, r.min_gap, r.max_gap, tol)) {
      case ChordAgreement::mismatch:
        report.mismatches.push_back({f.t(chords[c].i), f.t(chords[c].j),
                                     report.verdict.kind == VerdictKind::upper_satisfied   ? r.max_gap
                                     : report.verdict.kind == VerdictKind::lower_satisfied ? r.min_gap
                                     : r.max_gap >= -r.min_gap                             ? r.max_gap
                                                                                           : r.min_gap});
        break;
      case ChordAgreement::inconclusive:
        ++report.inconclusive;
        ++report.agreements;
        break;
      case ChordAgreement::agrees:
        ++report.agreements;
        break;
    }
  }
  return report;
}

ResidualSeries parallel_residuals(const SampledFunction& f, Curvature k, double grid_tol, int order) {
  return residual_series(f, k, grid_tol, order);
}

ResidualSeries serial_residuals(const SampledFunction& f, Curvature k, double grid_tol, int order) {
  return reference::residual_series(f, k, grid_tol, order);
}

}  // namespace

AuditReport equivalence_audit(const SampledFunction& f, Curvature k, std::size_t pair_count,
                              std::uint64_t seed, double tol) {
  return run_audit(f, k, pair_count, seed, tol, parallel_residuals,
                   kernels::parallel::chord_gap_ranges);
}

namespace reference {

AuditReport equivalence_audit(const SampledFunction& f, Curvature k, std::size_t pair_count,
                              std::uint64_t seed, double tol) {
  return run_audit(f, k, pair_count, seed, tol, serial_residuals, kernels::serial::chord_gap_ranges);
}

}  // namespace reference

ThresholdResult estimate_threshold(const SampledFunction& f, Side side, double k_min, double k_max,
                                   double k_tol) {
  if (!std::isfinite(k_min) || !std::isfinite(k_max) || !(k_min < k_max)) {
    throw Error(ErrorKind::argument, "threshold search needs finite k_min < k_max");
  }
  if (!(k_tol > 0.0)) {
    throw Error(ErrorKind::argument, "threshold tolerance must be positive");
  }

  // The tolerance depends only on the data, so one value serves every k.
  const double tol = default_tolerance(residual_series(f, Curvature(k_min)));
  auto holds = [&](double k) {
    const Verdict verdict = classify(residual_series(f, Curvature(k)), tol);
    return side == Side::upper ? verdict.upper() : verdict.lower();
  };

  // upper: the side holds on [k*, inf); lower: it holds on (-inf, k*].
  const bool at_min = holds(k_min);
  const bool at_max = holds(k_max);
  const bool bracketed = side == Side::upper ? (!at_min && at_max) : (at_min && !at_max);
  if (!bracketed) {
    throw Error(ErrorKind::bracket, std::string("the ") + to_string(side) +
                                        " inequality does not change between k_min and k_max");
  }

  ThresholdResult result{k_min, k_max, 0, side};
  constexpr std::size_t kMaxIterations = 200;
  while (result.k_hi - result.k_lo > k_tol && result.iterations < kMaxIterations) {
    const double mid = 0.5 * (result.k_lo + result.k_hi);
    const bool high_side = side == Side::upper ? holds(mid) : !holds(mid);
    (high_side ? result.k_hi : result.k_lo) = mid;
    ++result.iterations;
  }
  return result;
}

SampledFunction synth(const ComparisonParams& params, double a, double b, std::size_t n) {
  if (params.k().sign() == CurvatureSign::positive && a < 0.0) {
    throw Error(ErrorKind::domain, "spherical samples need a >= 0");
  }
  std::vector<double> ts = uniform_grid(a, b, n);
  std::vector<double> gs(n);
  std::transform(ts.begin(), ts.end(), gs.begin(), [&](double t) { return eval_g(params, t); });
  return {std::move(ts), std::move(gs)};
}

double bump(double x) noexcept {
  const double ax = std::abs(x);
  if (ax < 1.0) return 1.0 - 1.5 * ax * ax + 0.75 * ax * ax * ax;
  if (ax < 2.0) {
    const double r = 2.0 - ax;
    return 0.25 * r * r * r;
  }
  return 0.0;
}

SampledFunction perturb(const SampledFunction& f, double amplitude, double center, double width) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(amplitude) || !std::isfinite(center)) {
    throw Error(ErrorKind::argument, "perturbation needs finite parameters and width > 0");
  }
  std::vector<double> gs(f.gs().begin(), f.gs().end());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const double shape = bump((f.t(i) - center) / width);
    if (shape == 0.0) continue;
    gs[i] += amplitude * shape;
    if (!(gs[i] > 0.0)) {
      throw Error(ErrorKind::domain, "perturbation drives the sample nonpositive at node " +
                                         std::to_string(i));
    }
  }
  return {std::vector<double>(f.ts().begin(), f.ts().end()), std::move(gs)};
}

}  // namespace curvcmp
