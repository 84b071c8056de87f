#include <algorithm>
#include <exception>
#include <limits>

#include "curvcmp/fitting.hpp"
#include "curvcmp/kernels.hpp"

namespace curvcmp::kernels {

namespace {

GapRange gaps_on_chord(const SampledFunction& f, Curvature k, IndexPair chord) {
  const FitResult fitted = fit({f.t(chord.i), f.t(chord.j), f.g(chord.i), f.g(chord.j), k});
  GapRange range{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t m = chord.i; m <= chord.j; ++m) {
    const double gap = f.g(m) - eval_g(fitted.params, f.t(m));
    range.min_gap = std::min(range.min_gap, gap);
    range.max_gap = std::max(range.max_gap, gap);
  }
  return range;
}

}  // namespace

namespace serial {

std::vector<GapRange> chord_gap_ranges(const SampledFunction& f, Curvature k,
                                       std::span<const IndexPair> chords) {
  std::vector<GapRange> out;
  out.reserve(chords.size());
  for (const IndexPair& chord : chords) out.push_back(gaps_on_chord(f, k, chord));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<GapRange> chord_gap_ranges(const SampledFunction& f, Curvature k,
                                       std::span<const IndexPair> chords) {
  const std::size_t count = chords.size();
  std::vector<GapRange> out(count, GapRange{0.0, 0.0});
  std::vector<std::exception_ptr> failures(count);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < count; ++c) {
    try {
      out[c] = gaps_on_chord(f, k, chords[c]);
    } catch (...) {
      failures[c] = std::current_exception();
    }
  }

  // Same error the serial loop would raise first.
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace parallel

}  // namespace curvcmp::kernels
