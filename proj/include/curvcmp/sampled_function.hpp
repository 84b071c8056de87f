#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace curvcmp {

/// Samples of g: [a, b] -> R on a strictly increasing grid, g >= 0.
/// Between nodes the function is read as piecewise linear.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> ts, std::vector<double> gs);

  std::size_t size() const noexcept { return ts_.size(); }
  std::span<const double> ts() const noexcept { return ts_; }
  std::span<const double> gs() const noexcept { return gs_; }
  double t(std::size_t i) const { return ts_[i]; }
  double g(std::size_t i) const { return gs_[i]; }

  double a() const noexcept { return ts_.front(); }
  double b() const noexcept { return ts_.back(); }
  double min_value() const noexcept { return min_value_; }
  double max_value() const noexcept { return max_value_; }
  double max_spacing() const noexcept { return max_spacing_; }

  /// (b - a)/(n - 1) if every spacing matches it within rel_tol, else nullopt.
  std::optional<double> uniform_step(double rel_tol = 1e-9) const;

  /// Index of the node equal to t (within 1e-12 relative), or nullopt.
  std::optional<std::size_t> node_index(double t) const;

  friend bool operator==(const SampledFunction&, const SampledFunction&) = default;

 private:
  std::vector<double> ts_;
  std::vector<double> gs_;
  double min_value_ = 0.0;
  double max_value_ = 0.0;
  double max_spacing_ = 0.0;
};

/// Piecewise-linear resampling onto a uniform grid of n nodes over [a, b].
SampledFunction resample_uniform(const SampledFunction& f, std::size_t n);

/// Uniform grid of n >= 2 nodes with both endpoints exact.
std::vector<double> uniform_grid(double a, double b, std::size_t n);

}  // namespace curvcmp
