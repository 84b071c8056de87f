#include "curvcmp/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "curvcmp/error.hpp"

namespace curvcmp {

SampledFunction::SampledFunction(std::vector<double> ts, std::vector<double> gs)
    : ts_(std::move(ts)), gs_(std::move(gs)) {
  if (ts_.size() != gs_.size()) {
    throw Error(ErrorKind::argument, "grid and values differ in length");
  }
  if (ts_.size() < 2) {
    throw Error(ErrorKind::grid, "a sampled function needs at least two nodes");
  }
  for (std::size_t i = 0; i < ts_.size(); ++i) {
    if (!std::isfinite(ts_[i]) || !std::isfinite(gs_[i])) {
      throw Error(ErrorKind::argument, "non-finite sample at node " + std::to_string(i));
    }
    if (gs_[i] < 0.0) {
      throw Error(ErrorKind::domain, "negative sample value at node " + std::to_string(i));
    }
    if (i > 0) {
      if (!(ts_[i] > ts_[i - 1])) {
        throw Error(ErrorKind::grid, "grid not strictly increasing at node " + std::to_string(i));
      }
      max_spacing_ = std::max(max_spacing_, ts_[i] - ts_[i - 1]);
    }
  }
  const auto [lo, hi] = std::minmax_element(gs_.begin(), gs_.end());
  min_value_ = *lo;
  max_value_ = *hi;
}

std::optional<double> SampledFunction::uniform_step(double rel_tol) const {
  const double h = (b() - a()) / static_cast<double>(size() - 1);
  for (std::size_t i = 1; i < size(); ++i) {
    if (std::abs((ts_[i] - ts_[i - 1]) - h) > rel_tol * h) return std::nullopt;
  }
  return h;
}

std::optional<std::size_t> SampledFunction::node_index(double t) const {
  const auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
  const double slack = 1e-12 * (1.0 + std::abs(t));
  for (auto cand : {it, it == ts_.begin() ? it : it - 1}) {
    if (cand != ts_.end() && std::abs(*cand - t) <= slack) {
      return static_cast<std::size_t>(cand - ts_.begin());
    }
  }
  return std::nullopt;
}

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::grid, "a grid needs at least two nodes");
  if (!(a < b)) throw Error(ErrorKind::argument, "grid needs a < b");
  std::vector<double> ts(n);
  const double span = b - a;
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    ts[i] = a + span * (static_cast<double>(i) / last);
  }
  ts.back() = b;
  return ts;
}

SampledFunction resample_uniform(const SampledFunction& f, std::size_t n) {
  std::vector<double> ts = uniform_grid(f.a(), f.b(), n);
  std::vector<double> gs(n);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (seg + 2 < f.size() && f.t(seg + 1) < ts[i]) ++seg;
    const double w = (ts[i] - f.t(seg)) / (f.t(seg + 1) - f.t(seg));
    gs[i] = std::max(0.0, (1.0 - w) * f.g(seg) + w * f.g(seg + 1));
  }
  gs.front() = f.g(0);
  gs.back() = f.g(f.size() - 1);
  return {std::move(ts), std::move(gs)};
}

}  // namespace curvcmp
