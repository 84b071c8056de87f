#include <array>
#include <cmath>

#include "curvcmp/kernels.hpp"

namespace curvcmp::kernels {

namespace {

struct Stencil {
  int half;
  std::array<double, 7> first;   // scaled by 1/h
  std::array<double, 7> second;  // scaled by 1/h^2
};

// Centered coefficients, entries [0, 2*half] used.
constexpr Stencil kOrder2{1, {-0.5, 0.0, 0.5}, {1.0, -2.0, 1.0}};
constexpr Stencil kOrder4{2,
                          {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12},
                          {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12}};
constexpr Stencil kOrder6{3,
                          {-1.0 / 60, 9.0 / 60, -45.0 / 60, 0.0, 45.0 / 60, -9.0 / 60, 1.0 / 60},
                          {2.0 / 180, -27.0 / 180, 270.0 / 180, -490.0 / 180, 270.0 / 180,
                           -27.0 / 180, 2.0 / 180}};

const Stencil& stencil_for(int order) {
  switch (order) {
    case 4: return kOrder4;
    case 6: return kOrder6;
    default: return kOrder2;
  }
}

inline void residual_at(std::span<const double> gs, double h, Curvature k, const Stencil& st,
                        std::size_t i, StencilOut out) {
  const std::size_t centre = i + static_cast<std::size_t>(st.half);
  double d1 = 0.0;
  double d2 = 0.0;
  for (int j = 0; j <= 2 * st.half; ++j) {
    const double g = gs[i + static_cast<std::size_t>(j)];
    d1 += st.first[static_cast<std::size_t>(j)] * g;
    d2 += st.second[static_cast<std::size_t>(j)] * g;
  }
  d1 /= h;
  d2 /= h * h;
  out.second[i] = d2;
  out.residuals[i] = d2 - (1.0 - d1) * (1.0 + d1) * detail::generalized_cot_unchecked(k, gs[centre]);
}

}  // namespace

bool valid_stencil_order(int order) noexcept { return order == 2 || order == 4 || order == 6; }

namespace serial {

void stencil_residuals(std::span<const double> gs, double h, Curvature k, int order, StencilOut out) {
  const Stencil& st = stencil_for(order);
  const std::size_t count = gs.size() - static_cast<std::size_t>(2 * st.half);
  for (std::size_t i = 0; i < count; ++i) residual_at(gs, h, k, st, i, out);
}

}  // namespace serial

namespace parallel {

void stencil_residuals(std::span<const double> gs, double h, Curvature k, int order, StencilOut out) {
  const Stencil& st = stencil_for(order);
  const std::size_t count = gs.size() - static_cast<std::size_t>(2 * st.half);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < count; ++i) residual_at(gs, h, k, st, i, out);
}

}  // namespace parallel

}  // namespace curvcmp::kernels
