#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "curvcmp/fitting.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace curvcmp;

namespace {

ChordSpec chord(double k, double t1, double t2, double a, double b) { return {t1, t2, a, b, Curvature(k)}; }

std::optional<FitResult> try_fit(const ChordSpec& spec) {
  try {
    return fit(spec);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(FitEuclidean, Examples) {
  const FitResult r = fit_euclidean(chord(0, 0, 1, 0.6, 0.8));
  EXPECT_NEAR(r.params.u(), 0.36, 1e-15);
  EXPECT_NEAR(r.params.v(), 0.48, 1e-15);
  const FitResult s = fit_euclidean(chord(0, 0, 2, std::sqrt(2.0), std::sqrt(2.0)));
  EXPECT_NEAR(s.params.u(), 1, 1e-15);
  EXPECT_NEAR(s.params.v(), 1, 1e-15);
  EXPECT_EQ(kind_of([] { fit_euclidean(chord(0, 0, 1, 0.25, 0.5)); }), ErrorKind::infeasible);
}

TEST(FitHyperbolic, Examples) {
  const FitResult r = fit_hyperbolic(chord(-1, 1, 2, 1, 2));
  EXPECT_NEAR(r.params.u(), 0, 1e-7);
  EXPECT_NEAR(r.params.v(), 1, 1e-12);
  const FitResult s = fit_hyperbolic(chord(-1, 0, 1, 0.6, 0.8));
  EXPECT_LE(std::abs(s.residual_t1), 1e-10);
  EXPECT_LE(std::abs(s.residual_t2), 1e-10);
  EXPECT_NEAR(eval_g(s.params, 0), 0.6, 1e-10);
  EXPECT_NEAR(eval_g(s.params, 1), 0.8, 1e-10);
  EXPECT_EQ(kind_of([] { fit_hyperbolic(chord(-1, 0, 1, 0.25, 0.5)); }), ErrorKind::infeasible);
}

TEST(FitSpherical, Examples) {
  const double h = std::numbers::pi / 2;
  const FitResult r = fit_spherical(chord(1, 0, h, h, h));
  EXPECT_NEAR(r.params.u(), 0, 1e-15);
  EXPECT_NEAR(r.params.v(), 0, 1e-15);
  for (double k : {1.0, 6.0}) {
    const FitResult s = fit_spherical(chord(k, 0, 1, 0.6, 0.8));
    EXPECT_NEAR(eval_g(s.params, 0), 0.6, 1e-10);
    EXPECT_NEAR(eval_g(s.params, 1), 0.8, 1e-10);
    EXPECT_LT(s.params.u() * s.params.u() + s.params.v() * s.params.v(), 1 / k);
  }
}

TEST(FitSpherical, Guards) {
  EXPECT_EQ(kind_of([] { fit_spherical(chord(1, -0.1, 1, 0.6, 0.8)); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { fit_spherical(chord(1, 0, 3.2, 2.0, 2.0)); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { fit_spherical(chord(1, 0, 1, 3.15, 3.0)); }), ErrorKind::domain);
}

TEST(Fit, DispatchAndArgumentErrors) {
  const FitResult e = fit(chord(0, 0, 1, 0.6, 0.8));
  const FitResult d = fit_euclidean(chord(0, 0, 1, 0.6, 0.8));
  EXPECT_EQ(e.params.u(), d.params.u());
  EXPECT_EQ(e.params.v(), d.params.v());
  EXPECT_EQ(kind_of([] { fit(chord(0, 1, 1, 0.6, 0.8)); }), ErrorKind::argument);
  EXPECT_EQ(kind_of([] { fit(chord(0, 2, 1, 0.6, 0.8)); }), ErrorKind::argument);
  EXPECT_EQ(kind_of([] { fit(chord(0, 0, 1, 0.0, 0.8)); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { fit(chord(0, 0, 1, NAN, 0.8)); }), ErrorKind::argument);
  EXPECT_EQ(kind_of([] { fit_hyperbolic(chord(0, 0, 1, 0.6, 0.8)); }), ErrorKind::argument);
}

TEST(Fit, DegenerateChords) {
  // alpha + beta = L is rejected for every sign, |alpha - beta| = L only for k >= 0.
  for (double k : {-1.0, 0.0, 1.0}) {
    EXPECT_EQ(kind_of([&] { fit(chord(k, 0, 1, 0.5, 0.5)); }), ErrorKind::infeasible) << k;
  }
  EXPECT_EQ(kind_of([] { fit(chord(0, 0, 1, 0.5, 1.5)); }), ErrorKind::infeasible);
  EXPECT_EQ(kind_of([] { fit(chord(1, 0, 1, 0.5, 1.5)); }), ErrorKind::infeasible);
  EXPECT_NO_THROW(fit(chord(-1, 0, 1, 0.5, 1.5)));
}

TEST(Fit, DefaultFigureLargestAndSmallestK) {
  for (double k : {6.0, -4000.0}) {
    const FitResult r = fit(chord(k, 0, 1, 0.6, 0.8));
    EXPECT_LE(std::abs(r.residual_t1), 1e-10 * 2.4) << k;
    EXPECT_LE(std::abs(r.residual_t2), 1e-10 * 2.4) << k;
  }
}

TEST(Fit, DefaultFigureMidpointsMatchOracleTable) {
  double previous = -1;
  auto values = oracle::figure_mid_values();
  std::reverse(values.begin(), values.end());  // increasing k
  for (const auto& [k, expected] : values) {
    const FitResult r = fit(chord(k, 0, 1, 0.6, 0.8));
    const double g = eval_g(r.params, 0.5);
    EXPECT_NEAR(g, expected, 1e-12) << k;
    EXPECT_GE(g, previous) << k;
    previous = g;
  }
}

TEST(Fit, AgreesWithStewartOracle) {
  std::mt19937_64 rng(7);
  auto U = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const double k = U(-8, 3);
    const double L = U(0.1, 1.0);
    const double t1 = U(0, 0.5);
    const double a = U(0.05, 1.0);
    const double b = U(0.05, 1.0);
    const ChordSpec spec = chord(k, t1, t1 + L, a, b);
    const std::optional<FitResult> r = try_fit(spec);
    if (!r) continue;
    ++checked;
    for (double f : {0.1, 0.37, 0.5, 0.81}) {
      const double t = t1 + f * L;
      EXPECT_NEAR(eval_g(r->params, t), oracle::chord(k, t1, t1 + L, a, b, t), 1e-9)
          << "k=" << k << " t1=" << t1 << " L=" << L << " a=" << a << " b=" << b;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Fit, RecoversParameters) {
  std::mt19937_64 rng(11);
  auto U = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  for (int i = 0; i < 600; ++i) {
    const int sign = i % 3 - 1;
    double k = 0, u = U(-1, 2), v = U(0.1, 1.5);
    if (sign < 0) {
      k = -U(0.1, 5);
      u = U(0, 1.5);
    } else if (sign > 0) {
      k = U(0.1, 4);
      const double r = U(0.05, 0.9) / std::sqrt(k);
      const double phi = U(0, 2 * std::numbers::pi);
      u = r * std::cos(phi);
      v = r * std::sin(phi);
    }
    const ComparisonParams p(Curvature(k), u, v);
    const double reach = sign > 0 ? 1.4 / std::sqrt(k) : 2.0;
    const double t1 = U(0, reach / 2);
    const double t2 = t1 + U(0.05, reach / 2);
    const FitResult r = fit(chord(k, t1, t2, eval_g(p, t1), eval_g(p, t2)));
    if (sign < 0) {
      EXPECT_NEAR(r.params.u() * r.params.u(), u * u, 1e-8);
    } else {
      EXPECT_NEAR(r.params.u(), u, 1e-8);
    }
    EXPECT_NEAR(r.params.v(), v, 1e-8) << "k=" << k << " u=" << u << " v=" << v;
  }
}
