#include <gtest/gtest.h>

#include <limits>

#include <cmath>
#include <numbers>
#include <random>

#include "curvcmp/error.hpp"
#include "curvcmp/model_spaces.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace curvcmp;

namespace {

ComparisonParams P(double k, double u, double v) { return {Curvature(k), u, v}; }

struct RandomParams {
  std::mt19937_64 rng{20261014};

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

  ComparisonParams draw(CurvatureSign sign) {
    switch (sign) {
      case CurvatureSign::zero: return P(0.0, uniform(-2, 2), uniform(0.05, 2));
      case CurvatureSign::negative: return P(-uniform(0.05, 6), uniform(0, 2), uniform(0.05, 3));
      case CurvatureSign::positive: {
        const double k = uniform(0.05, 6);
        const double r = uniform(0, 0.95) / std::sqrt(k);
        const double phi = uniform(0, 2 * std::numbers::pi);
        return P(k, r * std::cos(phi), r * std::sin(phi));
      }
    }
    return P(0, 0, 1);
  }

  // Times kept where the spherical derivative stays away from its singular
  // configurations.
  double time(const ComparisonParams& p) {
    if (p.k().sign() == CurvatureSign::positive) return uniform(0.0, 1.4 / p.k().root());
    return uniform(-2, 2);
  }
};

}  // namespace

TEST(Curvature, ClassifiesAndRejectsNonFinite) {
  EXPECT_EQ(Curvature(-2).sign(), CurvatureSign::negative);
  EXPECT_EQ(Curvature(0).sign(), CurvatureSign::zero);
  EXPECT_EQ(Curvature(3).sign(), CurvatureSign::positive);
  EXPECT_DOUBLE_EQ(Curvature(-4).root(), 2.0);
  EXPECT_EQ(kind_of([] { Curvature(std::nan("")); }), ErrorKind::argument);
  EXPECT_EQ(kind_of([] { Curvature{INFINITY}; }), ErrorKind::argument);
}

TEST(ComparisonParams, EnforcesInvariants) {
  EXPECT_THROW(P(0, 0.1, 0.0), Error);
  EXPECT_THROW(P(-1, 0.1, -0.5), Error);
  EXPECT_THROW(P(1, 0.8, 0.8), Error);
  EXPECT_DOUBLE_EQ(P(-1, -0.3, 1).u(), 0.3);
  EXPECT_DOUBLE_EQ(P(0, -0.3, 1).u(), -0.3);
}

TEST(EvalG, Examples) {
  EXPECT_DOUBLE_EQ(eval_g(P(0, 0, 1), 0), 1.0);
  for (double t : {-2.0, 0.5, 3.0}) EXPECT_NEAR(eval_g(P(-1, 0, 1), t), std::abs(t), 1e-14);
  EXPECT_NEAR(eval_g(P(0, 0.36, 0.48), 0), 0.6, 1e-15);
  EXPECT_NEAR(eval_g(P(0, 0.36, 0.48), 1), 0.8, 1e-15);
  EXPECT_NEAR(eval_g(P(1, 0, 0), 0.3), std::numbers::pi / 2, 1e-15);
}

TEST(EvalG, MatchesNaiveClosedForms) {
  RandomParams gen;
  for (auto sign : {CurvatureSign::negative, CurvatureSign::zero, CurvatureSign::positive}) {
    for (int i = 0; i < 2000; ++i) {
      const ComparisonParams p = gen.draw(sign);
      const double t = gen.time(p);
      const double g = eval_g(p, t);
      EXPECT_NEAR(g, oracle::g(p.k().value(), p.u(), p.v(), t), 1e-9 * (1 + g));
      EXPECT_GE(g, 0.0);
    }
  }
}

TEST(EvalGPrime, Examples) {
  EXPECT_NEAR(eval_g_prime(P(0, 0, 1), 0), 0.0, 1e-15);
  EXPECT_NEAR(eval_g_prime(P(-1, 0, 1), 2), 1.0, 1e-12);
  const auto p = P(0, 0.36, 0.48);
  EXPECT_NEAR(eval_g_prime(p, 1), 0.8, 1e-15);
  EXPECT_NEAR(oracle::fd1([&](double t) { return eval_g(p, t); }, 1.0, 1e-6), 0.8, 1e-8);
}

TEST(EvalGPrime, SingularOnTheGeodesic) {
  EXPECT_EQ(kind_of([] { eval_g_prime(P(-1, 0, 1), 0); }), ErrorKind::singular);
}

TEST(EvalGSecond, Examples) {
  EXPECT_NEAR(eval_g_second(P(0, 0, 1), 0), 1.0, 1e-15);
  EXPECT_NEAR(eval_g_second(P(1, 0, 0), 0.7), 0.0, 1e-15);
  const auto p = P(0, 0.36, 0.48);
  EXPECT_NEAR(eval_g_second(p, 0.36), 1 / 0.48, 1e-12);
  EXPECT_NEAR(oracle::fd2([&](double t) { return eval_g(p, t); }, 0.36, 1e-4), 1 / 0.48, 1e-6);
}

TEST(Derivatives, AgreeWithFiniteDifferencesAndBound) {
  RandomParams gen;
  const double h = 1e-4;
  for (auto sign : {CurvatureSign::negative, CurvatureSign::zero, CurvatureSign::positive}) {
    for (int i = 0; i < 500; ++i) {
      const ComparisonParams p = gen.draw(sign);
      const double t = gen.time(p);
      const double g = eval_g(p, t);
      if (g < 0.05) continue;  // FD of a near-corner is not an oracle.
      auto f = [&](double x) { return eval_g(p, x); };
      const double gp = eval_g_prime(p, t);
      EXPECT_LE(std::abs(gp), 1 + 1e-12);
      EXPECT_NEAR(gp, oracle::fd1(f, t, 1e-6), 1e-6 / g);
      const double gpp = eval_g_second(p, t);
      // Truncation C h^2 plus the stencil's rounding, 4 ulp(g) / h^2.
      const double rounding = 16 * std::numeric_limits<double>::epsilon() * (1 + g) / (h * h);
      EXPECT_NEAR(oracle::fd2(f, t, h), gpp, 10 * h * h * (1 + std::abs(gpp)) / (g * g) + rounding)
          << "k=" << p.k().value() << " u=" << p.u() << " v=" << p.v() << " t=" << t;
      EXPECT_NEAR(gpp, (1 - gp * gp) * oracle::ct(p.k().value(), g), 1e-9 * (1 + std::abs(gpp)));
    }
  }
}

TEST(Rhs, Examples) {
  EXPECT_DOUBLE_EQ(rhs(Curvature(0), 0.5, 0), 2.0);
  EXPECT_NEAR(rhs(Curvature(1), std::numbers::pi / 2, 0.3), 0.0, 1e-15);
  EXPECT_NEAR(rhs(Curvature(1e-12), 0.7, 0.2), (1 - 0.04) / 0.7, 1e-9);
  EXPECT_NEAR(rhs(Curvature(-1e-12), 0.7, 0.2), (1 - 0.04) / 0.7, 1e-9);
}

TEST(Rhs, SeriesBranchIsContinuous) {
  for (double g : {0.01, 0.3, 2.0}) {
    for (double k : {-1e-6, -1e-9, 1e-9, 1e-6}) {
      EXPECT_NEAR(generalized_cot(Curvature(k), g), oracle::ct(k, g), 1e-10 * oracle::ct(k, g));
    }
  }
}

TEST(Rhs, NonincreasingInK) {
  const std::vector<double> ks = {-50, -10, -3, -1, -0.2, -1e-10, 0, 1e-10, 0.2, 1, 2, 3};
  for (double g : {0.1, 0.5, 0.85}) {
    for (double gp : {-0.9, 0.0, 0.5}) {
      for (std::size_t i = 1; i < ks.size(); ++i) {
        EXPECT_GE(rhs(Curvature(ks[i - 1]), g, gp), rhs(Curvature(ks[i]), g, gp));
      }
    }
  }
}

TEST(Rhs, DomainErrors) {
  EXPECT_EQ(kind_of([] { rhs(Curvature(0), 0.0, 0.1); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { rhs(Curvature(-1), -0.1, 0.1); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { rhs(Curvature(1), 3.2, 0.1); }), ErrorKind::domain);
}

TEST(GeodesicPoint, Examples) {
  const ModelPoint e = geodesic_point(Curvature(0), 3);
  EXPECT_EQ(e.dimension(), 2u);
  EXPECT_DOUBLE_EQ(e[0], 3);
  EXPECT_DOUBLE_EQ(e[1], 0);
  const ModelPoint h = geodesic_point(Curvature(-1), 0);
  EXPECT_DOUBLE_EQ(h[0], 0);
  EXPECT_DOUBLE_EQ(h[1], 1);
  const ModelPoint s = geodesic_point(Curvature(4), std::numbers::pi / 4);
  EXPECT_EQ(s.dimension(), 3u);
  EXPECT_NEAR(s[0], 0, 1e-16);
  EXPECT_NEAR(s[1], 0.5, 1e-16);
  EXPECT_DOUBLE_EQ(s[2], 0);
  EXPECT_EQ(kind_of([] { geodesic_point(Curvature(1), -0.1); }), ErrorKind::argument);
}

TEST(GeodesicPoint, UnitSpeed) {
  for (double k : {-3.0, 0.0, 2.0}) {
    const Curvature c(k);
    const double d = model_distance(c, geodesic_point(c, 0.2), geodesic_point(c, 0.9));
    EXPECT_NEAR(d, 0.7, 1e-13) << k;
  }
}

TEST(ComparisonPoint, Examples) {
  const ModelPoint a = comparison_point(P(0, 2, 5));
  EXPECT_DOUBLE_EQ(a[0], 2);
  EXPECT_DOUBLE_EQ(a[1], 5);
  const ModelPoint b = comparison_point(P(1, 0, 0));
  EXPECT_EQ(b.dimension(), 3u);
  EXPECT_DOUBLE_EQ(b[2], 1);
  const ModelPoint c = comparison_point(P(-1, 0.3, 0.4));
  EXPECT_DOUBLE_EQ(c[0], 0.3);
  EXPECT_DOUBLE_EQ(c[1], 0.4);
}

TEST(ModelDistance, Examples) {
  EXPECT_DOUBLE_EQ(model_distance(Curvature(0), {0, 0}, {3, 4}), 5);
  EXPECT_NEAR(model_distance(Curvature(-1), {0, 1}, {0, std::exp(1.0)}), 1, 1e-15);
  EXPECT_NEAR(model_distance(Curvature(1), {1, 0, 0}, {0, 1, 0}), std::numbers::pi / 2, 1e-15);
}

TEST(ModelDistance, ChartErrors) {
  EXPECT_EQ(kind_of([] { model_distance(Curvature(-1), {0, 1}, {0, -1}); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { model_distance(Curvature(1), {1, 0, 0}, {0, 2, 0}); }), ErrorKind::domain);
  EXPECT_THROW(model_distance(Curvature(1), {1, 0}, {0, 1}), Error);
  EXPECT_THROW(model_distance(Curvature(0), {1, 0, 0}, {0, 1, 0}), Error);
}

TEST(ModelDistance, ReflectedHemisphereGivesSameFunction) {
  const auto p = P(2, 0.2, 0.3);
  const ModelPoint c = comparison_point(p);
  const ModelPoint mirrored(c[0], c[1], -c[2]);
  for (double t : {0.1, 0.5, 1.0}) {
    const ModelPoint q = geodesic_point(p.k(), t);
    EXPECT_NEAR(model_distance(p.k(), c, q), model_distance(p.k(), mirrored, q), 1e-14);
  }
}

TEST(GeometricConsistency, EvalMatchesDistance) {
  RandomParams gen;
  for (auto sign : {CurvatureSign::negative, CurvatureSign::zero, CurvatureSign::positive}) {
    for (int i = 0; i < 2000; ++i) {
      const ComparisonParams p = gen.draw(sign);
      const double t = gen.time(p);
      const double g = eval_g(p, t);
      const double d = model_distance(p.k(), comparison_point(p), geodesic_point(p.k(), t));
      EXPECT_NEAR(g, d, 1e-10 * (1 + g));
    }
  }
}

TEST(EvalG, NonexpandingAndTwoPointBound) {
  RandomParams gen;
  for (auto sign : {CurvatureSign::negative, CurvatureSign::zero, CurvatureSign::positive}) {
    for (int i = 0; i < 1000; ++i) {
      const ComparisonParams p = gen.draw(sign);
      const double t1 = gen.time(p);
      const double t2 = gen.time(p);
      const double g1 = eval_g(p, t1);
      const double g2 = eval_g(p, t2);
      EXPECT_LE(std::abs(g1 - g2), std::abs(t1 - t2) + 1e-12);
      EXPECT_LE(std::abs(t1 - t2), g1 + g2 + 1e-12);
    }
  }
}

TEST(EvalG, SphericalNearAntipode) {
  EXPECT_NEAR(eval_g(P(1, 0.999999, 0), std::numbers::pi), std::numbers::pi - std::acos(0.999999), 1e-9);
}
