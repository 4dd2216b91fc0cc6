#include <gtest/gtest.h>

#include <cmath>

#include "profile3/boundary.hpp"
#include "profile3/census.hpp"
#include "profile3/graphon.hpp"
#include "profile3/optimizer.hpp"

using namespace profile3;

namespace {

const double kAlphas[] = {2.05, 2.1, 2.2, 2.3, 2.4, 2.41};

// Sextic maximum written out independently of the library.
double sextic(double a) {
  return (-std::pow(a, 6) + 6 * std::pow(a, 5) - 9 * std::pow(a, 4) - 4 * std::pow(a, 3) + 96 * a - 80) /
         (144 * (a - 1));
}

// Third printed form of the maximum, in terms of sigma.
double sigma_form(double a) {
  const double s = (5 - (a - 1) * (a - 1)) / 12, r = std::sqrt(5 - 12 * s);
  return (24 * s * s * s - 18 * s * s + 6 * s + r - 1) / (2 * r);
}

FeasiblePoint random_point(Rng& rng) {
  const double u = rng.uniform(), v = rng.uniform();
  const double lo = std::min(u, v), hi = std::max(u, v);
  return {{lo, hi - lo, 1 - hi}, {0.5 + 0.5 * rng.uniform(), 0.5 + 0.5 * rng.uniform(), 0.5 + 0.5 * rng.uniform()}};
}

}  // namespace

TEST(Objective, Examples) {
  for (double a : kAlphas) {
    EXPECT_NEAR(objective_F({{1, 0, 0}, {1, 1, 1}}, a), -a, 1e-15);
    EXPECT_NEAR(objective_F({{1, 0, 0}, {0.5, 1, 1}}, a), (3 - a) / 4, 1e-15);
    EXPECT_NEAR(objective_F({{0, 0.5, 0.5}, {1, 0.5, 0.5}}, a), (9 - a) / 16, 1e-15);
  }
  // The complete graph: d1 - alpha d3 = -alpha.
  const auto d = graphon_densities(StepGraphon({1.0}, {{1.0}}));
  EXPECT_NEAR(d[1] - 2.2 * d[3], objective_F({{1, 0, 0}, {1, 1, 1}}, 2.2), 1e-15);
}

TEST(Objective, StationaryY) {
  for (double a : kAlphas) {
    EXPECT_NEAR(stationary_y(1 / (a + 1), a), 1.0, 1e-15);
    EXPECT_NEAR((1 / (1 / (a + 1) + 1e-15) - (3 - a)) / (2 * (a - 1)), 1.0, 1e-12);
    EXPECT_EQ(stationary_y(0.5, a), 0.5);
    EXPECT_NEAR((1 / 0.5 - (3 - a)) / (2 * (a - 1)), 0.5, 1e-15);
    EXPECT_EQ(stationary_y(0.0, a), 1.0);
    EXPECT_EQ(stationary_y(0.8, a), 0.5);
  }
  const double a = 2.2, x = 0.4, y = stationary_y(x, a);
  EXPECT_GT(y, 0.5);
  EXPECT_LT(y, 1.0);
  EXPECT_NEAR(x * x * x * (-3 * (3 - a) - 6 * (a - 1) * y) + 3 * x * x, 0.0, 1e-12);
  EXPECT_THROW(stationary_y(-0.1, a), DomainError);
}

TEST(ClosedForm, PrintedFormsAgree) {
  for (double a : {2.05, 2.2, 2.41, 2.001, 2.3}) {
    EXPECT_NEAR(closed_form_max(a), sextic(a), 1e-15);
    EXPECT_NEAR(closed_form_max(a), closed_form_max_via_hA(a), 1e-12) << a;
    EXPECT_NEAR(closed_form_max(a), sigma_form(a), 1e-12) << a;
  }
}

TEST(ClosedForm, Limits) {
  // alpha -> 2: sigma -> 1/3 and the value tends to g_t(1/9) - 2/9.
  EXPECT_NEAR(closed_form_max(2 + 1e-9), 2.0 / 3 - 2.0 / 9, 1e-7);
  // alpha -> 1 + sqrt 2: the optimum tends to four equal cliques.
  const double top = 1 + std::sqrt(2.0) - 1e-6;
  EXPECT_NEAR(optimum_sigma(top), 0.25, 1e-5);
  EXPECT_NEAR(closed_form_max(top), 9.0 / 16 - top / 16, 1e-5);
}

TEST(ClosedForm, RejectsClosedEndpoints) {
  EXPECT_THROW(closed_form_max(2.0), DomainError);
  EXPECT_THROW(closed_form_max(1 + std::sqrt(2.0)), DomainError);
  EXPECT_THROW(closed_form_max(2.5), DomainError);
  EXPECT_THROW(maximize_grid(2.5, 400, 1e-10), DomainError);
  EXPECT_THROW(analytic_candidates(1.9), DomainError);
  EXPECT_THROW(maximize_grid(2.2, 10, 1e-10), DomainError);
}

TEST(ClosedForm, TangentLineConsistency) {
  for (int i = 1; i < 40; ++i) {
    const double x = 1.0 / 16 + (1.0 / 9 - 1.0 / 16) * i / 40;
    const double a = g_t_prime(x);
    EXPECT_NEAR(closed_form_max(a), g_t(x) - a * x, 1e-9) << x;
  }
}

TEST(ClosedForm, DominatesRandomPoints) {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const double a = 2 + (std::sqrt(2.0) - 1) * (i + 0.5) / 20;
    const double m = closed_form_max(a);
    for (int t = 0; t < 20000; ++t) {
      const auto p = random_point(rng);
      ASSERT_TRUE(p.feasible(1e-12));
      ASSERT_LE(objective_F(p, a), m + 1e-9);
    }
  }
}

TEST(Candidates, PrintedValuesMatchF) {
  for (double a : kAlphas) {
    const auto list = analytic_candidates(a);
    ASSERT_GE(list.candidates.size(), 14u);
    for (const auto& c : list.candidates) {
      ASSERT_TRUE(c.point.feasible(1e-9)) << c.label;
      if (c.printed_value) { EXPECT_NEAR(c.value, *c.printed_value, 1e-12) << c.label << " at " << a; }
    }
  }
}

TEST(Candidates, OptimumAttainsMaximum) {
  for (double a : kAlphas) {
    const double m = closed_form_max(a);
    const double s = optimum_sigma(a);
    int optima = 0;
    for (const auto& c : analytic_candidates(a).candidates) {
      if (c.role == CandidateRole::Suboptimal) continue;
      EXPECT_NEAR(c.value, m, 1e-12) << c.label;
      if (c.role == CandidateRole::Optimum) {
        ++optima;
        EXPECT_NEAR(c.point.x[0], s, 1e-15);
        EXPECT_NEAR(c.point.y[2], (1 + delta_A(s)) / 2, 1e-12);
        EXPECT_TRUE(c.point.strict());
      } else {
        EXPECT_FALSE(c.point.strict());  // the flagged degenerate candidate
      }
    }
    EXPECT_EQ(optima, 1);
  }
}

TEST(Candidates, SuboptimalOnesAreBelow) {
  for (double a : kAlphas) {
    const double m = closed_form_max(a);
    for (const auto& c : analytic_candidates(a).candidates)
      if (c.role == CandidateRole::Suboptimal) { EXPECT_LT(c.value, m) << c.label << " at " << a; }
  }
  // Clear margin away from the top of the interval.
  for (double a : {2.05, 2.1, 2.2, 2.3}) {
    const double m = closed_form_max(a);
    for (const auto& c : analytic_candidates(a).candidates)
      if (c.role == CandidateRole::Suboptimal) { EXPECT_LT(c.value, m - 1e-6) << c.label << " at " << a; }
  }
}

TEST(Candidates, QuarterCandidatesApproachTheMaximum) {
  // (1/4, 1/4, 1/2) is the limit of the optimum as alpha -> 1 + sqrt 2, so its
  // gap (9 - alpha)/16 below the maximum closes to zero there.
  double prev = 1;
  for (double a : {2.3, 2.35, 2.4, 2.41, 2.414}) {
    const double gap = closed_form_max(a) - (9 - a) / 16;
    EXPECT_GT(gap, 0);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_LT(closed_form_max(2.41) - (9 - 2.41) / 16, 1e-6);
}

TEST(Stationarity, AtAnalyticOptimum) {
  for (double a : kAlphas) {
    const double s = optimum_sigma(a);
    const auto p = with_stationary_y({s, s, 1 - 2 * s}, a);
    EXPECT_LE(stationarity_residual(p, a), 1e-8) << a;
  }
  // A non-stationary point is detected.
  EXPECT_GT(stationarity_residual(with_stationary_y({0.2, 0.3, 0.5}, 2.2), 2.2), 1e-3);
}

TEST(Grid, AgreesWithClosedForm) {
  const auto r = maximize_grid(2.2, 400, 1e-10);
  EXPECT_NEAR(r.value, r.analytic_value, 1e-6);
  EXPECT_NEAR(r.relaxed_value, r.analytic_value, 1e-6);
  EXPECT_LE(r.value, r.analytic_value + 1e-9);
  EXPECT_TRUE(r.best.feasible(1e-12));
  EXPECT_TRUE(r.best.strict());
  const double s = optimum_sigma(2.2);
  EXPECT_NEAR(r.best.x[0], s, 1e-4);
  EXPECT_NEAR(r.best.x[1], s, 1e-4);
  EXPECT_NEAR(r.best.x[2], 1 - 2 * s, 1e-4);
  EXPECT_TRUE(std::is_sorted(r.best.x.begin(), r.best.x.end()));
  EXPECT_LE(r.stationarity_residual, 1e-6);
  EXPECT_FALSE(r.candidates.empty());
}
