#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profile3/boundary.hpp"
#include "profile3/error.hpp"
#include "profile3/numeric.hpp"

namespace profile3 {

// Maximization of d(H_1) - alpha d(H_3) over the three-component structures
// with x_j the component masses and y_j the within-component parameters.

inline constexpr double kAlphaLo = 2.0;
inline const double kAlphaHi = 1.0 + std::sqrt(2.0);

inline void require_alpha(double alpha) {
  require_finite(alpha, "alpha");
  if (!(alpha > kAlphaLo && alpha < kAlphaHi))
    throw DomainError("alpha = " + fmt17(alpha) + " outside the open interval (2, 1+sqrt(2)) = (2, " +
                      fmt17(kAlphaHi) + ")");
}

struct FeasiblePoint {
  std::array<double, 3> x{};
  std::array<double, 3> y{};

  // x_j >= 0, sum x_j = 1 and y_j in [1/2, 1].
  bool feasible(double tol = 1e-12) const {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) {
      if (x[j] < -tol || y[j] < 0.5 - tol || y[j] > 1.0 + tol) return false;
      s += x[j];
    }
    return std::fabs(s - 1.0) <= tol;
  }
  // Every y_j strictly above 1/2.
  bool strict(double margin = 1e-9) const {
    return std::all_of(y.begin(), y.end(), [&](double v) { return v > 0.5 + margin; });
  }
};

inline double objective_F(const FeasiblePoint& p, double alpha) {
  double f = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double x = p.x[j], y = p.y[j], x2 = x * x;
    f += x2 * x * (3 - alpha - 3 * (3 - alpha) * y - 3 * (alpha - 1) * y * y) + 3 * x2 * y;
  }
  return f;
}

/// Maximizer over [1/2, 1] of the j-th summand of F for fixed x_j.
inline double stationary_y(double xj, double alpha) {
  if (xj < 0.0) throw DomainError("x_j must be >= 0");
  if (xj <= 1.0 / (alpha + 1.0)) return 1.0;
  if (xj >= 0.5) return 0.5;
  return (1.0 / xj - (3.0 - alpha)) / (2.0 * (alpha - 1.0));
}

inline FeasiblePoint with_stationary_y(const std::array<double, 3>& x, double alpha) {
  FeasiblePoint p{x, {}};
  for (int j = 0; j < 3; ++j) p.y[j] = stationary_y(std::max(0.0, x[j]), alpha);
  return p;
}

// F with y eliminated.
inline double reduced_F(const std::array<double, 3>& x, double alpha) {
  return objective_F(with_stationary_y(x, alpha), alpha);
}

inline double optimum_sigma(double alpha) {
  require_alpha(alpha);
  return (5.0 - (alpha - 1) * (alpha - 1)) / 12.0;
}

inline double closed_form_max(double alpha) {
  require_alpha(alpha);
  const double a = alpha, a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
  return (-a6 + 6 * a5 - 9 * a4 - 4 * a3 + 96 * a - 80) / (144 * (a - 1));
}

// h_{A,1}(sigma) - alpha h_{A,3}(sigma) at the optimal sigma.
inline double closed_form_max_via_hA(double alpha) {
  const auto [h1, h3] = h_A(optimum_sigma(alpha));
  return h1 - alpha * h3;
}

// ---------------------------------------------------------------------------
// Candidates from the case analysis.

enum class CandidateRole { Optimum, DegenerateOptimum, Suboptimal };

inline std::string_view to_string(CandidateRole r) {
  switch (r) {
    case CandidateRole::Optimum: return "optimum";
    case CandidateRole::DegenerateOptimum: return "degenerate-optimum";
    case CandidateRole::Suboptimal: return "suboptimal";
  }
  return "?";
}

struct Candidate {
  std::string label;
  FeasiblePoint point;
  double value = 0.0;                  // F at point
  std::optional<double> printed_value;  // closed form stated for the case
  CandidateRole role = CandidateRole::Suboptimal;
};

struct CandidateList {
  std::vector<Candidate> candidates;
  std::vector<std::string> dropped;  // labels with no feasible real branch
};

inline CandidateList analytic_candidates(double alpha) {
  require_alpha(alpha);
  const double a = alpha, a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
  const double inv = 1.0 / (a + 1);
  CandidateList out;
  auto add = [&](std::string label, std::array<double, 3> x, std::optional<double> printed,
                 CandidateRole role = CandidateRole::Suboptimal) {
    const double sum = x[0] + x[1] + x[2];
    const bool ok = std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v) && v >= -1e-12; }) &&
                    std::fabs(sum - 1.0) <= 1e-9;
    if (!ok) {
      out.dropped.push_back(std::move(label));
      return;
    }
    for (double& v : x) v = std::max(0.0, v);
    const auto p = with_stationary_y(x, alpha);
    out.candidates.push_back({std::move(label), p, objective_F(p, alpha), printed, role});
  };
  auto root = [](double r) { return r >= 0.0 ? std::sqrt(r) : std::nan(""); };

  add("two-zero", {0, 0, 1}, (3 - a) / 4);
  add("one-zero, x2 = 1/3", {0, 1.0 / 3, 2.0 / 3}, std::nullopt);
  add("one-zero, x2 = 1/(a+1)", {0, inv, a * inv}, (-a4 + 3 * a3 + 6 * a2 + 8 * a) / (4 * std::pow(a + 1, 3)));
  add("one-zero, interior", {0, (a2 - 2 * a + 2) / 6, (-a2 + 2 * a + 4) / 6}, closed_form_max(a),
      CandidateRole::DegenerateOptimum);
  add("one-zero, x2 = 1/2", {0, 0.5, 0.5}, (9 - a) / 16);
  add("x1 = x2 = 1/(a+1)", {inv, inv, (a - 1) * inv},
      (-a4 + 6 * a3 + 3 * a2 - 16 * a + 36) / (4 * std::pow(a + 1, 3)));
  add("x2 = 1/(a+1), x3 = 1/2", {(a - 1) / (2 * (a + 1)), inv, 0.5},
      (-5 * a3 + 35 * a2 - 11 * a + 45) / (32 * (a + 1) * (a + 1)));
  {
    const double r = root(4 * a6 - 8 * a5 - 39 * a4 + 84 * a3 + 74 * a2 - 196 * a + 97);
    const double q = std::pow(a + 1, 4);
    add("x2 = 1/(a+1), x3 < 1/2",
        {(-a4 + 3 * a3 + 15 * a2 + a - 10) / (3 * q) + r / (3 * std::pow(a + 1, 3)), inv,
         (4 * a4 + 6 * a3 - 6 * a2 + 2 * a + 10) / (3 * q) - r / (3 * std::pow(a + 1, 3))},
        std::nullopt);
  }
  {
    const double d = a2 + 4 * a + 3;
    add("x2 = 1/(a+1), x3 > 1/2", {(-a2 + a + 4) / d, inv, 2 * (a2 + a - 2) / d},
        (-a5 + a4 + 11 * a3 + 3 * a2 - 6 * a + 24) / ((a + 1) * (a + 1) * (a + 3) * (a + 3)));
  }
  add("x1 = 1/(a+1)", {inv, a / (2 * (a + 1)), a / (2 * (a + 1))},
      -a * (a4 - 10 * a3 - 3 * a2 - 20 * a + 20) / (16 * (a - 1) * std::pow(a + 1, 3)));
  add("x3 = 1/2, x1 = x2", {0.25, 0.25, 0.5}, (9 - a) / 16);
  {
    const double r = root(a4 - 8 * a3 + 23 * a2 - 22 * a + 10);
    add("x3 = 1/2, interior", {(-a2 - 2 * r + 10 * a - 5) / (6 * (a + 1) * (a + 1)),
                               (2 * a2 + r - 2 * a + 4) / (3 * (a + 1) * (a + 1)), 0.5},
        std::nullopt);
  }
  {
    const double s = optimum_sigma(a);
    add("x1 = x2 = sigma", {s, s, 1 - 2 * s}, closed_form_max(a), CandidateRole::Optimum);
  }
  {
    const double r = root(4 * a4 - 24 * a3 + 53 * a2 - 30 * a + 1);
    const double d = 3 * (5 * a2 + 10 * a - 11);
    for (int sign : {1, -1}) {
      const double x3 = (8 * a2 + 6 * a - 10 - sign * r) / d;
      add(sign > 0 ? "x2 = x3, + branch" : "x2 = x3, - branch",
          {(-a2 + 18 * a - 13 + sign * 2 * r) / d, x3, x3}, std::nullopt);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stationarity.

/// Projected KKT residual of F at p by central differences: spread of the
/// x-gradient over components with x_j > 0 (equal multipliers on the simplex),
/// plus the y-gradient, projected at the bounds 1/2 and 1.
inline double stationarity_residual(const FeasiblePoint& p, double alpha, double h = 1e-6) {
  auto partial = [&](bool in_x, int j) {
    FeasiblePoint up = p, dn = p;
    (in_x ? up.x : up.y)[j] += h;
    (in_x ? dn.x : dn.y)[j] -= h;
    return (objective_F(up, alpha) - objective_F(dn, alpha)) / (2 * h);
  };
  double residual = 0.0;
  std::vector<double> gx;
  for (int j = 0; j < 3; ++j)
    if (p.x[j] > 1e-12) gx.push_back(partial(true, j));
  if (!gx.empty()) {
    const double mean = std::accumulate(gx.begin(), gx.end(), 0.0) / static_cast<double>(gx.size());
    for (double g : gx) residual = std::max(residual, std::fabs(g - mean));
  }
  for (int j = 0; j < 3; ++j) {
    const double g = partial(false, j);
    double r = std::fabs(g);
    if (p.y[j] >= 1.0 - 1e-12) r = std::max(0.0, -g);
    else if (p.y[j] <= 0.5 + 1e-12) r = std::max(0.0, g);
    residual = std::max(residual, r);
  }
  return residual;
}

// ---------------------------------------------------------------------------
// Grid oracle.

struct OptimizationResult {
  FeasiblePoint best;         // best point with every x_j < 1/2 (all y_j > 1/2)
  double value = 0.0;
  FeasiblePoint relaxed_best;  // best point over the whole simplex
  double relaxed_value = 0.0;
  double analytic_value = 0.0;
  std::vector<Candidate> candidates;
  std::vector<std::string> dropped_candidates;
  double stationarity_residual = 0.0;
  std::size_t refine_sweeps = 0;
};

inline constexpr std::size_t kRefineCap = 10000;

namespace detail {

inline std::array<double, 3> sorted(std::array<double, 3> x) {
  std::sort(x.begin(), x.end());
  return x;
}

// Larger value wins; ties go to the lexicographically smaller sorted x.
inline bool better(double v, const std::array<double, 3>& x, double best_v, const std::array<double, 3>& best_x) {
  if (v != best_v) return v > best_v;
  return sorted(x) < sorted(best_x);
}

// Golden-section maximum of f on [lo, hi].
template <class F>
double golden_max(F&& f, double lo, double hi, double tol) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d; d = c; fd = fc;
      c = hi - g * (hi - lo); fc = f(c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + g * (hi - lo); fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

// Pairwise mass exchange x_j -> x_j - t, x_k -> x_k + t, polished by golden
// section inside a shrinking trust radius. cap_x bounds every coordinate.
inline std::pair<std::array<double, 3>, std::size_t> polish(std::array<double, 3> x, double alpha, double radius,
                                                             double tol, double cap_x) {
  double fx = reduced_F(x, alpha);
  std::size_t sweeps = 0;
  while (radius > tol) {
    if (++sweeps > kRefineCap)
      throw ConvergenceError("grid refinement did not converge within " + std::to_string(kRefineCap) + " sweeps");
    double moved = 0.0;
    for (auto [j, k] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const double lo = std::max({-radius, -x[k], x[j] - cap_x});
      const double hi = std::min({radius, x[j], cap_x - x[k]});
      if (!(hi > lo)) continue;
      auto at = [&](double t) {
        auto y = x;
        y[j] -= t;
        y[k] += t;
        return reduced_F(y, alpha);
      };
      const double t = golden_max(at, lo, hi, tol * 0.1);
      const double ft = at(t);
      if (ft > fx) {
        x[j] -= t;
        x[k] += t;
        fx = ft;
        moved = std::max(moved, std::fabs(t));
      }
    }
    if (moved < radius / 4) radius /= 2;
  }
  return {x, sweeps};
}

inline FeasiblePoint canonical(const std::array<double, 3>& x, double alpha) {
  return with_stationary_y(sorted(x), alpha);
}

}  // namespace detail

/// Exhaustive simplex grid with step 1/grid, y eliminated by stationary_y,
/// followed by a local polish of the best grid point. The strict optimum is
/// taken over points with every x_j < 1/2; the relaxed one over the simplex.
inline OptimizationResult maximize_grid(double alpha, int grid = 400, double refine_tol = 1e-10) {
  require_alpha(alpha);
  if (grid < 50) throw DomainError("grid must be at least 50");
  if (!(refine_tol > 0.0)) throw DomainError("refine tolerance must be positive");

  const double inf = -std::numeric_limits<double>::infinity();
  std::array<double, 3> strict_x{}, relaxed_x{};
  double strict_v = inf, relaxed_v = inf;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; i + j <= grid; ++j) {
      const std::array<double, 3> x{static_cast<double>(i) / grid, static_cast<double>(j) / grid,
                                    static_cast<double>(grid - i - j) / grid};
      const double v = reduced_F(x, alpha);
      if (detail::better(v, x, relaxed_v, relaxed_x)) relaxed_v = v, relaxed_x = x;
      if (std::all_of(x.begin(), x.end(), [](double t) { return t < 0.5; }) &&
          detail::better(v, x, strict_v, strict_x))
        strict_v = v, strict_x = x;
    }

  const double radius = 2.0 / grid;
  auto [sx, s_sweeps] = detail::polish(strict_x, alpha, radius, refine_tol, 0.5 - 1e-12);
  auto [rx, r_sweeps] = detail::polish(relaxed_x, alpha, radius, refine_tol, 1.0);

  OptimizationResult r;
  r.best = detail::canonical(sx, alpha);
  r.value = objective_F(r.best, alpha);
  r.relaxed_best = detail::canonical(rx, alpha);
  r.relaxed_value = objective_F(r.relaxed_best, alpha);
  r.analytic_value = closed_form_max(alpha);
  auto cands = analytic_candidates(alpha);
  r.candidates = std::move(cands.candidates);
  r.dropped_candidates = std::move(cands.dropped);
  r.stationarity_residual = stationarity_residual(r.best, alpha);
  r.refine_sweeps = s_sweeps + r_sweeps;
  return r;
}

}  // namespace profile3
