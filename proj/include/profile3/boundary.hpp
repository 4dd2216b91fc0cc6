#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profile3/error.hpp"
#include "profile3/numeric.hpp"

namespace profile3 {

// ---------------------------------------------------------------------------
// Minimum triangle density for a given edge density.

// Part structure of the extremal complete multipartite graph at edge density
// d_e in [1/2, 1): k - 1 parts of size (1-z)/(k-1) and one part of size z.
struct PartStructure {
  std::int64_t k = 2;
  double z = 0.5;
};

/// k is the smallest integer >= 2 with d_e <= 1 - 1/k; z in (0, 1/k] solves
/// (1-z)(kz+k-2)/(k-1) = d_e, i.e. z = (1 - sqrt((k-1)(k-1-k d_e))) / k.
inline PartStructure razborov_structure(double d_e) {
  require_in(d_e, 0.5, 1.0, "edge density");
  if (d_e >= 1.0) throw DomainError("edge density must be < 1 for a part structure");
  auto k = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(1.0 / (1.0 - d_e))));
  auto fits = [&](std::int64_t kk) { return d_e <= 1.0 - 1.0 / static_cast<double>(kk); };
  while (!fits(k)) ++k;
  while (k > 2 && fits(k - 1)) --k;
  const double kd = static_cast<double>(k);
  const double radicand = std::max(0.0, (kd - 1.0) * (kd - 1.0 - kd * d_e));
  return {k, (1.0 - std::sqrt(radicand)) / kd};
}

inline double g_R(double d_e) {
  require_in(d_e, 0.0, 1.0, "edge density");
  if (d_e <= 0.5) return 0.0;
  if (d_e >= 1.0) return 1.0;
  const auto [k, z] = razborov_structure(d_e);
  const double kd = static_cast<double>(k);
  return (1 - z) * (1 - z) * (kd - 2) * (2 * z * kd + kd - 3) / ((kd - 1) * (kd - 1));
}

/// Inverse of g_R restricted to [1/2, 1].
inline double g_R_inverse(double t) {
  require_in(t, 0.0, 1.0, "triangle density");
  if (t == 0.0) return 0.5;
  if (t == 1.0) return 1.0;
  return bisect_increasing([](double d) { return g_R(d); }, t, 0.5, 1.0);
}

// ---------------------------------------------------------------------------
// Co-cherry / triangle curves.

inline double delta_A(double sigma) {
  require_in(sigma, 0.25, 1.0 / 3.0, "sigma");
  return (4 * sigma - 1) / ((1 - 2 * sigma) * std::sqrt(5 - 12 * sigma));
}

// (co-cherry, triangle) densities of the concave-regime construction.
inline std::pair<double, double> h_A(double sigma) {
  require_in(sigma, 0.25, 1.0 / 3.0, "sigma");
  const double s = sigma, s2 = s * s, s3 = s2 * s;
  const double r = std::sqrt(5 - 12 * s);
  const double h1 =
      (9 - 48 * s + 114 * s2 - 120 * s3 + 3 * (1 - 2 * s) * (4 * s - 1) * (4 * s - 1) * r) / (10 - 24 * s);
  const double h3 = (2 - 18 * s + 57 * s2 - 60 * s3) / (5 - 12 * s);
  return {h1, h3};
}

// (co-cherry, triangle) densities of three cliques of sizes sigma, sigma, 1-2 sigma.
inline std::pair<double, double> h_B(double sigma) {
  require_in(sigma, 1.0 / 3.0, 0.5, "sigma");
  const double s = sigma, s2 = s * s, s3 = s2 * s;
  return {6 * s - 18 * s2 + 18 * s3, 1 - 6 * s + 12 * s2 - 6 * s3};
}

// Values that overshoot an end by rounding (h_B(1/3) lands just below 1/9) are
// clamped.
inline constexpr double kEndSlack = 1e-12;

inline double h_A3_inverse(double x) {
  require_in(x, 1.0 / 16.0 - kEndSlack, 1.0 / 9.0 + kEndSlack, "triangle density");
  x = std::clamp(x, 1.0 / 16.0, 1.0 / 9.0);
  if (x == 1.0 / 16.0) return 0.25;
  if (x == 1.0 / 9.0) return 1.0 / 3.0;
  return bisect_increasing([](double s) { return h_A(s).second; }, x, 0.25, 1.0 / 3.0);
}

inline double h_B3_inverse(double x) {
  require_in(x, 1.0 / 9.0 - kEndSlack, 0.25 + kEndSlack, "triangle density");
  x = std::clamp(x, 1.0 / 9.0, 0.25);
  if (x == 1.0 / 9.0) return 1.0 / 3.0;
  if (x == 0.25) return 0.5;
  return bisect_increasing([](double s) { return h_B(s).second; }, x, 1.0 / 3.0, 0.5);
}

// Smooth pieces of the S13 upper curve, by triangle density.
enum class GtPiece { Linear, ConcaveHA, ConvexHB, UnitSum };

inline GtPiece g_t_piece(double x) {
  if (x <= 1.0 / 16.0) return GtPiece::Linear;
  if (x < 1.0 / 9.0) return GtPiece::ConcaveHA;
  if (x < 0.25) return GtPiece::ConvexHB;
  return GtPiece::UnitSum;
}

inline std::string_view to_string(GtPiece p) {
  switch (p) {
    case GtPiece::Linear: return "linear";
    case GtPiece::ConcaveHA: return "concave-hA";
    case GtPiece::ConvexHB: return "convex-hB";
    case GtPiece::UnitSum: return "unit-sum";
  }
  return "?";
}

/// Maximum co-cherry density at triangle density x.
inline double g_t(double x) {
  require_in(x, 0.0, 1.0, "triangle density");
  switch (g_t_piece(x)) {
    case GtPiece::Linear: return 3 * x + 3.0 / 8.0;
    case GtPiece::ConcaveHA: return h_A(h_A3_inverse(x)).first;
    case GtPiece::ConvexHB: return h_B(h_B3_inverse(x)).first;
    case GtPiece::UnitSum: return 1 - x;
  }
  return 0.0;
}

/// Derivative of g_t on the two curved pieces (open intervals only).
inline double g_t_prime(double x) {
  require_finite(x, "triangle density");
  if (x > 1.0 / 16.0 && x < 1.0 / 9.0) return 1 + std::sqrt(5 - 12 * h_A3_inverse(x));
  if (x > 1.0 / 9.0 && x < 0.25) {
    const double s = h_B3_inverse(x);
    return (6 - 36 * s + 54 * s * s) / (-6 + 24 * s - 18 * s * s);
  }
  throw DomainError("g_t' is defined only on (1/16,1/9) and (1/9,1/4)");
}

// ---------------------------------------------------------------------------
// Co-triangle / triangle upper curve.

// Root in [0,1] of 3a^2 - 2a^3 = d0.
inline double s03_alpha(double d0) {
  require_in(d0, 0.0, 1.0, "d0");
  if (d0 == 0.0) return 0.0;
  if (d0 == 1.0) return 1.0;
  return bisect_increasing([](double a) { return 3 * a * a - 2 * a * a * a; }, d0, 0.0, 1.0);
}

// Upper triangle density of the complement of a clique plus isolated vertices.
inline double s03_complement_branch(double d0) {
  require_in(d0, 0.0, 1.0, "d0");
  const double c = std::cbrt(d0);
  return (1 - c) * (1 - c) * (1 - c) + 3 * c * (1 - c) * (1 - c);
}

// Upper triangle density of a clique plus isolated vertices.
inline double s03_clique_branch(double d0) {
  const double a = s03_alpha(d0);
  return (1 - a) * (1 - a) * (1 - a);
}

inline double s03_upper(double d0) {
  require_in(d0, 0.0, 1.0, "d0");
  return std::max(s03_complement_branch(d0), s03_clique_branch(d0));
}

// ---------------------------------------------------------------------------
// Region membership.

enum class RegionId { S03, S12, S13, S23 };

inline std::string_view to_string(RegionId r) {
  switch (r) {
    case RegionId::S03: return "s03";
    case RegionId::S12: return "s12";
    case RegionId::S13: return "s13";
    case RegionId::S23: return "s23";
  }
  return "?";
}

inline std::optional<RegionId> parse_region(std::string_view s) {
  for (auto r : {RegionId::S03, RegionId::S12, RegionId::S13, RegionId::S23})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

// Density indices (i, j) of a region's coordinates.
inline std::pair<int, int> region_axes(RegionId r) {
  switch (r) {
    case RegionId::S03: return {0, 3};
    case RegionId::S12: return {1, 2};
    case RegionId::S13: return {1, 3};
    case RegionId::S23: return {2, 3};
  }
  return {0, 0};
}

inline constexpr double kDefaultMembershipTol = 1e-9;

struct MembershipVerdict {
  bool inside = false;
  double slack = 0.0;   // min over constraints of (rhs - lhs)
  std::string binding;  // tightest constraint
  double tol = kDefaultMembershipTol;

  bool on_boundary() const { return std::fabs(slack) <= tol; }
  std::string_view status() const { return !inside ? "outside" : on_boundary() ? "boundary" : "inside"; }
};

namespace detail {

class SlackTracker {
 public:
  void add(std::string_view name, double slack) {
    if (!have_ || slack < best_) {
      best_ = slack;
      name_ = name;
      have_ = true;
    }
  }
  MembershipVerdict verdict(double tol) const { return {best_ >= -tol, best_, name_, tol}; }

 private:
  bool have_ = false;
  double best_ = 0.0;
  std::string name_;
};

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace detail

/// Evaluates every defining inequality of the region at (x, y), where the
/// coordinates follow the region's index order (S13 takes (d1, d3)).
inline MembershipVerdict membership(RegionId region, double x, double y, double tol = kDefaultMembershipTol) {
  require_finite(x, "x");
  require_finite(y, "y");
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be finite and >= 0");
  detail::SlackTracker t;
  switch (region) {
    case RegionId::S12:
      t.add("d1>=0", x);
      t.add("d2>=0", y);
      t.add("d1+d2<=3/4", 0.75 - (x + y));
      break;
    case RegionId::S13: {
      const double d3 = detail::clamp01(y);
      t.add("d3>=0", y);
      t.add("d3<=1", 1 - y);
      t.add("d1>=0", x);
      t.add(to_string(g_t_piece(d3)), g_t(d3) - x);
      break;
    }
    case RegionId::S23:
      t.add("d2>=0", x);
      t.add("d3>=0", y);
      t.add("edge-triangle", 1.5 * (g_R_inverse(detail::clamp01(y)) - y) - x);
      break;
    case RegionId::S03: {
      const double d0 = detail::clamp01(x);
      t.add("d0>=0", x);
      t.add("d0<=1", 1 - x);
      t.add("d3>=0", y);
      t.add("Goodman d0+d3>=1/4", x + y - 0.25);
      const double comp = s03_complement_branch(d0), clique = s03_clique_branch(d0);
      t.add(comp >= clique ? "complement" : "clique-isolated", std::max(comp, clique) - y);
      break;
    }
  }
  return t.verdict(tol);
}

/// Membership for any ordered pair of distinct density indices. Pairs outside
/// the four stored regions are reduced by swapping coordinates and/or by
/// complementation (index k -> 3 - k).
inline MembershipVerdict membership_pair(int i, int j, double x, double y, double tol = kDefaultMembershipTol) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j) throw DomainError("density indices must be distinct in 0..3");
  for (auto r : {RegionId::S03, RegionId::S12, RegionId::S13, RegionId::S23}) {
    const auto [a, b] = region_axes(r);
    if (a == i && b == j) return membership(r, x, y, tol);
    if (a == j && b == i) return membership(r, y, x, tol);
    if (a == 3 - i && b == 3 - j) return membership(r, x, y, tol);
    if (a == 3 - j && b == 3 - i) return membership(r, y, x, tol);
  }
  throw DomainError("unreachable density pair");
}

// ---------------------------------------------------------------------------
// Boundary polylines.

struct BoundaryPoint {
  double param = 0.0;
  double x = 0.0;
  double y = 0.0;
  std::string branch;
};

namespace detail {

template <class F>
void sample_piece(std::vector<BoundaryPoint>& out, std::string_view branch, double from, double to, int count,
                  F&& eval) {
  for (int i = 0; i < count; ++i) {
    const double t = i + 1 == count ? to : from + (to - from) * i / (count - 1);
    const auto [x, y] = eval(t);
    out.push_back({t, x, y, std::string(branch)});
  }
}

// Crossing of the two branches of the S03 upper curve in the open interval.
inline double s03_crossover() {
  double lo = 1e-3, hi = 1.0 - 1e-3;
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    if (s03_complement_branch(mid) > s03_clique_branch(mid)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Closed boundary polyline of a region, one labelled run of at least count
/// points per smooth piece; consecutive runs share their junction point.
inline std::vector<BoundaryPoint> sample_boundary(RegionId region, int count) {
  if (count < 2) throw DomainError("need at least 2 samples per piece");
  std::vector<BoundaryPoint> out;
  auto line = [](double x0, double y0, double x1, double y1) {
    return [=](double t) { return std::pair{x0 + (x1 - x0) * t, y0 + (y1 - y0) * t}; };
  };
  switch (region) {
    case RegionId::S12:
      detail::sample_piece(out, "d2=0", 0, 1, count, line(0, 0, 0.75, 0));
      detail::sample_piece(out, "d1+d2=3/4", 0, 1, count, line(0.75, 0, 0, 0.75));
      detail::sample_piece(out, "d1=0", 0, 1, count, line(0, 0.75, 0, 0));
      break;
    case RegionId::S13:
      detail::sample_piece(out, "d1=0", 1, 0, count, [](double d3) { return std::pair{0.0, d3}; });
      detail::sample_piece(out, "d3=0", 0, 3.0 / 8, count, [](double d1) { return std::pair{d1, 0.0}; });
      detail::sample_piece(out, "linear", 0, 1.0 / 16, count,
                           [](double d3) { return std::pair{3 * d3 + 3.0 / 8, d3}; });
      detail::sample_piece(out, "concave-hA", 0.25, 1.0 / 3, count, [](double s) { return h_A(s); });
      detail::sample_piece(out, "convex-hB", 1.0 / 3, 0.5, count, [](double s) { return h_B(s); });
      detail::sample_piece(out, "unit-sum", 0.25, 1, count, [](double d3) { return std::pair{1 - d3, d3}; });
      break;
    case RegionId::S23:
      // Parametrised by edge density: (d2, d3) = (3/2 (d_e - g_R(d_e)), g_R(d_e)).
      detail::sample_piece(out, "edge-triangle", 0.5, 1, count, [](double de) {
        const double t = g_R(de);
        return std::pair{1.5 * (de - t), t};
      });
      detail::sample_piece(out, "d2=0", 1, 0, count, [](double d3) { return std::pair{0.0, d3}; });
      detail::sample_piece(out, "d3=0", 0, 0.75, count, [](double d2) { return std::pair{d2, 0.0}; });
      break;
    case RegionId::S03: {
      const double cross = detail::s03_crossover();
      detail::sample_piece(out, "Goodman", 0, 0.25, count, [](double d0) { return std::pair{d0, 0.25 - d0}; });
      detail::sample_piece(out, "d3=0", 0.25, 1, count, [](double d0) { return std::pair{d0, 0.0}; });
      detail::sample_piece(out, "clique-isolated", 1, cross, count,
                           [](double d0) { return std::pair{d0, s03_clique_branch(d0)}; });
      detail::sample_piece(out, "complement", cross, 0, count,
                           [](double d0) { return std::pair{d0, s03_complement_branch(d0)}; });
      detail::sample_piece(out, "d0=0", 1, 0.25, count, [](double d3) { return std::pair{0.0, d3}; });
      break;
    }
  }
  return out;
}

}  // namespace profile3
