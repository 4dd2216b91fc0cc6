#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "profile3/error.hpp"

namespace profile3 {

inline constexpr double kBisectTol = 1e-12;

// C(n,2) and C(n,3) in 64-bit; exact for n < 2^21.
constexpr std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

constexpr std::uint64_t choose3(std::uint64_t n) {
  if (n < 3) return 0;
  // Divide early so the product stays in range.
  std::uint64_t a = n, b = n - 1, c = n - 2;
  if (a % 2 == 0) a /= 2; else b /= 2;
  if (a % 3 == 0) a /= 3; else if (b % 3 == 0) b /= 3; else c /= 3;
  return a * b * c;
}

/// Smallest point of [lo, hi] (to within tol) where a nondecreasing f reaches
/// target. Returns the midpoint of the final bracket.
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi, double tol = kBisectTol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

inline void require_in(double v, double lo, double hi, const char* name) {
  require_finite(v, name);
  if (v < lo || v > hi) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s = %.17g outside [%.17g, %.17g]", name, v, lo, hi);
    throw DomainError(buf);
  }
}

// 17 significant digits; round-trips every double.
inline std::string fmt17(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Floor with a relative guard so products like (1/3)*999 land on 333.
inline std::int64_t guarded_floor(double v) {
  return static_cast<std::int64_t>(std::floor(v + 1e-9 * std::max(1.0, std::fabs(v))));
}

inline std::int64_t guarded_ceil(double v) {
  return static_cast<std::int64_t>(std::ceil(v - 1e-9 * std::max(1.0, std::fabs(v))));
}

}  // namespace profile3
