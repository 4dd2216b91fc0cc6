#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "profile3/boundary.hpp"
#include "profile3/census.hpp"
#include "profile3/constructions.hpp"
#include "profile3/graph.hpp"
#include "profile3/graphon.hpp"
#include "profile3/optimizer.hpp"

// Desk-scale invariant suites behind `profile3 verify`.

namespace profile3::verify {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  double measured = 0.0;  // worst observed slack or error
};

namespace detail {

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// k = 3 closed form of the minimum triangle density, for d_e in [1/2, 2/3].
inline double g_R_three_parts(double d) {
  const double r = std::sqrt(4 - 6 * d);
  return (1 - r) * (2 + r) * (2 + r) / 18;
}

}  // namespace detail

inline std::vector<Check> census_suite() {
  std::vector<Check> out;
  Rng rng(20240601);
  const double probs[] = {0.05, 0.3, 0.5, 0.8, 1.0};
  std::size_t mismatches = 0, sum_bad = 0, edge_bad = 0, comp_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + i % 58;
    const Graph g = detail::random_graph(n, probs[i % 5], rng);
    const auto fast = census_fast(g);
    if (!(fast == census_brute(g))) ++mismatches;
    if (fast.total() != choose3(n)) ++sum_bad;
    if (fast.c[1] + 2 * fast.c[2] + 3 * fast.c[3] != g.m() * (n - 2)) ++edge_bad;
    if (!(census_fast(g.complement()) == fast.complemented())) ++comp_bad;
  }
  out.push_back({"census", "fast equals brute force (1000 graphs, n <= 60)", mismatches == 0, double(mismatches)});
  out.push_back({"census", "counts sum to C(n,3)", sum_bad == 0, double(sum_bad)});
  out.push_back({"census", "c1 + 2 c2 + 3 c3 = m (n-2)", edge_bad == 0, double(edge_bad)});
  out.push_back({"census", "complement reverses the census", comp_bad == 0, double(comp_bad)});
  return out;
}

inline std::vector<Check> boundary_suite() {
  std::vector<Check> out;
  double worst = 0.0;
  for (int k = 2; k <= 10; ++k) {
    const double b = 1.0 - 1.0 / k;
    worst = std::max(worst, std::fabs(g_R(b - 1e-8) - g_R(b + 1e-8)));
  }
  out.push_back({"boundary", "g_R continuous at 1-1/k, k = 2..10", worst <= 1e-6, worst});

  worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double d = 0.5 + (2.0 / 3 - 0.5) * i / 1000;
    worst = std::max(worst, std::fabs(g_R(d) - detail::g_R_three_parts(d)));
  }
  out.push_back({"boundary", "g_R matches the three-part closed form", worst <= 1e-12, worst});

  worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double t = i / 500.0;
    worst = std::max(worst, std::fabs(g_R(g_R_inverse(t)) - t));
  }
  out.push_back({"boundary", "g_R round trip", worst <= 1e-9, worst});

  worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double sa = 0.25 + (1.0 / 12) * i / 200, sb = 1.0 / 3 + (1.0 / 6) * i / 200;
    worst = std::max(worst, std::fabs(h_A3_inverse(h_A(sa).second) - sa));
    worst = std::max(worst, std::fabs(h_B3_inverse(h_B(sb).second) - sb));
  }
  out.push_back({"boundary", "h_A3 / h_B3 round trips", worst <= 1e-9, worst});

  worst = std::max({std::fabs(g_t(1.0 / 16) - 9.0 / 16), std::fabs(g_t(1.0 / 9) - 2.0 / 3),
                    std::fabs(g_t(0.25) - 0.75)});
  for (double j : {1.0 / 16, 1.0 / 9, 0.25})
    worst = std::max(worst, std::fabs(g_t(j - 1e-12) - g_t(j + 1e-12)));
  out.push_back({"boundary", "g_t junction values and continuity", worst <= 1e-9, worst});

  double margin = 1.0;
  for (int i = 1; i < 1000; ++i) {
    const double xa = 1.0 / 16 + (1.0 / 9 - 1.0 / 16) * i / 1000;
    const double xb = 1.0 / 9 + (0.25 - 1.0 / 9) * i / 1000;
    const double ga = g_t_prime(xa), gb = g_t_prime(xb);
    margin = std::min({margin, ga - 2, 1 + std::sqrt(2.0) - ga, 1 - gb});
  }
  out.push_back({"boundary", "g_t' in (2, 1+sqrt 2) then below 1", margin > 0, margin});
  return out;
}

inline std::vector<Check> constructions_suite() {
  std::vector<Check> out;
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = 0.25 * i / 100;
    const auto d = graphon_densities(g0_graphon(x));
    worst = std::max({worst, std::fabs(d[3] - x), std::fabs(d[1] - g_t(x))});
  }
  out.push_back({"constructions", "G_0 graphon traces the S13 boundary", worst <= 1e-9, worst});

  worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double de = 0.5 + 0.45 * i / 49;
    const auto d = graphon_densities(pr_extremal_graphon(de));
    worst = std::max({worst, std::fabs(d.edge - de), std::fabs(d[3] - g_R(de))});
  }
  out.push_back({"constructions", "extremal graphon attains (d_e, g_R(d_e))", worst <= 1e-9, worst});

  worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double a = 0.5 * i / 50;
    const auto d = graphon_densities(s23_graphon(a, 1.0));
    worst = std::max(worst, std::fabs(d[2] - 1.5 * (g_R_inverse(d[3]) - d[3])));
  }
  out.push_back({"constructions", "multipartite graphon on the S23 boundary", worst <= 1e-9, worst});

  worst = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double a = i / 20.0, p = j / 20.0;
      const auto d = graphon_densities(s12_graphon(a, p));
      const double cc = 3 * p * (1 - p) * (1 - p) + 3 * a * (1 - a) * p * (2 * p - 1);
      const double cr = 3 * p * p * (1 - p) + 3 * a * (1 - a) * (1 - p) * (1 - 2 * p);
      worst = std::max({worst, std::fabs(d[1] - cc), std::fabs(d[2] - cr)});
    }
  out.push_back({"constructions", "two-block graphon co-cherry / cherry formulas", worst <= 1e-12, worst});

  FamilySpec spec{Family::G0, {{"x", 0.2}}, 1000, 1};
  const auto s = summarize(spec, realize(spec));
  out.push_back({"constructions", "G_0(1000, 0.2) close to its limit", s.max_dev <= 0.01, s.max_dev});
  return out;
}

inline std::vector<Check> optimizer_suite() {
  std::vector<Check> out;
  const double alphas[] = {2.05, 2.1, 2.2, 2.3, 2.41};
  double dom = -1.0, agree = 0.0, forms = 0.0, stat = 0.0;
  Rng rng(7);
  for (double a : alphas) {
    const double m = closed_form_max(a);
    forms = std::max(forms, std::fabs(m - closed_form_max_via_hA(a)));
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform(), v = rng.uniform();
      const double lo = std::min(u, v), hi = std::max(u, v);
      FeasiblePoint p{{lo, hi - lo, 1 - hi}, {0.5 + 0.5 * rng.uniform(), 0.5 + 0.5 * rng.uniform(),
                                              0.5 + 0.5 * rng.uniform()}};
      dom = std::max(dom, objective_F(p, a) - m);
    }
    agree = std::max(agree, std::fabs(maximize_grid(a, 100, 1e-10).relaxed_value - m));
    const double s = optimum_sigma(a);
    stat = std::max(stat, stationarity_residual(with_stationary_y({s, s, 1 - 2 * s}, a), a));
  }
  out.push_back({"optimizer", "random feasible points below the closed-form maximum", dom <= 1e-9, dom});
  out.push_back({"optimizer", "two printed forms of the maximum agree", forms <= 1e-12, forms});
  out.push_back({"optimizer", "grid oracle agrees with the closed form", agree <= 1e-6, agree});
  out.push_back({"optimizer", "optimum is stationary", stat <= 1e-8, stat});
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"census", "boundary", "constructions", "optimizer"};
  return names;
}

inline std::vector<Check> run_suite(const std::string& name) {
  if (name == "census") return census_suite();
  if (name == "boundary") return boundary_suite();
  if (name == "constructions") return constructions_suite();
  if (name == "optimizer") return optimizer_suite();
  if (name == "all") {
    std::vector<Check> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw DomainError("unknown suite '" + name + "' (expected all, census, boundary, constructions or optimizer)");
}

}  // namespace profile3::verify
