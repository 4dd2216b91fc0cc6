#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library routine it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "profile3/census.hpp"
#include "profile3/graph.hpp"
#include "profile3/graphon.hpp"

namespace oracle {

using profile3::Graph;
using profile3::StepGraphon;

// Census from a dense matrix built from the edge list.
inline std::array<std::uint64_t, 4> census_matrix(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  std::array<std::uint64_t, 4> c{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) ++c[a[i][j] + a[i][k] + a[j][k]];
  return c;
}

// Densities via homomorphism densities t(edge), t(cherry), t(K3) and
// inclusion-exclusion over the three pairs of a triple.
inline std::array<double, 5> hom_densities(const StepGraphon& w) {
  const std::size_t b = w.blocks();
  double te = 0, tc = 0, tk = 0;
  std::vector<double> deg(b, 0.0);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      te += w.size(i) * w.size(j) * w.prob(i, j);
      deg[i] += w.size(j) * w.prob(i, j);
    }
  for (std::size_t i = 0; i < b; ++i) tc += w.size(i) * deg[i] * deg[i];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < b; ++k)
        tk += w.size(i) * w.size(j) * w.size(k) * w.prob(i, j) * w.prob(i, k) * w.prob(j, k);
  return {1 - 3 * te + 3 * tc - tk, 3 * (te - 2 * tc + tk), 3 * (tc - tk), tk, te};
}

// Minimum triangle density for d_e in [1/2, 2/3] (three-part closed form).
inline double g_R_three_parts(double d) {
  const double r = std::sqrt(4 - 6 * d);
  return (1 - r) * (2 + r) * (2 + r) / 18;
}

// Largest d3 at co-triangle density d0 over the clique-plus-isolated
// graphons and their complements, by a fine sweep of the clique mass with
// linear interpolation between neighbouring samples.
inline double s03_sweep(double d0, int steps = 200000) {
  double best = 0.0;
  for (int orientation = 0; orientation < 2; ++orientation) {
    double prev_d0 = 0, prev_d3 = 0;
    for (int i = 0; i <= steps; ++i) {
      const double a = static_cast<double>(i) / steps;
      // Clique of mass a plus isolated vertices: d3 = a^3, d0 = (1-a)^2 (1+2a).
      double t0 = (1 - a) * (1 - a) * (1 + 2 * a), t3 = a * a * a;
      if (orientation == 1) std::swap(t0, t3);
      if (i > 0 && (prev_d0 - d0) * (t0 - d0) <= 0 && prev_d0 != t0) {
        const double f = (d0 - prev_d0) / (t0 - prev_d0);
        best = std::max(best, prev_d3 + f * (t3 - prev_d3));
      }
      prev_d0 = t0;
      prev_d3 = t3;
    }
  }
  return best;
}

inline Graph random_graph(std::size_t n, double p, profile3::Rng& rng) {
  std::vector<profile3::Edge> edges;
  for (profile3::Vertex u = 0; u < n; ++u)
    for (profile3::Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Random step graphon with 1..max_blocks blocks; about a third of the
// entries are exactly 0 or 1.
inline StepGraphon random_graphon(profile3::Rng& rng, int max_blocks = 4) {
  const int b = 1 + static_cast<int>(rng.uniform() * max_blocks);
  std::vector<double> sizes(b);
  double total = 0;
  for (auto& s : sizes) total += (s = 0.05 + rng.uniform());
  double acc = 0;
  for (int i = 0; i + 1 < b; ++i) acc += (sizes[i] /= total);
  sizes[b - 1] = 1 - acc;
  std::vector<std::vector<double>> p(b, std::vector<double>(b));
  for (int i = 0; i < b; ++i)
    for (int j = i; j < b; ++j) {
      const double r = rng.uniform();
      p[i][j] = p[j][i] = r < 0.15 ? 0.0 : r < 0.3 ? 1.0 : rng.uniform();
    }
  return {sizes, p};
}

}  // namespace oracle
