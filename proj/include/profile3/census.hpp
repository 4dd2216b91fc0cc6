#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "profile3/error.hpp"
#include "profile3/graph.hpp"
#include "profile3/numeric.hpp"

namespace profile3 {

// Counts of induced H_0..H_3 (0..3 edges) over all vertex triples.
struct TripleCensus {
  std::array<std::uint64_t, 4> c{};
  std::uint64_t n = 0;
  std::uint64_t m = 0;

  std::uint64_t total() const { return c[0] + c[1] + c[2] + c[3]; }
  bool valid() const { return n >= 3 && total() == choose3(n); }

  // Census of the complement graph.
  TripleCensus complemented() const {
    return {{c[3], c[2], c[1], c[0]}, n, choose2(n) - m};
  }

  friend bool operator==(const TripleCensus&, const TripleCensus&) = default;
};

// Densities d0..d3 of H_0..H_3 and the edge density.
struct DensityVector {
  std::array<double, 4> d{};
  double edge = 0.0;

  double operator[](std::size_t k) const { return d[k]; }
};

namespace detail {

inline void require_census_size(const Graph& g) {
  if (g.n() < 3) throw DomainError("graph too small for triple census");
}

inline TripleCensus census_from_identities(std::uint64_t n, std::uint64_t m, std::uint64_t paths2,
                                           std::uint64_t triangles) {
  TripleCensus c;
  c.n = n;
  c.m = m;
  c.c[3] = triangles;
  c.c[2] = paths2 - 3 * triangles;
  // Each edge sits in n-2 triples: c1 + 2 c2 + 3 c3 = m (n-2).
  c.c[1] = m * (n - 2) + 3 * triangles - 2 * paths2;
  c.c[0] = choose3(n) - c.c[1] - c.c[2] - c.c[3];
  return c;
}

}  // namespace detail

/// Triangle count by forward-neighbour intersection over a degree ordering.
/// O(m^{3/2}) time, O(n + m) extra space.
inline std::uint64_t count_triangles(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  });
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i);

  // Orient every edge towards the higher rank.
  std::vector<std::vector<Vertex>> fwd(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (rank[u] > rank[v]) fwd[v].push_back(u);

  std::vector<std::uint8_t> mark(n, 0);
  std::uint64_t t = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : fwd[v]) mark[u] = 1;
    for (Vertex u : fwd[v])
      for (Vertex w : fwd[u]) t += mark[w];
    for (Vertex u : fwd[v]) mark[u] = 0;
  }
  return t;
}

/// Exact census from triangle count and degree sums.
inline TripleCensus census_fast(const Graph& g) {
  detail::require_census_size(g);
  std::uint64_t paths2 = 0;
  for (Vertex v = 0; v < g.n(); ++v) paths2 += choose2(g.degree(v));
  return detail::census_from_identities(g.n(), g.m(), paths2, count_triangles(g));
}

/// Reference census: classifies every triple directly. Cubic in n.
inline TripleCensus census_brute(const Graph& g) {
  detail::require_census_size(g);
  const std::size_t n = g.n();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[u * n + v] = 1;

  TripleCensus c;
  c.n = n;
  c.m = g.m();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int ij = adj[i * n + j];
      for (std::size_t k = j + 1; k < n; ++k) ++c.c[ij + adj[i * n + k] + adj[j * n + k]];
    }
  return c;
}

/// Densities of a census; the edge density is derived from the H_k densities
/// and cross-checked against m / C(n,2).
inline DensityVector densities(const TripleCensus& c) {
  if (!c.valid()) throw DomainError("invalid triple census");
  const double total = static_cast<double>(choose3(c.n));
  DensityVector out;
  for (int k = 0; k < 4; ++k) out.d[k] = static_cast<double>(c.c[k]) / total;
  out.edge = (out.d[1] + 2.0 * out.d[2] + 3.0 * out.d[3]) / 3.0;
  const double direct = static_cast<double>(c.m) / static_cast<double>(choose2(c.n));
  if (std::fabs(out.edge - direct) > 1e-12)
    throw DomainError("census inconsistent with edge count");
  return out;
}

}  // namespace profile3
