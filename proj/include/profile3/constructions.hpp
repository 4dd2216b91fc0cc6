#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profile3/boundary.hpp"
#include "profile3/census.hpp"
#include "profile3/error.hpp"
#include "profile3/graph.hpp"
#include "profile3/graphon.hpp"
#include "profile3/numeric.hpp"

namespace profile3 {

namespace detail {

// Builds a step graphon, dropping blocks of (numerically) zero mass and
// absorbing rounding drift in the sizes.
inline StepGraphon make_graphon(const std::vector<double>& sizes, const std::vector<std::vector<double>>& probs) {
  std::vector<std::size_t> keep;
  double total = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] > 1e-14) {
      keep.push_back(i);
      total += sizes[i];
    }
  std::vector<double> s;
  std::vector<std::vector<double>> p;
  for (auto i : keep) {
    s.push_back(sizes[i] / total);
    auto& row = p.emplace_back();
    for (auto j : keep) row.push_back(probs[i][j]);
  }
  return {std::move(s), std::move(p)};
}

// Graph on parts of the given sizes (in order) where vertices in parts i, j
// are joined with probability probs[i][j]; 0/1 entries consume no randomness.
inline Graph blow_up(const std::vector<std::size_t>& parts, const std::vector<std::vector<double>>& probs,
                     std::uint64_t seed) {
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < parts.size(); ++i) block.insert(block.end(), parts[i], i);
  const std::size_t n = block.size();
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(probs[block[u]][block[v]])) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Floor-based part sizes for the given fractions; the remainder goes to the last part.
inline std::vector<std::size_t> floor_parts(const std::vector<double>& fractions, std::size_t n) {
  std::vector<std::size_t> parts;
  std::size_t used = 0;
  for (std::size_t i = 0; i + 1 < fractions.size(); ++i) {
    const auto k = static_cast<std::size_t>(std::max<std::int64_t>(0, guarded_floor(fractions[i] * n)));
    parts.push_back(k);
    used += k;
  }
  if (used > n) throw DomainError("part sizes exceed n");
  parts.push_back(n - used);
  return parts;
}

inline void require_min_n(std::size_t n) {
  if (n < 8) throw DomainError("n must be at least 8");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// G_0: the S13 upper boundary for x in [0, 1/4]; d3 = 0 for x < 0.

enum class G0Regime { Bipartite, Random, Linked, Cliques };

inline G0Regime g0_regime(double x) {
  require_in(x, -0.25, 0.25, "x");
  if (x < 0.0) return G0Regime::Bipartite;
  if (x < 1.0 / 16.0) return G0Regime::Random;
  if (x < 1.0 / 9.0) return G0Regime::Linked;
  return G0Regime::Cliques;
}

// Within-block density of the random regime, chosen so that d3 = x:
// four blocks of 1/4 give d3 = (p^3 + 3 p (1-p)^2) / 16 = x.
inline double g0_random_p(double x) {
  require_in(x, 0.0, 1.0 / 16.0, "x");
  return (1.0 + std::cbrt(32.0 * x - 1.0)) / 2.0;
}

inline StepGraphon g0_graphon(double x) {
  switch (g0_regime(x)) {
    case G0Regime::Bipartite: {
      const double s = 0.25 + x;
      std::vector<std::vector<double>> p(5, std::vector<double>(5, 0.0));
      p[0][1] = p[1][0] = p[2][3] = p[3][2] = 1.0;
      return detail::make_graphon({s, s, s, s, 1 - 4 * s}, p);
    }
    case G0Regime::Random: {
      const double q = g0_random_p(x);
      std::vector<std::vector<double>> p(4, std::vector<double>(4, 0.0));
      for (int i = 0; i < 4; ++i) p[i][i] = q;
      p[0][1] = p[1][0] = p[2][3] = p[3][2] = 1 - q;
      return detail::make_graphon({0.25, 0.25, 0.25, 0.25}, p);
    }
    case G0Regime::Linked: {
      const double sigma = h_A3_inverse(x), d = delta_A(sigma), h = (1 - 2 * sigma) / 2;
      std::vector<std::vector<double>> p(4, std::vector<double>(4, 0.0));
      p[0][0] = p[1][1] = p[2][2] = p[3][3] = 1.0;
      p[0][1] = p[1][0] = d;
      return detail::make_graphon({h, h, sigma, sigma}, p);
    }
    case G0Regime::Cliques: {
      const double sigma = h_B3_inverse(x);
      return detail::make_graphon({sigma, sigma, 1 - 2 * sigma}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    }
  }
  throw DomainError("unreachable regime");
}

/// Finite G_0(n, x). The linked regime uses |A| = |B| = floor((1-2 sigma) n / 2)
/// with a circulant A-B bipartite graph of degree floor(delta_A |B|).
inline Graph g0_graph(double x, std::size_t n, std::uint64_t seed) {
  detail::require_min_n(n);
  switch (g0_regime(x)) {
    case G0Regime::Bipartite: {
      const double s = 0.25 + x;
      std::vector<std::vector<double>> p(5, std::vector<double>(5, 0.0));
      p[0][1] = p[1][0] = p[2][3] = p[3][2] = 1.0;
      return detail::blow_up(detail::floor_parts({s, s, s, s, 1 - 4 * s}, n), p, seed);
    }
    case G0Regime::Random: {
      const double q = g0_random_p(x);
      std::vector<std::vector<double>> p(4, std::vector<double>(4, 0.0));
      for (int i = 0; i < 4; ++i) p[i][i] = q;
      p[0][1] = p[1][0] = p[2][3] = p[3][2] = 1 - q;
      return detail::blow_up(detail::floor_parts({0.25, 0.25, 0.25, 0.25}, n), p, seed);
    }
    case G0Regime::Linked: {
      const double sigma = h_A3_inverse(x);
      const auto parts = detail::floor_parts({(1 - 2 * sigma) / 2, (1 - 2 * sigma) / 2, sigma, sigma}, n);
      const std::size_t a = parts[0];
      if (a == 0) throw DomainError("n too small for nonempty parts");
      const auto d = static_cast<std::size_t>(guarded_floor(delta_A(sigma) * static_cast<double>(a)));
      std::vector<Edge> edges;
      std::size_t start = 0;
      for (auto size : parts) {
        for (std::size_t u = start; u < start + size; ++u)
          for (std::size_t v = u + 1; v < start + size; ++v) edges.emplace_back(u, v);
        start += size;
      }
      // Vertex i of A meets vertices i, i+1, ..., i+d-1 (mod |B|) of B.
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t t = 0; t < d; ++t) edges.emplace_back(i, a + (i + t) % a);
      return Graph::from_edges(n, edges);
    }
    case G0Regime::Cliques: {
      const double sigma = h_B3_inverse(x);
      return detail::blow_up(detail::floor_parts({sigma, sigma, 1 - 2 * sigma}, n),
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, seed);
    }
  }
  throw DomainError("unreachable regime");
}

// ---------------------------------------------------------------------------
// G_1, G_2 and their limit maps (co-cherry, triangle).

inline StepGraphon g1_graphon(double a, double x) {
  require_in(a, 0.0, 1.0, "a");
  const auto base = g0_graphon(x);
  const std::size_t b = base.blocks();
  std::vector<double> sizes;
  std::vector<std::vector<double>> p(b + 1, std::vector<double>(b + 1, 1.0));
  for (std::size_t i = 0; i < b; ++i) {
    sizes.push_back((1 - a) * base.size(i));
    for (std::size_t j = 0; j < b; ++j) p[i][j] = base.prob(i, j);
  }
  sizes.push_back(a);
  return detail::make_graphon(sizes, p);
}

inline std::pair<double, double> h1(double a, double x) {
  const auto d = graphon_densities(g1_graphon(a, x));
  return {d[1], d[3]};
}

inline StepGraphon g2_graphon(double a, double p) {
  require_in(a, 0.0, 1.0, "a");
  require_in(p, 0.0, 1.0, "p");
  return detail::make_graphon({a, 1 - a}, {{1, p}, {p, 1 - p}});
}

inline std::pair<double, double> h2(double a, double p) {
  const auto d = graphon_densities(g2_graphon(a, p));
  return {d[1], d[3]};
}

// ---------------------------------------------------------------------------
// Other projections.

// Two blocks a, 1-a: density p inside each block, 1-p across.
inline StepGraphon s12_graphon(double a, double p) {
  require_in(a, 0.0, 1.0, "a");
  require_in(p, 0.0, 1.0, "p");
  return detail::make_graphon({a, 1 - a}, {{p, 1 - p}, {1 - p, p}});
}

// Complete multipartite graph on mass b (floor(1/a) parts of mass a b plus a
// remainder part) and isolated mass 1 - b. a = 0 gives a clique on mass b.
inline StepGraphon s23_graphon(double a, double b) {
  require_in(a, 0.0, 0.5, "a");
  require_in(b, 0.0, 1.0, "b");
  std::vector<double> sizes;
  if (a == 0.0) {
    sizes.push_back(b);
  } else {
    const auto r = guarded_floor(1.0 / a);
    for (std::int64_t i = 0; i < r; ++i) sizes.push_back(a * b);
    sizes.push_back(std::max(0.0, b * (1.0 - static_cast<double>(r) * a)));
  }
  const std::size_t parts = sizes.size();
  sizes.push_back(1 - b);
  std::vector<std::vector<double>> p(parts + 1, std::vector<double>(parts + 1, 0.0));
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t j = 0; j < parts; ++j) p[i][j] = (i != j || a == 0.0) ? 1.0 : 0.0;
  return detail::make_graphon(sizes, p);
}

enum class InnerChoice { Bipartite };

/// Triangle-minimal graphon at edge density d_e: k-2 parts of mass (1-z)/(k-1)
/// joined completely to each other and to a last part of mass
/// z + (1-z)/(k-1) carrying a complete bipartite graph with sides
/// (1-z)/(k-1) and z.
inline StepGraphon pr_extremal_graphon(double d_e, InnerChoice = InnerChoice::Bipartite) {
  require_in(d_e, 0.5, 1.0, "d_e");
  if (d_e >= 1.0) throw DomainError("d_e must be < 1");
  const auto [k, z] = razborov_structure(d_e);
  const double part = (1 - z) / static_cast<double>(k - 1);
  std::vector<double> sizes(static_cast<std::size_t>(k - 2), part);
  sizes.push_back(part);
  sizes.push_back(z);
  const std::size_t b = sizes.size();
  std::vector<std::vector<double>> p(b, std::vector<double>(b, 1.0));
  for (std::size_t i = 0; i < b; ++i) p[i][i] = 0.0;
  return detail::make_graphon(sizes, p);
}

// Clique of mass a plus isolated mass 1 - a, or its complement.
inline StepGraphon clique_plus_isolated_graphon(double a, bool complemented) {
  require_in(a, 0.0, 1.0, "a");
  const double in = complemented ? 0.0 : 1.0, out = complemented ? 1.0 : 0.0;
  return detail::make_graphon({a, 1 - a}, {{in, out}, {out, out}});
}

// ---------------------------------------------------------------------------
// Family specs.

enum class Family { G0, G1, G2, TwoBlockS12, MultipartiteS23, PRExtremal, CliquePlusIsolated };

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<std::string_view> params;
  std::string_view ranges;
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table{
      {Family::G0, "g0", {"x"}, "x in [-1/4, 1/4]"},
      {Family::G1, "g1", {"a", "x"}, "a in [0, 1], x in [-1/4, 1/4]"},
      {Family::G2, "g2", {"a", "p"}, "a in [0, 1], p in [0, 1]"},
      {Family::TwoBlockS12, "s12", {"a", "p"}, "a in [0, 1], p in [0, 1]"},
      {Family::MultipartiteS23, "multipartite", {"a", "b"}, "a in [0, 1/2], b in [0, 1]"},
      {Family::PRExtremal, "pr-extremal", {"de"}, "de in [1/2, 1)"},
      {Family::CliquePlusIsolated, "clique-isolated", {"a", "complement"}, "a in [0, 1], complement in {0, 1}"},
  };
  return table;
}

inline const FamilyInfo& family_info(Family f) {
  for (const auto& info : family_table())
    if (info.family == f) return info;
  throw DomainError("unknown family");
}

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "s23") return Family::MultipartiteS23;
  for (const auto& info : family_table())
    if (info.name == name) return info.family;
  return std::nullopt;
}

struct FamilySpec {
  Family family = Family::G0;
  std::map<std::string, double> params;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;

  double param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw DomainError("missing parameter '" + key + "'");
    return it->second;
  }
};

/// Checks parameter names and ranges; throws DomainError naming the valid ranges.
inline void validate(const FamilySpec& spec) {
  const auto& info = family_info(spec.family);
  const std::string where = " (" + std::string(info.name) + ": " + std::string(info.ranges) + ")";
  for (const auto& [key, _] : spec.params)
    if (std::find(info.params.begin(), info.params.end(), key) == info.params.end())
      throw DomainError("unknown parameter '" + key + "'" + where);
  for (auto key : info.params)
    if (!spec.params.count(std::string(key))) throw DomainError("missing parameter '" + std::string(key) + "'" + where);
  try {
    switch (spec.family) {
      case Family::G0: (void)g0_regime(spec.param("x")); break;
      case Family::G1:
        require_in(spec.param("a"), 0, 1, "a");
        (void)g0_regime(spec.param("x"));
        break;
      case Family::G2:
      case Family::TwoBlockS12:
        require_in(spec.param("a"), 0, 1, "a");
        require_in(spec.param("p"), 0, 1, "p");
        break;
      case Family::MultipartiteS23:
        require_in(spec.param("a"), 0, 0.5, "a");
        require_in(spec.param("b"), 0, 1, "b");
        break;
      case Family::PRExtremal:
        require_in(spec.param("de"), 0.5, 1, "de");
        if (spec.param("de") >= 1.0) throw DomainError("de must be < 1");
        break;
      case Family::CliquePlusIsolated: {
        require_in(spec.param("a"), 0, 1, "a");
        const double c = spec.param("complement");
        if (c != 0.0 && c != 1.0) throw DomainError("complement must be 0 or 1");
        break;
      }
    }
  } catch (const DomainError& e) {
    throw DomainError(e.what() + where);
  }
  if (spec.n && *spec.n < 8) throw DomainError("n must be at least 8");
}

inline StepGraphon family_graphon(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::G0: return g0_graphon(spec.param("x"));
    case Family::G1: return g1_graphon(spec.param("a"), spec.param("x"));
    case Family::G2: return g2_graphon(spec.param("a"), spec.param("p"));
    case Family::TwoBlockS12: return s12_graphon(spec.param("a"), spec.param("p"));
    case Family::MultipartiteS23: return s23_graphon(spec.param("a"), spec.param("b"));
    case Family::PRExtremal: return pr_extremal_graphon(spec.param("de"));
    case Family::CliquePlusIsolated:
      return clique_plus_isolated_graphon(spec.param("a"), spec.param("complement") == 1.0);
  }
  throw DomainError("unknown family");
}

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Finite graph for a family. Blocks get floor-based part sizes in order with
/// the remainder in the last block; 0/1 densities are deterministic, other
/// densities are seeded Bernoulli edges.
inline Graph realize(const FamilySpec& spec) {
  validate(spec);
  if (!spec.n) throw DomainError("n is required");
  const std::size_t n = *spec.n;
  const std::uint64_t seed = spec.seed.value_or(kDefaultSeed);
  switch (spec.family) {
    case Family::G0: return g0_graph(spec.param("x"), n, seed);
    case Family::G1: {
      const double a = spec.param("a");
      const auto base_n = static_cast<std::size_t>(std::max<std::int64_t>(0, guarded_ceil((1 - a) * n)));
      if (base_n > 0 && base_n < 8) throw DomainError("G_0 part needs at least 8 vertices");
      const Graph base = base_n ? g0_graph(spec.param("x"), base_n, seed) : Graph(0);
      std::vector<Edge> edges = base.edges();
      for (std::size_t u = base_n; u < n; ++u)
        for (std::size_t v = 0; v < u; ++v) edges.emplace_back(v, u);
      return Graph::from_edges(n, edges);
    }
    default: {
      const auto w = family_graphon(spec);
      return detail::blow_up(detail::floor_parts(w.sizes(), n), w.prob_matrix(), seed);
    }
  }
}

// Limit densities, finite densities and their largest coordinate gap.
struct RealizationSummary {
  DensityVector limit;
  DensityVector finite;
  double max_dev = 0.0;
};

inline RealizationSummary summarize(const FamilySpec& spec, const Graph& g) {
  RealizationSummary s{graphon_densities(family_graphon(spec)), densities(census_fast(g)), 0.0};
  for (int k = 0; k < 4; ++k) s.max_dev = std::max(s.max_dev, std::fabs(s.limit[k] - s.finite[k]));
  return s;
}

}  // namespace profile3
