#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "profile3/census.hpp"
#include "profile3/graphon.hpp"
#include "profile3/io.hpp"

using namespace profile3;

namespace {

Graph make(std::size_t n, std::vector<Edge> e) { return Graph::from_edges(n, e); }

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

using Counts = std::array<std::uint64_t, 4>;

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(make(3, {{0, 0}}), DomainError);
  EXPECT_THROW(make(3, {{0, 3}}), DomainError);
  EXPECT_THROW(make(3, {{0, 1}, {1, 0}}), DomainError);
}

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
  const Graph g = make(5, {{4, 0}, {2, 0}, {3, 1}});
  EXPECT_EQ(g.m(), 3u);
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
  EXPECT_EQ(g.complement().m(), 10u - 3u);
  EXPECT_EQ(g.complement().complement(), g);
}

TEST(Census, Examples) {
  EXPECT_EQ(census_fast(complete(3)).c, (Counts{0, 0, 0, 1}));
  EXPECT_EQ(census_fast(cycle(5)).c, (Counts{0, 5, 5, 0}));
  EXPECT_EQ(census_fast(Graph(10)).c, (Counts{120, 0, 0, 0}));
  EXPECT_EQ(census_brute(make(3, {{0, 1}, {1, 2}})).c, (Counts{0, 0, 1, 0}));
  EXPECT_EQ(census_brute(complete(4)).c, (Counts{0, 0, 0, 4}));
  EXPECT_EQ(oracle::census_matrix(cycle(5)), (Counts{0, 5, 5, 0}));
}

TEST(Census, TooSmall) {
  for (std::size_t n : {0, 1, 2}) {
    try {
      census_fast(Graph(n));
      FAIL() << "expected an error";
    } catch (const DomainError& e) {
      EXPECT_STREQ(e.what(), "graph too small for triple census");
    }
    EXPECT_THROW(census_brute(Graph(n)), DomainError);
  }
}

TEST(Census, Densities) {
  const auto c5 = densities(census_fast(cycle(5)));
  EXPECT_EQ(c5.d, (std::array<double, 4>{0, 0.5, 0.5, 0}));
  EXPECT_DOUBLE_EQ(c5.edge, 0.5);
  const auto k3 = densities(census_fast(complete(3)));
  EXPECT_EQ(k3.d, (std::array<double, 4>{0, 0, 0, 1}));
  EXPECT_DOUBLE_EQ(k3.edge, 1.0);
  const auto e = densities(census_fast(Graph(7)));
  EXPECT_EQ(e.d, (std::array<double, 4>{1, 0, 0, 0}));
  EXPECT_EQ(e.edge, 0.0);
}

TEST(Census, RandomGraphsMatchOracles) {
  Rng rng(11);
  const double probs[] = {0.05, 0.3, 0.5, 0.8, 1.0};
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + i % 58;
    const Graph g = oracle::random_graph(n, probs[i % 5], rng);
    const auto fast = census_fast(g);
    ASSERT_EQ(fast, census_brute(g)) << "graph " << i;
    ASSERT_EQ(fast.total(), choose3(n));
    ASSERT_EQ(fast.c[1] + 2 * fast.c[2] + 3 * fast.c[3], g.m() * (n - 2));
    ASSERT_EQ(census_fast(g.complement()), fast.complemented());
    if (i % 50 == 0) { ASSERT_EQ(fast.c, oracle::census_matrix(g)); }
  }
}

TEST(Census, FiniteLinearBound) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 20 + i;
    const auto d = densities(census_fast(oracle::random_graph(n, rng.uniform(), rng)));
    EXPECT_LE(d[1], 3 * d[3] + 3.0 / 8 + 10.0 / n);
  }
}

TEST(Graphon, ValidatesInput) {
  EXPECT_THROW(StepGraphon({}, {}), DomainError);
  EXPECT_THROW(StepGraphon({0.5, 0.4}, {{0, 0}, {0, 0}}), DomainError);
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {{0, 0.2}, {0.3, 0}}), DomainError);
  EXPECT_THROW(StepGraphon({0.5, 0.5}, {{0, 1.5}, {1.5, 0}}), DomainError);
  EXPECT_THROW(StepGraphon({1.0, 0.0}, {{0, 0}, {0, 0}}), DomainError);
  EXPECT_THROW(StepGraphon({1.0}, {{0, 0}}), DomainError);
}

TEST(Graphon, ConstantIsBinomial) {
  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const auto d = graphon_densities(StepGraphon({1.0}, {{p}}));
    const double q = 1 - p;
    EXPECT_NEAR(d[0], q * q * q, 1e-15);
    EXPECT_NEAR(d[1], 3 * p * q * q, 1e-15);
    EXPECT_NEAR(d[2], 3 * p * p * q, 1e-15);
    EXPECT_NEAR(d[3], p * p * p, 1e-15);
    EXPECT_NEAR(d.edge, p, 1e-15);
  }
}

TEST(Graphon, TwoEqualCliques) {
  const auto d = graphon_densities(StepGraphon({0.5, 0.5}, {{1, 0}, {0, 1}}));
  EXPECT_NEAR(d[0], 0, 1e-15);
  EXPECT_NEAR(d[1], 0.75, 1e-15);
  EXPECT_NEAR(d[2], 0, 1e-15);
  EXPECT_NEAR(d[3], 0.25, 1e-15);
}

TEST(Graphon, BalancedTripartite) {
  const double t = 1.0 / 3;
  const auto d = graphon_densities(StepGraphon({t, t, t}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_NEAR(d[3], 2.0 / 9, 1e-15);
  EXPECT_NEAR(d.edge, 2.0 / 3, 1e-15);
  EXPECT_NEAR(d[3], oracle::g_R_three_parts(2.0 / 3), 1e-12);
}

TEST(Graphon, RandomGraphonsMatchHomomorphismRoute) {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto w = oracle::random_graphon(rng);
    const auto d = graphon_densities(w);
    const auto h = oracle::hom_densities(w);
    for (int k = 0; k < 4; ++k) ASSERT_NEAR(d[k], h[k], 1e-12);
    ASSERT_NEAR(d.edge, h[4], 1e-12);
    ASSERT_NEAR(d[0] + d[1] + d[2] + d[3], 1.0, 1e-12);
    ASSERT_NEAR(d.edge, (d[1] + 2 * d[2] + 3 * d[3]) / 3, 1e-12);
    ASSERT_LE(d[1], 3 * d[3] + 3.0 / 8 + 1e-12);
    ASSERT_GE(d[3], d.edge * (2 * d.edge - 1) - 1e-12);
    const auto c = graphon_densities(w.complemented());
    for (int k = 0; k < 4; ++k) ASSERT_NEAR(c[k], d[3 - k], 1e-12);
  }
}

TEST(Sampling, DegenerateDensities) {
  const StepGraphon full({0.3, 0.7}, {{1, 1}, {1, 1}});
  const StepGraphon none({0.3, 0.7}, {{0, 0}, {0, 0}});
  EXPECT_EQ(sample_w_random_graph(full, 40, 9), complete(40));
  EXPECT_EQ(sample_w_random_graph(none, 40, 9).m(), 0u);
  EXPECT_THROW(sample_w_random_graph(full, 0, 1), DomainError);
}

TEST(Sampling, DeterministicInSeed) {
  const StepGraphon w({0.4, 0.6}, {{0.3, 0.7}, {0.7, 0.1}});
  EXPECT_EQ(sample_w_random_graph(w, 100, 42), sample_w_random_graph(w, 100, 42));
  EXPECT_NE(sample_w_random_graph(w, 100, 42), sample_w_random_graph(w, 100, 43));
}

TEST(Sampling, TwoCliquesConcentrate) {
  const StepGraphon w({0.5, 0.5}, {{1, 0}, {0, 1}});
  const auto limit = graphon_densities(w);
  const auto d = densities(census_fast(sample_w_random_graph(w, 2000, 17)));
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(d[k], limit[k], 0.02);
}

TEST(EdgeList, ParsesCommentsAndDirective) {
  std::istringstream in("# five-cycle\n\nn 7\n0 1\n1 2\n  2 3 \n3 4\n4 0\n");
  const Graph g = io::read_edge_list(in);
  EXPECT_EQ(g.n(), 7u);
  EXPECT_EQ(g.m(), 5u);
  std::istringstream bare("0 1\n5 2\n");
  EXPECT_EQ(io::read_edge_list(bare).n(), 6u);
}

TEST(EdgeList, ErrorsCiteLines) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      io::read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0 1\n3 3\n"), 2u);
  EXPECT_EQ(line_of("0 1\n1 2\n# c\n2 1\n"), 4u);
  EXPECT_EQ(line_of("n 3\n0 5\n"), 2u);
  EXPECT_EQ(line_of("0 1 2\n"), 1u);
  EXPECT_EQ(line_of("0 x\n"), 1u);
  EXPECT_EQ(line_of("0 1\nn 4\n"), 2u);
  EXPECT_EQ(line_of("0 -1\n"), 1u);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = make(6, {{0, 5}, {1, 2}, {2, 4}});
  std::stringstream s;
  io::write_edge_list(s, g);
  EXPECT_EQ(io::read_edge_list(s), g);
}

TEST(GraphonFile, ParsesAndValidates) {
  const auto w = io::parse_graphon(R"({"sizes": [0.5, 0.5], "probs": [[1, 0], [0, 1]]})");
  EXPECT_EQ(w.blocks(), 2u);
  EXPECT_EQ(io::parse_graphon(io::format_graphon(w)).prob_matrix(), w.prob_matrix());
  EXPECT_THROW(io::parse_graphon("{"), ParseError);
  EXPECT_THROW(io::parse_graphon(R"({"sizes": [1], "probs": [[0]], "extra": 1})"), ParseError);
  EXPECT_THROW(io::parse_graphon(R"({"sizes": [1]})"), ParseError);
  EXPECT_THROW(io::parse_graphon(R"({"sizes": [0.5, 0.5], "probs": [[0, 1], [0, 0]]})"), ParseError);
  EXPECT_THROW(io::parse_graphon(R"({"sizes": ["a"], "probs": [[0]]})"), ParseError);
}
