#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "profile3/error.hpp"

namespace profile3 {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph stored as sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
  /// (in either orientation) and ids outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") has an endpoint outside [0," + std::to_string(n) + ")");
      if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
      auto& a = g.adj_[v];
      std::sort(a.begin(), a.end());
      auto dup = std::adjacent_find(a.begin(), a.end());
      if (dup != a.end())
        throw DomainError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
    g.m_ = edges.size();
    return g;
  }

  std::size_t n() const noexcept { return adj_.size(); }
  std::uint64_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  Graph complement() const {
    Graph c(n());
    for (Vertex u = 0; u < n(); ++u) {
      const auto& a = adj_[u];
      auto it = a.begin();
      for (Vertex v = 0; v < n(); ++v) {
        if (it != a.end() && *it == v) { ++it; continue; }
        if (v != u) c.adj_[u].push_back(v);
      }
      c.m_ += c.adj_[u].size();
    }
    c.m_ /= 2;
    return c;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::uint64_t m_ = 0;
};

}  // namespace profile3
