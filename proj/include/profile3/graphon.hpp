#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "profile3/census.hpp"
#include "profile3/error.hpp"
#include "profile3/graph.hpp"

namespace profile3 {

// Step function W on [0,1]^2: block i has measure sizes[i], and W equals
// prob(i, j) on block i x block j.
class StepGraphon {
 public:
  StepGraphon(std::vector<double> sizes, std::vector<std::vector<double>> probs)
      : sizes_(std::move(sizes)) {
    const std::size_t b = sizes_.size();
    if (b == 0) throw DomainError("step graphon needs at least one block");
    if (probs.size() != b) throw DomainError("probs must be a " + std::to_string(b) + "x" + std::to_string(b) + " matrix");
    double total = 0.0;
    for (std::size_t i = 0; i < b; ++i) {
      if (!(sizes_[i] > 0.0) || !std::isfinite(sizes_[i]))
        throw DomainError("block size " + std::to_string(i) + " must be positive");
      total += sizes_[i];
    }
    if (std::fabs(total - 1.0) > 1e-12) throw DomainError("block sizes must sum to 1");
    probs_.resize(b * b);
    for (std::size_t i = 0; i < b; ++i) {
      if (probs[i].size() != b) throw DomainError("probs row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < b; ++j) {
        const double p = probs[i][j];
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probs entries must lie in [0,1]");
        probs_[i * b + j] = p;
      }
    }
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j)
        if (prob(i, j) != prob(j, i)) throw DomainError("probs must be symmetric");
  }

  std::size_t blocks() const noexcept { return sizes_.size(); }
  const std::vector<double>& sizes() const noexcept { return sizes_; }
  double size(std::size_t i) const { return sizes_[i]; }
  double prob(std::size_t i, std::size_t j) const { return probs_[i * blocks() + j]; }

  std::vector<std::vector<double>> prob_matrix() const {
    std::vector<std::vector<double>> out(blocks(), std::vector<double>(blocks()));
    for (std::size_t i = 0; i < blocks(); ++i)
      for (std::size_t j = 0; j < blocks(); ++j) out[i][j] = prob(i, j);
    return out;
  }

  // Degree d_W(x) for x in block i.
  double block_degree(std::size_t i) const {
    double d = 0.0;
    for (std::size_t j = 0; j < blocks(); ++j) d += sizes_[j] * prob(i, j);
    return d;
  }

  StepGraphon complemented() const {
    auto p = prob_matrix();
    for (auto& row : p)
      for (double& v : row) v = 1.0 - v;
    return {sizes_, std::move(p)};
  }

 private:
  std::vector<double> sizes_;
  std::vector<double> probs_;
};

/// Exact 3-vertex densities of a step graphon. Sums over ordered block
/// triples (repeats included) the distribution of the number of present
/// edges among three independent pair indicators. O(B^3).
inline DensityVector graphon_densities(const StepGraphon& w) {
  // Extended-precision accumulators keep many-block sums within ~1e-15.
  using Acc = long double;
  const std::size_t b = w.blocks();
  Acc edge = 0, d0 = 0, d1 = 0, d2 = 0, d3 = 0;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const Acc wij = Acc(w.size(i)) * w.size(j);
      const Acc p = w.prob(i, j);
      edge += wij * p;
      for (std::size_t k = 0; k < b; ++k) {
        const Acc weight = wij * w.size(k);
        const Acc q = w.prob(i, k), r = w.prob(j, k);
        const Acc p0 = 1 - p, q0 = 1 - q, r0 = 1 - r;
        d0 += weight * (p0 * q0 * r0);
        d1 += weight * (p * q0 * r0 + p0 * q * r0 + p0 * q0 * r);
        d2 += weight * (p * q * r0 + p * q0 * r + p0 * q * r);
        d3 += weight * (p * q * r);
      }
    }
  DensityVector out;
  out.d = {double(d0), double(d1), double(d2), double(d3)};
  out.edge = double(edge);
  return out;
}

// Seeded generator for every random construction: std::mt19937_64 with the
// caller's seed, doubles formed from the top 53 bits of each output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return p >= 1.0 || (p > 0.0 && uniform() < p); }

 private:
  std::mt19937_64 engine_;
};

/// n-vertex W-random graph: each vertex draws a block from the cumulative
/// size distribution, then every pair is joined independently with the
/// probability of its block pair. Deterministic in (w, n, seed).
inline Graph sample_w_random_graph(const StepGraphon& w, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample size must be at least 1");
  Rng rng(seed);
  std::vector<double> cumulative(w.blocks());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.blocks(); ++i) cumulative[i] = (acc += w.size(i));
  std::vector<std::size_t> block(n);
  for (auto& bv : block) {
    const double u = rng.uniform();
    std::size_t i = 0;
    while (i + 1 < w.blocks() && u >= cumulative[i]) ++i;
    bv = i;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(w.prob(block[u], block[v]))) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace profile3
