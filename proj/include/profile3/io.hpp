#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "profile3/error.hpp"
#include "profile3/graph.hpp"
#include "profile3/graphon.hpp"

namespace profile3::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

inline std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace detail

/// Reads the edge-list format:
///   # comment
///   n <N>        (optional, first directive only)
///   <u> <v>      (0-based ids, u != v, each pair at most once)
inline Graph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared_n;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> seen;
  std::uint64_t max_id = 0;
  bool any_record = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto s = detail::trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto tok = detail::split_ws(s);
    if (tok[0] == "n") {
      if (any_record) throw ParseError("'n' directive must precede all edges", line);
      if (tok.size() != 2) throw ParseError("expected 'n <N>'", line);
      declared_n = detail::parse_id(tok[1], line);
      any_record = true;
      continue;
    }
    any_record = true;
    if (tok.size() != 2) throw ParseError("expected '<u> <v>'", line);
    const auto u = detail::parse_id(tok[0], line);
    const auto v = detail::parse_id(tok[1], line);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
    if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull) throw ParseError("vertex id too large", line);
    if (declared_n && (u >= *declared_n || v >= *declared_n))
      throw ParseError("vertex id outside [0," + std::to_string(*declared_n) + ")", line);
    const Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (auto [it, fresh] = seen.emplace(key, line); !fresh)
      throw ParseError("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second) +
                           " (first seen on line " + std::to_string(it->second) + ")",
                       line);
    edges.push_back(key);
    max_id = std::max({max_id, u, v});
  }
  const std::uint64_t n = declared_n ? *declared_n : (edges.empty() ? 0 : max_id + 1);
  return Graph::from_edges(n, edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Step graphons are JSON documents {"sizes": [...], "probs": [[...], ...]}.
inline StepGraphon parse_graphon(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graphon document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graphon document must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "sizes" && key != "probs") throw ParseError("unknown key '" + key + "'");
  if (!doc.contains("sizes") || !doc["sizes"].is_array()) throw ParseError("'sizes' must be an array");
  if (!doc.contains("probs") || !doc["probs"].is_array()) throw ParseError("'probs' must be an array of arrays");
  std::vector<double> sizes;
  for (const auto& v : doc["sizes"]) {
    if (!v.is_number()) throw ParseError("'sizes' entries must be numbers");
    sizes.push_back(v.get<double>());
  }
  std::vector<std::vector<double>> probs;
  for (const auto& row : doc["probs"]) {
    if (!row.is_array()) throw ParseError("'probs' must be an array of arrays");
    auto& r = probs.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("'probs' entries must be numbers");
      r.push_back(v.get<double>());
    }
  }
  try {
    return StepGraphon(std::move(sizes), std::move(probs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline StepGraphon read_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graphon(ss.str());
}

inline std::string format_graphon(const StepGraphon& w) {
  nlohmann::json doc;
  doc["sizes"] = w.sizes();
  doc["probs"] = w.prob_matrix();
  return doc.dump(2);
}

}  // namespace profile3::io
