#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "profile3/profile3.hpp"

namespace profile3::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomain = 1;
inline constexpr int kIo = 2;

namespace detail {

inline std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string join(const double* v, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) out += (i ? "," : "") + fmt17(v[i]);
  return out;
}

inline double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw DomainError("cannot parse " + what + " value '" + s + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::pair<std::string, std::string> key_value(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw DomainError("expected key=value, got '" + kv + "'");
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

inline Family family_or_throw(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  std::string valid;
  for (const auto& info : family_table())
    valid += "\n  " + std::string(info.name) + ": " + std::string(info.ranges);
  throw DomainError("unknown family '" + name + "'; valid families:" + valid);
}

inline RegionId region_or_throw(const std::string& name) {
  if (auto r = parse_region(name)) return *r;
  throw DomainError("unknown region '" + name + "' (expected s03, s12, s13 or s23)");
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  return f;
}

inline void print_verdicts(std::ostream& out, const DensityVector& d, double tol) {
  out << "region,x,y,inside,status,slack,binding\n";
  for (auto r : {RegionId::S03, RegionId::S12, RegionId::S13, RegionId::S23}) {
    const auto [i, j] = region_axes(r);
    const auto v = membership(r, d[i], d[j], tol);
    out << to_string(r) << ',' << fmt17(d[i]) << ',' << fmt17(d[j]) << ',' << (v.inside ? "true" : "false") << ','
        << v.status() << ','
        << fmt17(v.slack) << ',' << csv_text(v.binding) << '\n';
  }
}

inline std::string params_text(const std::map<std::string, double>& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : ";") + k + "=" + fmt17(v);
  return s;
}

// --- subcommands ----------------------------------------------------------

inline int cmd_census(std::ostream& out, const std::string& path, bool graphon, double tol) {
  if (graphon) {
    const auto w = io::read_graphon_file(path);
    const auto d = graphon_densities(w);
    out << "blocks: " << w.blocks() << '\n';
    out << "d: " << join(d.d.data(), 4) << '\n';
    out << "de: " << fmt17(d.edge) << '\n';
    print_verdicts(out, d, tol > 0 ? tol : kDefaultMembershipTol);
    return kOk;
  }
  const auto g = io::read_edge_list_file(path);
  const auto c = census_fast(g);
  const auto d = densities(c);
  out << "n: " << c.n << '\n' << "m: " << c.m << '\n';
  out << "c: " << c.c[0] << ',' << c.c[1] << ',' << c.c[2] << ',' << c.c[3] << '\n';
  out << "d: " << join(d.d.data(), 4) << '\n';
  out << "de: " << fmt17(d.edge) << '\n';
  print_verdicts(out, d, tol > 0 ? tol : 10.0 / static_cast<double>(c.n));
  return kOk;
}

inline void write_boundary_csv(std::ostream& out, RegionId region, int samples) {
  out << "param,x,y,branch\n";
  for (const auto& p : sample_boundary(region, samples))
    out << fmt17(p.param) << ',' << fmt17(p.x) << ',' << fmt17(p.y) << ',' << csv_text(p.branch) << '\n';
}

inline int cmd_boundary(std::ostream& out, const std::string& region, int samples, const std::string& path) {
  const auto r = region_or_throw(region);
  if (samples < 2) throw DomainError("--samples must be at least 2");
  if (path.empty()) {
    write_boundary_csv(out, r, samples);
  } else {
    auto f = open_out(path);
    write_boundary_csv(f, r, samples);
  }
  return kOk;
}

inline int cmd_member(std::ostream& out, const std::string& region, double x, double y, double tol) {
  const auto v = membership(region_or_throw(region), x, y, tol);
  out << "status: " << v.status() << '\n' << "slack: " << fmt17(v.slack) << '\n' << "binding: " << v.binding << '\n';
  return kOk;
}

inline FamilySpec make_spec(const std::string& family, const std::vector<std::string>& params) {
  FamilySpec spec;
  spec.family = family_or_throw(family);
  for (const auto& kv : params) {
    auto [k, v] = key_value(kv);
    spec.params[k] = parse_double(v, k);
  }
  return spec;
}

inline void write_summary(std::ostream& out, const FamilySpec& spec, const RealizationSummary& s) {
  out << "family: " << family_info(spec.family).name << '\n';
  out << "params: " << params_text(spec.params) << '\n';
  out << "n: " << *spec.n << '\n';
  out << "seed: " << spec.seed.value_or(kDefaultSeed) << '\n';
  out << "limit_d: " << join(s.limit.d.data(), 4) << '\n';
  out << "finite_d: " << join(s.finite.d.data(), 4) << '\n';
  out << "max_dev: " << fmt17(s.max_dev) << '\n';
}

inline int cmd_construct(std::ostream& out, FamilySpec spec, const std::string& path) {
  validate(spec);
  const Graph g = realize(spec);
  const auto s = summarize(spec, g);
  {
    auto f = open_out(path);
    io::write_edge_list(f, g);
  }
  {
    auto f = open_out(path + ".summary");
    write_summary(f, spec, s);
  }
  write_summary(out, spec, s);
  return kOk;
}

inline std::vector<std::map<std::string, double>> expand_grid(const std::vector<std::string>& grids) {
  std::vector<std::map<std::string, double>> rows{{}};
  for (const auto& g : grids) {
    auto [key, list] = key_value(g);
    std::vector<double> values;
    for (const auto& v : split(list, ',')) values.push_back(parse_double(v, key));
    if (values.empty()) throw DomainError("empty grid for '" + key + "'");
    std::vector<std::map<std::string, double>> next;
    for (const auto& row : rows)
      for (double v : values) {
        auto r = row;
        r[key] = v;
        next.push_back(std::move(r));
      }
    rows = std::move(next);
  }
  return rows;
}

template <class T>
std::vector<T> parse_list(const std::string& s, const std::string& what) {
  std::vector<T> out;
  for (const auto& tok : split(s, ',')) {
    const double v = parse_double(tok, what);
    if (v < 0 || v != std::floor(v)) throw DomainError(what + " entries must be non-negative integers");
    out.push_back(static_cast<T>(v));
  }
  if (out.empty()) throw DomainError(what + " must not be empty");
  return out;
}

inline void write_sweep(std::ostream& out, Family family, const std::vector<std::map<std::string, double>>& grid,
                        const std::vector<std::size_t>& ns, const std::vector<std::uint64_t>& seeds) {
  out << "params,n,seed,d0,d1,d2,d3,limit_d0,limit_d1,limit_d2,limit_d3,max_dev\n";
  for (const auto& params : grid)
    for (auto n : ns)
      for (auto seed : seeds) {
        FamilySpec spec{family, params, n, seed};
        const auto s = summarize(spec, realize(spec));
        out << params_text(params) << ',' << n << ',' << seed << ',' << join(s.finite.d.data(), 4) << ','
            << join(s.limit.d.data(), 4) << ',' << fmt17(s.max_dev) << '\n';
      }
}

inline int cmd_sweep(std::ostream& out, const std::string& family, const std::vector<std::string>& grids,
                     const std::string& n_list, const std::string& seed_list, const std::string& path) {
  const auto f = family_or_throw(family);
  const auto grid = expand_grid(grids);
  const auto ns = parse_list<std::size_t>(n_list, "--n-list");
  const auto seeds = parse_list<std::uint64_t>(seed_list, "--seeds");
  for (const auto& params : grid)
    for (auto n : ns) validate(FamilySpec{f, params, n, std::nullopt});
  if (path.empty()) {
    write_sweep(out, f, grid, ns, seeds);
  } else {
    auto file = open_out(path);
    write_sweep(file, f, grid, ns, seeds);
  }
  return kOk;
}

inline int cmd_optimize(std::ostream& out, double alpha, int grid, double refine_tol) {
  const auto r = maximize_grid(alpha, grid, refine_tol);
  out << "alpha: " << fmt17(alpha) << '\n';
  out << "sigma: " << fmt17(optimum_sigma(alpha)) << '\n';
  out << "analytic_value: " << fmt17(r.analytic_value) << '\n';
  out << "grid_value: " << fmt17(r.value) << '\n';
  out << "gap: " << fmt17(r.analytic_value - r.value) << '\n';
  out << "best_x: " << join(r.best.x.data(), 3) << '\n';
  out << "best_y: " << join(r.best.y.data(), 3) << '\n';
  out << "stationarity_residual: " << fmt17(r.stationarity_residual) << '\n';
  out << "relaxed_value: " << fmt17(r.relaxed_value) << '\n';
  out << "relaxed_x: " << join(r.relaxed_best.x.data(), 3) << '\n';
  out << "relaxed_y: " << join(r.relaxed_best.y.data(), 3) << '\n';
  for (const auto& d : r.dropped_candidates) out << "dropped: " << d << '\n';
  out << "candidates:\n";
  out << "label,x1,x2,x3,y1,y2,y3,value,printed_value,gap,role\n";
  for (const auto& c : r.candidates)
    out << csv_text(c.label) << ',' << join(c.point.x.data(), 3) << ',' << join(c.point.y.data(), 3) << ','
        << fmt17(c.value) << ',' << (c.printed_value ? fmt17(*c.printed_value) : "") << ','
        << fmt17(r.analytic_value - c.value) << ',' << to_string(c.role) << '\n';
  return kOk;
}

inline int cmd_verify(std::ostream& out, std::ostream& err, const std::string& suite) {
  const auto checks = verify::run_suite(suite);
  const verify::Check* first_fail = nullptr;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << ' ' << c.suite << ": " << c.name << " (" << fmt17(c.measured) << ")\n";
    if (!c.pass && !first_fail) first_fail = &c;
  }
  if (first_fail) {
    err << "first failing invariant: " << first_fail->suite << ": " << first_fail->name << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-vertex density profiles: census, region boundaries, extremal constructions"};
  app.require_subcommand(1);

  auto* census = app.add_subcommand("census", "census and region verdicts of an edge list or graphon");
  std::string census_path;
  bool census_graphon = false;
  double census_tol = 0.0;
  census->add_option("input", census_path, "edge-list file (or graphon JSON with --graphon)")->required();
  census->add_flag("--graphon", census_graphon, "input is a step-graphon document");
  census->add_option("--tol", census_tol, "membership tolerance (default 10/n, 1e-9 for graphons)");

  auto* boundary = app.add_subcommand("boundary", "boundary polyline of a region as CSV");
  std::string b_region, b_out;
  int b_samples = 200;
  boundary->add_option("--region", b_region, "s03, s12, s13 or s23")->required();
  boundary->add_option("--samples", b_samples, "points per smooth piece (>= 2)");
  boundary->add_option("--out", b_out, "output CSV (default stdout)");

  auto* member = app.add_subcommand("member", "region membership of a point");
  std::string m_region;
  double m_x = 0, m_y = 0, m_tol = kDefaultMembershipTol;
  member->add_option("--region", m_region, "s03, s12, s13 or s23")->required();
  member->add_option("--x", m_x, "first coordinate")->required();
  member->add_option("--y", m_y, "second coordinate")->required();
  member->add_option("--tol", m_tol, "tolerance (default 1e-9)");

  auto* construct = app.add_subcommand("construct", "realize an extremal family as an edge list");
  std::string c_family, c_out;
  std::vector<std::string> c_params;
  std::size_t c_n = 0;
  std::uint64_t c_seed = kDefaultSeed;
  construct->add_option("--family", c_family, "g0, g1, g2, s12, multipartite, pr-extremal, clique-isolated")
      ->required();
  construct->add_option("--param", c_params, "key=value (repeatable)");
  construct->add_option("--n", c_n, "vertex count (>= 8)")->required();
  construct->add_option("--seed", c_seed, "PRNG seed");
  construct->add_option("--out", c_out, "edge-list output; summary goes to <out>.summary")->required();

  auto* sweep = app.add_subcommand("sweep", "finite vs limit densities over a parameter grid");
  std::string s_family, s_nlist, s_seeds = "1", s_out;
  std::vector<std::string> s_grid;
  sweep->add_option("--family", s_family, "construction family")->required();
  sweep->add_option("--param-grid", s_grid, "key=v1,v2,... (repeatable)");
  sweep->add_option("--n-list", s_nlist, "comma-separated vertex counts")->required();
  sweep->add_option("--seeds", s_seeds, "comma-separated seeds (default 1)");
  sweep->add_option("--out", s_out, "output CSV (default stdout)");

  auto* optimize = app.add_subcommand("optimize", "closed-form maximum vs grid oracle");
  double o_alpha = 0, o_tol = 1e-10;
  int o_grid = 400;
  optimize->add_option("--alpha", o_alpha, "alpha in (2, 1+sqrt(2))")->required();
  optimize->add_option("--grid", o_grid, "simplex grid resolution (>= 50)");
  optimize->add_option("--refine-tol", o_tol, "refinement tolerance");

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  std::string v_suite = "all";
  verify_cmd->add_option("--suite", v_suite, "all, census, boundary, constructions or optimizer");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }

  try {
    if (*census) return detail::cmd_census(out, census_path, census_graphon, census_tol);
    if (*boundary) return detail::cmd_boundary(out, b_region, b_samples, b_out);
    if (*member) return detail::cmd_member(out, m_region, m_x, m_y, m_tol);
    if (*construct) {
      auto spec = detail::make_spec(c_family, c_params);
      spec.n = c_n;
      spec.seed = c_seed;
      return detail::cmd_construct(out, spec, c_out);
    }
    if (*sweep) return detail::cmd_sweep(out, s_family, s_grid, s_nlist, s_seeds, s_out);
    if (*optimize) {
      require_alpha(o_alpha);
      return detail::cmd_optimize(out, o_alpha, o_grid, o_tol);
    }
    if (*verify_cmd) return detail::cmd_verify(out, err, v_suite);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kDomain;
}

}  // namespace profile3::cli
