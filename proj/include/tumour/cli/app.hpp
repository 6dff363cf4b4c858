#pragma once

// Subcommands of the command-line tool: validate, verify, figure, orbit.
// Each returns a process exit code: 0 pass, 1 check or restriction failure,
// 2 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tumour/cli/config.hpp"
#include "tumour/exact_solutions.hpp"
#include "tumour/reduction.hpp"
#include "tumour/residuals.hpp"
#include "tumour/symmetry.hpp"

namespace tumour::cli {

using json = nlohmann::ordered_json;

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_config = 2 };

/// Flags that override the config file.
struct Overrides {
  std::optional<std::string> out_dir;
  std::optional<double> tol_scale;
  std::optional<int> grid;
  std::optional<std::string> engine;
  std::optional<int> figure;
};

namespace detail {

// Shortest round-trip decimal form; fixed so repeated runs are byte-identical.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json norm_json(const EquationNorm& e) {
  return {{"name", e.name}, {"linf", e.linf}, {"l2", e.l2}, {"rel_linf", e.rel_linf},
          {"at", {e.at.t, e.at.x, e.at.y}}};
}

inline json report_json(const ResidualReport& r) {
  json eq = json::array();
  for (const auto& e : r.equations) eq.push_back(norm_json(e));
  return {{"engine", r.engine.describe()}, {"count", r.count}, {"equations", eq}};
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path().empty() ? "." : p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + p.string() + "'");
  out << text;
}

inline void apply(RunConfig& c, const Overrides& o) {
  if (o.out_dir) c.out_dir = *o.out_dir;
  if (o.tol_scale) {
    if (!(*o.tol_scale > 0.0)) throw ConfigError("--tol-scale must be positive");
    c.tol.scale = *o.tol_scale;
  }
  if (o.grid) {
    if (*o.grid < 2) throw ConfigError("--grid must be at least 2");
    c.figure.grid = *o.grid;
  }
  if (o.engine) {
    if (*o.engine == "analytic") {
      c.engine.kind = Engine::Kind::analytic;
    } else if (*o.engine == "fd") {
      c.engine.kind = Engine::Kind::fd;
      if (c.engine.order == 0) c.engine.order = 4;
    } else {
      throw ConfigError("--engine must be analytic or fd");
    }
  }
  if (o.figure) c.figure.id = *o.figure;
}

inline json params_json(const RunConfig& c) {
  json p = json::object();
  for (const auto& [k, v] : c.params) p[k] = v;
  return p;
}

// Default governing threshold: the fixed-boundary families reach 1e-9; the
// moving fronts and the free Gaussian carry larger derived-constant rounding.
inline double default_governing_tol(const SolutionFamily& sol) {
  return std::holds_alternative<StationaryFront>(sol) || std::holds_alternative<SteadyState>(sol) ? 1e-9 : 1e-8;
}

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool gated = true;
  bool pass() const { return !gated || value <= threshold; }
};

inline json check_json(const Check& c) {
  return {{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"gated", c.gated}, {"pass", c.pass()}};
}

}  // namespace detail

/// Derived constants and restriction diagnostics of the configured family.
inline int cmd_validate(const RunConfig& c, std::ostream& out) {
  const SolutionFamily sol = make_family(c.family, c.params);
  json consts = json::object();
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, GaussianDecay>) {
          const auto& p = f.params();
          consts["s0"] = f.s0();
          consts["regular_c3"] = regular_c3(p.c1, p.n, p.sigma0, p.lambda);
        } else if constexpr (std::is_same_v<F, StationaryFront>) {
          const auto& k = f.constants();
          consts["delta"] = k.delta;
          consts["E"] = k.E;
          consts["c1"] = k.c1;
          consts["sigma0"] = k.sigma0;
          consts["s0"] = k.s0;
        } else if constexpr (std::is_same_v<F, SteadyState>) {
          const auto& k = f.constants();
          consts["c4"] = k.c4;
          consts["k1"] = k.k1;
          consts["k2"] = k.k2;
        } else {
          const auto& k = f.constants();
          consts["d0"] = k.d0;
          consts["s0"] = k.s0;
          consts["sigma0"] = k.sigma0;
          consts["c2"] = k.c2;
          consts["c3"] = k.c3;
        }
      },
      sol);
  const BoundaryCircle b = boundary_of(sol);
  consts["boundary_delta"] = b.delta;
  consts["boundary_kappa"] = b.kappa;
  const Regularity reg = regularity_of(sol);
  json diag = {{"origin_regular", reg.origin_regular},
               {"boundary_conditions", reg.boundary_conditions},
               {"sacrificed", reg.sacrificed}};
  bool ok = true;
  const ConstitutiveTriplet tri = triplet_of(sol);
  if (const auto* pl = std::get_if<PowerLawParams>(&tri)) {
    const PowerLawDiagnostics d = validate_power_law(*pl, phys_of(sol));
    diag["flags"] = d.flags;
    ok = d.flags.empty();
  }
  const json doc = {{"command", "validate"}, {"family", c.family}, {"parameters", detail::params_json(c)},
                    {"constants", consts}, {"diagnostics", diag}, {"pass", ok}};
  detail::write_text(std::filesystem::path(c.out_dir) / "validate.json", doc.dump(2) + "\n");
  out << "family " << c.family << "\n";
  for (const auto& [k, v] : consts.items()) out << "  " << k << " = " << detail::num(v.get<double>()) << "\n";
  out << "  origin_regular = " << (reg.origin_regular ? "yes" : "no") << "\n";
  out << "  boundary_conditions = " << (reg.boundary_conditions ? "yes" : "no") << "\n";
  if (!reg.sacrificed.empty()) out << "  sacrificed = " << reg.sacrificed << "\n";
  if (diag.contains("flags")) {
    for (const auto& f : diag["flags"]) out << "  flag: " << f.get<std::string>() << "\n";
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? exit_pass : exit_fail;
}

namespace detail {

inline ConstitutiveTriplet shifted_triplet(const SolutionFamily& sol, double s0_shift) {
  ConstitutiveTriplet tri = triplet_of(sol);
  if (s0_shift != 0.0) {
    auto* pl = std::get_if<PowerLawParams>(&tri);
    if (pl == nullptr) throw ConfigError("override.s0_shift needs a power-law family");
    pl->s0 += s0_shift;
  }
  return tri;
}

inline std::vector<Point> verify_points(const SolutionFamily& sol, SampleSet set) {
  if (!is_time_dependent(sol)) set.times = {1.0};
  return sample_points(sol, set);
}

inline FieldProvider engine_provider(const SolutionFamily& sol, Engine& engine, double r_min) {
  if (engine.kind == Engine::Kind::analytic) return provider_of(sol);
  if (engine.h == 0.0) engine.h = 1e-2 * r_min;
  return fd_provider(sol, engine.order, engine.h);
}

}  // namespace detail

/// Governing, boundary, reduced and rotation-orbit residuals against their thresholds.
inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const SolutionFamily sol = make_family(c.family, c.params);
  const ConstitutiveTriplet tri = detail::shifted_triplet(sol, c.s0_shift);
  const PhysConstants phys = phys_of(sol);
  const BoundaryCircle b = boundary_of(sol);
  const Regularity reg = regularity_of(sol);
  const double k = c.tol.scale;
  std::vector<detail::Check> checks;
  json reports = json::object();

  const std::vector<Point> pts = detail::verify_points(sol, c.samples);
  double r_min = b.delta;
  for (const Point& p : pts) r_min = std::min(r_min, std::hypot(p.x, p.y));
  Engine engine = c.engine;
  const FieldProvider jets = detail::engine_provider(sol, engine, r_min);
  const ResidualReport gov = governing_residual(jets, tri, phys, pts, engine);
  reports["governing"] = detail::report_json(gov);
  if (engine.kind == Engine::Kind::analytic) {
    checks.push_back({"governing", gov.max_linf(), k * c.tol.governing.value_or(detail::default_governing_tol(sol))});
  } else {
    checks.push_back({"governing_relative", gov.max_rel(), k * c.tol.fd_relative});
  }

  json bnd = json::array();
  double bmax = 0.0;
  const std::vector<double> btimes = is_time_dependent(sol) ? c.samples.times : std::vector<double>{1.0};
  for (double t : btimes) {
    const ResidualReport br = boundary_residual(provider_of(sol), b, phys, t, c.boundary_n_theta);
    json j = detail::report_json(br);
    j["t"] = t;
    bnd.push_back(j);
    bmax = std::max(bmax, br.max_linf());
  }
  reports["boundary"] = bnd;
  checks.push_back({"boundary", bmax, k * c.tol.boundary, reg.boundary_conditions});

  ReducedProfiles prof = reduced_profiles_of(sol);
  prof.triplet = tri;
  const ResidualReport red = reduced_ode_residual(prof);
  reports["reduced"] = detail::report_json(red);
  checks.push_back({"reduced", red.max_linf(), k * c.tol.reduced});
  const ReducedBcReport rbc = reduced_bc_residual(prof);
  reports["reduced_boundary"] = detail::report_json(rbc.general);
  checks.push_back({"reduced_boundary", rbc.general.max_linf(), k * c.tol.reduced_boundary, reg.boundary_conditions});

  const GroupElement rot = Rotation{TimeFunction::constant(1.0), 1.0};
  const ResidualReport base = governing_residual(provider_of(sol), tri, phys, pts);
  const ResidualReport orb = orbit_residual(rot, sol, tri, phys, pts);
  reports["orbit"] = detail::report_json(orb);
  checks.push_back({"orbit_rotation", orb.max_rel(), c.tol.orbit_factor * std::max(base.max_rel(), roundoff_floor)});

  bool ok = true;
  json cj = json::array();
  for (const auto& ch : checks) {
    ok = ok && ch.pass();
    cj.push_back(detail::check_json(ch));
  }
  const json doc = {{"command", "verify"},  {"family", c.family},  {"parameters", detail::params_json(c)},
                    {"s0_shift", c.s0_shift}, {"tol_scale", k},    {"engine", engine.describe()},
                    {"checks", cj},          {"reports", reports}, {"pass", ok}};
  detail::write_text(std::filesystem::path(c.out_dir) / "verify.json", doc.dump(2) + "\n");
  out << "verify " << c.family << " (" << engine.describe() << ")\n";
  for (const auto& ch : checks) {
    out << "  " << (ch.gated ? (ch.pass() ? "pass " : "FAIL ") : "info ") << ch.name << " = " << detail::num(ch.value)
        << " (threshold " << detail::num(ch.threshold) << ")\n";
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? exit_pass : exit_fail;
}

/// Orbit of the configured family under the [orbit] element, compared with the base residual.
inline int cmd_orbit(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SolutionFamily sol = make_family(c.family, c.params);
  const ConstitutiveTriplet tri = detail::shifted_triplet(sol, c.s0_shift);
  const PhysConstants phys = phys_of(sol);
  const GroupElement elem = make_element(c.orbit, tri);
  try {
    check_applicable(elem, tri);
  } catch (const InapplicableSymmetryError& e) {
    err << "inapplicable symmetry: " << e.what() << "\n";
    const json doc = {{"command", "orbit"}, {"family", c.family}, {"element", element_name(elem)},
                      {"error", e.what()}, {"pass", false}};
    detail::write_text(std::filesystem::path(c.out_dir) / "orbit.json", doc.dump(2) + "\n");
    return exit_fail;
  }
  const std::vector<Point> pts = detail::verify_points(sol, c.samples);
  const ResidualReport base = governing_residual(provider_of(sol), tri, phys, pts);
  const ResidualReport orb = orbit_residual(elem, sol, tri, phys, pts);
  const double limit = c.tol.orbit_factor * c.tol.scale * std::max(base.max_rel(), roundoff_floor);
  const bool ok = orb.max_rel() <= limit;
  const json doc = {{"command", "orbit"},
                    {"family", c.family},
                    {"parameters", detail::params_json(c)},
                    {"element", element_name(elem)},
                    {"eps", c.orbit.eps},
                    {"base", detail::report_json(base)},
                    {"orbit", detail::report_json(orb)},
                    {"base_rel", base.max_rel()},
                    {"orbit_rel", orb.max_rel()},
                    {"limit", limit},
                    {"pass", ok}};
  detail::write_text(std::filesystem::path(c.out_dir) / "orbit.json", doc.dump(2) + "\n");
  out << "orbit " << element_name(elem) << " eps=" << detail::num(c.orbit.eps) << " on " << c.family << "\n";
  out << "  base rel_linf = " << detail::num(base.max_rel()) << "\n";
  out << "  orbit rel_linf = " << detail::num(orb.max_rel()) << " (limit " << detail::num(limit) << ")\n";
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? exit_pass : exit_fail;
}

/// One surface of a figure: a field of a family at a time.
struct FigurePanel {
  std::string field;  // alpha | u1 | u2 | p
  double t = 1.0;
};

struct FigureSpec {
  int id = 0;
  SolutionFamily family;
  std::string family_id;
  std::map<std::string, double> params;
  std::vector<FigurePanel> panels;
};

/// Parameter sets: figures 1–2 use the decaying Gaussian family at
/// t = 2, figures 3–5 the fixed-circle family with derived constants.
inline FigureSpec figure_spec(int id) {
  const std::map<std::string, double> gauss{{"c1", 1.0}, {"c3", 0.5},  {"c4", 5.0},     {"n", 3.0},
                                            {"d0", 0.75}, {"sigma0", -3.0}, {"delta", 1.0}, {"lambda", 4.0}};
  const std::map<std::string, double> fig34{{"c3", 5.0}, {"c4", 2.0}, {"n", 2.0}, {"lambda", 4.0}, {"d0", 2.0}};
  const std::map<std::string, double> fig5{{"c3", 1.0}, {"c4", -2.5}, {"n", 2.0}, {"lambda", 4.0}, {"d0", 8.0}};
  switch (id) {
    case 1: return {1, make_family("gaussian", gauss), "gaussian", gauss, {{"u1", 2.0}, {"u2", 2.0}}};
    case 2: return {2, make_family("gaussian", gauss), "gaussian", gauss, {{"alpha", 2.0}, {"p", 2.0}}};
    case 3: return {3, make_family("stationary", fig34), "stationary", fig34, {{"u1", 1.0}, {"u2", 1.0}}};
    case 4: return {4, make_family("stationary", fig34), "stationary", fig34, {{"alpha", 1.0}, {"p", 1.0}}};
    case 5: return {5, make_family("stationary", fig5), "stationary", fig5, {{"alpha", 1.0}, {"alpha", 10.0}}};
    default: throw ConfigError("unknown figure id " + std::to_string(id) + " (expected 1-5)");
  }
}

namespace detail {

inline double field_value(const FieldValue& v, const std::string& f) {
  if (f == "alpha") return v.alpha;
  if (f == "u1") return v.u1;
  if (f == "u2") return v.u2;
  return v.p;
}

inline std::string panel_file(int id, const FigurePanel& p) {
  char t[32];
  std::snprintf(t, sizeof t, "%g", p.t);
  return "figure" + std::to_string(id) + "_" + p.field + "_t" + t + ".csv";
}

}  // namespace detail

/// CSV "x,y,value" on an n×n grid over [−R, R]² with R the boundary radius;
/// cells outside the disk or inside r_min = fraction·R are left empty.
inline std::string figure_csv(const SolutionFamily& sol, const FigurePanel& p, int grid, double r_min_fraction) {
  const double R = boundary_of(sol).radius(p.t);
  const double r_min = r_min_fraction * R;
  std::string out = "x,y,value\n";
  for (int j = 0; j < grid; ++j) {
    const double y = -R + 2.0 * R * j / (grid - 1);
    for (int i = 0; i < grid; ++i) {
      const double x = -R + 2.0 * R * i / (grid - 1);
      const double r = std::hypot(x, y);
      out += detail::num(x) + "," + detail::num(y) + ",";
      if (r >= r_min && r <= R * (1.0 + 1e-12)) {
        const double v = detail::field_value(eval_value(sol, p.t, x, y), p.field);
        if (!std::isfinite(v)) throw std::runtime_error("figure: non-finite value at (" + detail::num(x) + ", " + detail::num(y) + ")");
        out += detail::num(v);
      }
      out += "\n";
    }
  }
  return out;
}

/// Writes one CSV per panel, a gnuplot script and a metadata JSON.
inline int cmd_figure(const RunConfig& c, std::ostream& out) {
  const FigureSpec spec = figure_spec(c.figure.id);
  if (c.figure.grid < 2) throw ConfigError("figure grid must be at least 2");
  if (!(c.figure.r_min_fraction >= 0.0 && c.figure.r_min_fraction < 1.0)) {
    throw ConfigError("figure.r_min_fraction must lie in [0, 1)");
  }
  const std::filesystem::path dir(c.out_dir);
  json files = json::array();
  std::string script = "set datafile separator ','\nset datafile missing ''\nset key off\nset pm3d\n";
  for (const FigurePanel& p : spec.panels) {
    const std::string name = detail::panel_file(spec.id, p);
    detail::write_text(dir / name, figure_csv(spec.family, p, c.figure.grid, c.figure.r_min_fraction));
    files.push_back({{"file", name}, {"field", p.field}, {"t", p.t},
                     {"radius", boundary_of(spec.family).radius(p.t)}});
    script += "set title '" + p.field + " at t=" + detail::num(p.t) + "'\nsplot '" + name +
              "' skip 1 using 1:2:3 with pm3d\npause -1\n";
    out << "wrote " << (dir / name).string() << "\n";
  }
  const json meta = {{"command", "figure"},
                     {"figure", spec.id},
                     {"family", spec.family_id},
                     {"parameters", spec.params},
                     {"grid", c.figure.grid},
                     {"r_min_fraction", c.figure.r_min_fraction},
                     {"mask", "r < r_min_fraction*R(t) or r > R(t) left empty"},
                     {"panels", files}};
  detail::write_text(dir / ("figure" + std::to_string(spec.id) + ".json"), meta.dump(2) + "\n");
  detail::write_text(dir / ("figure" + std::to_string(spec.id) + ".gp"), script);
  return exit_pass;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-solution verification for a free-boundary tumour growth model"};
  app.require_subcommand(1);
  std::string config_path;
  Overrides ov;
  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", config_path, "INI run configuration");
    if (config_required) opt->required();
    sub->add_option("--out", ov.out_dir, "output directory");
    sub->add_option("--tol-scale", ov.tol_scale, "multiply every threshold");
  };
  CLI::App* validate = app.add_subcommand("validate", "derived constants and restriction diagnostics");
  add_common(validate, true);
  CLI::App* verify = app.add_subcommand("verify", "residual report bundle");
  add_common(verify, true);
  verify->add_option("--engine", ov.engine, "analytic or fd");
  CLI::App* figure = app.add_subcommand("figure", "CSV surfaces of a figure");
  add_common(figure, false);
  figure->add_option("--figure", ov.figure, "figure id 1-5");
  figure->add_option("--grid", ov.grid, "grid points per axis");
  CLI::App* orbit = app.add_subcommand("orbit", "orbit residual under a group element");
  add_common(orbit, true);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_config;
  }
  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config_file(config_path);
    detail::apply(cfg, ov);
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (figure->parsed()) return cmd_figure(cfg, out);
    return cmd_orbit(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "output error: " << e.what() << "\n";
    return exit_config;
  } catch (const RestrictionError& e) {
    err << "restriction violated: " << e.what() << "\n";
    return exit_fail;
  } catch (const DegenerateError& e) {
    err << "restriction violated: " << e.what() << "\n";
    return exit_fail;
  } catch (const DomainError& e) {
    err << "restriction violated: " << e.what() << "\n";
    return exit_fail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_fail;
  }
}

}  // namespace tumour::cli
