#pragma once

// Run configuration: one INI file (sections of key = value) fully determines
// a run. Unknown sections and keys are rejected.

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tumour/errors.hpp"
#include "tumour/exact_solutions.hpp"
#include "tumour/residuals.hpp"
#include "tumour/symmetry.hpp"

namespace tumour::cli {

struct Tolerances {
  std::optional<double> governing;  // family default when unset
  double boundary = 1e-10;
  double reduced = 1e-9;
  double reduced_boundary = 1e-10;
  double orbit_factor = 10.0;
  double fd_relative = 1e-6;  // FD engine gates the term-normalised norm
  double scale = 1.0;
};

struct OrbitConfig {
  std::string element = "rotation";
  double eps = 1.0;
  std::string f = "constant";  // rotation angle rate: constant | sine
  double amplitude = 1.0;
  double omega = 1.0;
  std::string axis = "x";
  std::string g = "linear";  // galilei shift: linear | quadratic
  double g_a = 0.0;
  double g_b = 1.0;
  double shift = 1.0;  // pressure-shift F(t) = shift
  std::optional<double> m;
  std::optional<double> n;
};

struct FigureConfig {
  int id = 0;
  int grid = 101;
  double r_min_fraction = 1e-2;
};

struct RunConfig {
  std::string family = "stationary";
  std::map<std::string, double> params;
  SampleSet samples;
  int boundary_n_theta = 64;
  Engine engine;
  Tolerances tol;
  double s0_shift = 0.0;
  OrbitConfig orbit;
  FigureConfig figure;
  std::string out_dir = "tumour_out";
};

namespace detail {

inline double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size() || !std::isfinite(v)) {
    throw ConfigError("config: '" + key + "' expects a finite number, got '" + text + "'");
  }
  return v;
}

inline int parse_int(const std::string& key, const std::string& text) {
  const double v = parse_number(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("config: '" + key + "' expects an integer");
  return static_cast<int>(v);
}

inline std::vector<double> parse_list(const std::string& key, std::string text) {
  for (char& c : text) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(text);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_number(key, tok));
  if (out.empty()) throw ConfigError("config: '" + key + "' expects a non-empty list");
  return out;
}

inline const std::set<std::string>& family_keys(const std::string& id) {
  static const std::map<std::string, std::set<std::string>> keys{
      {"gaussian", {"c1", "c3", "c4", "n", "d0", "lambda", "sigma0", "delta"}},
      {"stationary", {"c3", "c4", "n", "lambda", "d0"}},
      {"power-front", {"c1", "delta", "m", "n", "lambda"}},
      {"log-front", {"c1", "delta", "n", "lambda"}},
      {"steady", {"c1", "c3", "delta", "m", "n", "lambda", "d0"}},
  };
  const auto it = keys.find(id);
  if (it == keys.end()) throw ConfigError("config: unknown family id '" + id + "'");
  return it->second;
}

template <typename P>
void set_if(const std::map<std::string, double>& m, const char* key, P& field) {
  if (const auto it = m.find(key); it != m.end()) field = it->second;
}

}  // namespace detail

/// Builds the family named `id`; parameters not given keep the family defaults.
/// Restriction violations propagate as RestrictionError / DegenerateError / DomainError.
inline SolutionFamily make_family(const std::string& id, const std::map<std::string, double>& p) {
  const auto& allowed = detail::family_keys(id);
  for (const auto& [k, v] : p) {
    if (!allowed.count(k)) throw ConfigError("config: family '" + id + "' has no parameter '" + k + "'");
  }
  using detail::set_if;
  if (id == "gaussian") {
    GaussianDecay::Params q;
    set_if(p, "c1", q.c1);
    set_if(p, "c3", q.c3);
    set_if(p, "c4", q.c4);
    set_if(p, "n", q.n);
    set_if(p, "d0", q.d0);
    set_if(p, "lambda", q.lambda);
    set_if(p, "sigma0", q.sigma0);
    set_if(p, "delta", q.delta);
    return GaussianDecay(q);
  }
  if (id == "stationary") {
    StationaryFront::Params q;
    set_if(p, "c3", q.c3);
    set_if(p, "c4", q.c4);
    set_if(p, "n", q.n);
    set_if(p, "lambda", q.lambda);
    set_if(p, "d0", q.d0);
    return StationaryFront(q);
  }
  if (id == "power-front") {
    PowerFront::Params q;
    set_if(p, "c1", q.c1);
    set_if(p, "delta", q.delta);
    set_if(p, "m", q.m);
    set_if(p, "n", q.n);
    set_if(p, "lambda", q.lambda);
    return PowerFront(q);
  }
  if (id == "log-front") {
    LogFront::Params q;
    set_if(p, "c1", q.c1);
    set_if(p, "delta", q.delta);
    set_if(p, "n", q.n);
    set_if(p, "lambda", q.lambda);
    return LogFront(q);
  }
  SteadyState::Params q;
  set_if(p, "c1", q.c1);
  set_if(p, "c3", q.c3);
  set_if(p, "delta", q.delta);
  set_if(p, "m", q.m_exp);
  set_if(p, "n", q.n_exp);
  set_if(p, "lambda", q.lambda);
  set_if(p, "d0", q.d0);
  return SteadyState(q);
}

/// Parses INI text. Every section and key must be known.
inline RunConfig parse_config_text(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  RunConfig c;
  using detail::parse_int;
  using detail::parse_number;
  // The family id decides which parameter keys are legal, so read it first.
  if (const auto fam = tree.get_child_optional("family")) {
    if (const auto id = fam->get_optional<std::string>("id")) c.family = *id;
    detail::family_keys(c.family);
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("config: key '" + section + "' outside any section");
    }
    for (const auto& [key, node] : body) {
      const std::string v = node.data();
      const std::string where = section + "." + key;
      auto unknown = [&] { throw ConfigError("config: unknown key '" + where + "'"); };
      if (section == "family") {
        if (key == "id") continue;
        if (!detail::family_keys(c.family).count(key)) unknown();
        c.params[key] = parse_number(where, v);
      } else if (section == "samples") {
        if (key == "times") c.samples.times = detail::parse_list(where, v);
        else if (key == "r_min_fraction") c.samples.r_min_fraction = parse_number(where, v);
        else if (key == "n_r") c.samples.n_r = parse_int(where, v);
        else if (key == "n_theta") c.samples.n_theta = parse_int(where, v);
        else if (key == "boundary_n_theta") c.boundary_n_theta = parse_int(where, v);
        else unknown();
      } else if (section == "engine") {
        if (key == "kind") {
          if (v == "analytic") c.engine.kind = Engine::Kind::analytic;
          else if (v == "fd") c.engine.kind = Engine::Kind::fd;
          else throw ConfigError("config: engine.kind must be analytic or fd");
        } else if (key == "order") c.engine.order = parse_int(where, v);
        else if (key == "h") c.engine.h = parse_number(where, v);
        else unknown();
      } else if (section == "tolerance") {
        if (key == "governing") c.tol.governing = parse_number(where, v);
        else if (key == "boundary") c.tol.boundary = parse_number(where, v);
        else if (key == "reduced") c.tol.reduced = parse_number(where, v);
        else if (key == "reduced_boundary") c.tol.reduced_boundary = parse_number(where, v);
        else if (key == "orbit_factor") c.tol.orbit_factor = parse_number(where, v);
        else if (key == "fd_relative") c.tol.fd_relative = parse_number(where, v);
        else if (key == "scale") c.tol.scale = parse_number(where, v);
        else unknown();
      } else if (section == "override") {
        if (key == "s0_shift") c.s0_shift = parse_number(where, v);
        else unknown();
      } else if (section == "orbit") {
        auto& o = c.orbit;
        if (key == "element") o.element = v;
        else if (key == "eps") o.eps = parse_number(where, v);
        else if (key == "f") o.f = v;
        else if (key == "amplitude") o.amplitude = parse_number(where, v);
        else if (key == "omega") o.omega = parse_number(where, v);
        else if (key == "axis") o.axis = v;
        else if (key == "g") o.g = v;
        else if (key == "g_a") o.g_a = parse_number(where, v);
        else if (key == "g_b") o.g_b = parse_number(where, v);
        else if (key == "shift") o.shift = parse_number(where, v);
        else if (key == "m") o.m = parse_number(where, v);
        else if (key == "n") o.n = parse_number(where, v);
        else unknown();
      } else if (section == "figure") {
        if (key == "id") c.figure.id = parse_int(where, v);
        else if (key == "grid") c.figure.grid = parse_int(where, v);
        else if (key == "r_min_fraction") c.figure.r_min_fraction = parse_number(where, v);
        else unknown();
      } else if (section == "output") {
        if (key == "dir") c.out_dir = v;
        else unknown();
      } else {
        throw ConfigError("config: unknown section '" + section + "'");
      }
    }
  }
  if (!(c.tol.scale > 0.0)) throw ConfigError("config: tolerance.scale must be positive");
  if (c.engine.kind == Engine::Kind::fd && c.engine.order == 0) c.engine.order = 4;
  if (c.engine.kind == Engine::Kind::fd && c.engine.order != 2 && c.engine.order != 4) {
    throw ConfigError("config: engine.order must be 2 or 4");
  }
  return c;
}

inline RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

/// The group element described by the [orbit] section; scale exponents
/// default to the family's own (m, n).
inline GroupElement make_element(const OrbitConfig& o, const ConstitutiveTriplet& triplet) {
  const Axis axis = o.axis == "y" ? Axis::y : Axis::x;
  if (o.axis != "x" && o.axis != "y") throw ConfigError("config: orbit.axis must be x or y");
  if (o.element == "rotation") {
    TimeFunction f;
    if (o.f == "constant") f = TimeFunction::constant(o.amplitude);
    else if (o.f == "sine") f = TimeFunction::sine(o.amplitude, o.omega);
    else throw ConfigError("config: orbit.f must be constant or sine");
    return Rotation{f, o.eps};
  }
  if (o.element == "galilei") {
    TimeFunction g;
    if (o.g == "linear") g = TimeFunction::linear(o.g_a, o.g_b);
    else if (o.g == "quadratic") g = TimeFunction::quadratic(o.g_b);
    else throw ConfigError("config: orbit.g must be linear or quadratic");
    return Galilei{g, axis, o.eps};
  }
  if (o.element == "pressure-shift") return PressureShift{TimeFunction::constant(o.shift), o.eps};
  if (o.element == "time-translation") return TimeTranslation{o.eps};
  if (o.element == "scale") {
    double m = 0.0;
    double n = 0.0;
    if (const auto* pl = std::get_if<PowerLawParams>(&triplet)) {
      m = pl->m;
      n = pl->n;
    }
    return Scale{o.eps, o.m.value_or(m), o.n.value_or(n)};
  }
  throw ConfigError("config: unknown orbit.element '" + o.element + "'");
}

}  // namespace tumour::cli
