// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "tumour/cli/app.hpp"
#include "tumour/exact_solutions.hpp"
#include "tumour/numerics/exp_integral.hpp"
#include "tumour/numerics/finite_difference.hpp"
#include "tumour/reduction.hpp"
#include "tumour/residuals.hpp"
#include "tumour/symmetry.hpp"

using namespace tumour;
namespace fs = std::filesystem;

namespace {

const fs::path config_dir{TUMOUR_CONFIG_DIR};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

GaussianDecay::Params fig12() { return {1.0, 0.5, 5.0, 3.0, 0.75, 4.0, -3.0, 1.0}; }
StationaryFront::Params fig34() { return {5.0, 2.0, 2.0, 4.0, 2.0}; }
StationaryFront::Params fig5() { return {1.0, -2.5, 2.0, 4.0, 8.0}; }

std::vector<SolutionFamily> all_families() {
  return {GaussianDecay(fig12()), StationaryFront(fig34()), StationaryFront(fig5()), PowerFront({}),
          LogFront({}),           SteadyState({})};
}

double jet_rel_gap(const FieldJet& a, const FieldJet& b) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Jet& A = detail::component(a, k);
    const Jet& B = detail::component(b, k);
    const std::array<long double, 7> ea{A.v, A.t, A.x, A.y, A.xx, A.xy, A.yy};
    const std::array<long double, 7> eb{B.v, B.t, B.x, B.y, B.xx, B.xy, B.yy};
    long double scale = 1.0L;
    for (long double e : eb) scale = std::max(scale, std::abs(e));
    for (std::size_t i = 0; i < 7; ++i) worst = std::max(worst, static_cast<double>(std::abs(ea[i] - eb[i]) / scale));
  }
  return worst;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "tumour_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "tumour_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome reference_constants() {
  Outcome o;
  const std::regex delta_line(R"(\n  delta = ([0-9.eE+-]+))");
  for (auto [name, want, exact] : {std::tuple{"fig34_stationary.ini", 0.67, std::exp(-0.4)},
                                   std::tuple{"fig5_stationary.ini", 12.18, std::exp(2.5)}}) {
    std::string out;
    const int code = run_cli({"validate", "--config", (config_dir / name).string(), "--out",
                              (scratch() / "validate").string()},
                             &out);
    std::smatch m;
    if (code != cli::exit_pass || !std::regex_search(out, m, delta_line)) {
      o.require(false, std::string(name) + " validate failed");
      continue;
    }
    const double delta = std::stod(m[1]);
    o.require(std::abs(delta - want) <= 0.005, "delta " + sci(delta) + " vs reference " + sci(want));
    o.require(std::abs(delta - exact) <= 1e-12 * exact, "delta off closed form");
    o.note("delta=" + std::to_string(delta));
  }
  return o;
}

Outcome exact_solution_residuals() {
  Outcome o;
  const SolutionFamily stationary = StationaryFront(fig34());
  const SolutionFamily steady = SteadyState({});
  double gov = 0.0, bnd = 0.0;
  for (auto [sol, times] : {std::pair{stationary, std::vector<double>{0.5, 1.0, 2.0}},
                            std::pair{steady, std::vector<double>{1.0}}}) {
    SampleSet set;
    set.times = times;
    const ResidualReport g = governing_residual(provider_of(sol), triplet_of(sol), phys_of(sol), sample_points(sol, set));
    o.require(g.max_linf() <= 1e-9, family_name(sol) + " governing " + sci(g.max_linf()));
    gov = std::max(gov, g.max_linf());
    for (double t : times) {
      const ResidualReport b = boundary_residual(provider_of(sol), boundary_of(sol), phys_of(sol), t, 64);
      o.require(b.max_linf() <= 1e-10, family_name(sol) + " boundary " + sci(b.max_linf()));
      bnd = std::max(bnd, b.max_linf());
    }
  }
  o.note("governing " + sci(gov) + ", boundary " + sci(bnd));
  return o;
}

Outcome family_coverage() {
  Outcome o;
  const GaussianDecay g(fig12());
  o.require(regularity_of(g).origin_regular, "gaussian set is not origin regular");
  for (const SolutionFamily& sol : {SolutionFamily(g), SolutionFamily(PowerFront({})), SolutionFamily(LogFront({}))}) {
    const ResidualReport rep =
        governing_residual(provider_of(sol), triplet_of(sol), phys_of(sol), sample_points(sol, SampleSet{}));
    o.require(rep.max_linf() <= 1e-8, family_name(sol) + " " + sci(rep.max_linf()));
    o.note(family_name(sol) + " " + sci(rep.max_linf()));
  }
  return o;
}

Outcome figure_one_consistency() {
  Outcome o;
  const auto p = fig12();
  const double c3 = regular_c3(p.c1, p.n, p.sigma0, p.lambda);
  o.require(std::abs(c3 - p.c3) <= 1e-15, "regular c3 = " + std::to_string(c3));
  const SolutionFamily sol = GaussianDecay(p);
  double ratio = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const FieldValue ref = eval_value(sol, t, 1e-3, 0.0);
    const double ref_speed = std::hypot(ref.u1, ref.u2);
    for (int k = 0; k <= 40; ++k) {
      const double r = 1e-3 * std::pow(2.0, -0.75 * k);
      for (double th : {0.0, 0.7, 2.1, 4.0}) {
        const FieldValue v = eval_value(sol, t, r * std::cos(th), r * std::sin(th));
        ratio = std::max(ratio, std::hypot(v.u1, v.u2) / ref_speed);
      }
    }
  }
  o.require(ratio <= 2.0, "speed ratio near origin " + sci(ratio));
  o.note("c3=" + std::to_string(c3) + ", max |u|/|u(1e-3)| = " + sci(ratio));
  return o;
}

Outcome orbit_suite() {
  Outcome o;
  SampleSet set;
  set.n_r = 8;
  set.n_theta = 8;
  const SolutionFamily stationary = StationaryFront(fig34());
  const SolutionFamily steady = SteadyState({});
  const std::vector<Point> st_pts = sample_points(stationary, set);
  set.times = {1.0};
  const std::vector<Point> sd_pts = sample_points(steady, set);
  const auto st_tr = triplet_of(stationary);
  const auto& pl = std::get<PowerLawParams>(st_tr);
  const ResidualReport st_base = governing_residual(provider_of(stationary), st_tr, phys_of(stationary), st_pts);
  const ResidualReport sd_base = governing_residual(provider_of(steady), triplet_of(steady), phys_of(steady), sd_pts);
  const PowerLawParams zero_source{1.0, 0.0, 1.0, 0.0, 2.0};
  const FieldProvider still = constant_state(1.5);
  const std::vector<Point> c_pts = SampleSet{}.points([](double) { return 2.0; });
  const ResidualReport c_base = governing_residual(still, zero_source, {4.0}, c_pts);
  int count = 0;
  double worst = 0.0;
  auto check = [&](const GroupElement& e, const FieldProvider& f, const ConstitutiveTriplet& tr,
                   const PhysConstants& phys, const std::vector<Point>& pts, const ResidualReport& base,
                   const std::string& label) {
    const ResidualReport orb = orbit_residual(e, f, tr, phys, pts);
    ++count;
    worst = std::max(worst, orb.max_rel() / std::max(base.max_rel(), roundoff_floor));
    o.require(orbit_within(orb, base), label + " " + element_name(e) + " " + sci(orb.max_rel()));
  };
  for (double eps : {-1.0, -0.5, 0.5, 1.0}) {
    const FieldProvider st = provider_of(stationary);
    check(Rotation{TimeFunction::constant(1.0), eps}, st, st_tr, phys_of(stationary), st_pts, st_base, "stationary");
    check(Rotation{TimeFunction::sine(), eps}, st, st_tr, phys_of(stationary), st_pts, st_base, "stationary");
    check(Galilei{TimeFunction::linear(0.0, 1.0), Axis::x, eps}, still, zero_source, {4.0}, c_pts, c_base, "constant");
    check(PressureShift{TimeFunction::quadratic(1.0), eps}, st, st_tr, phys_of(stationary), st_pts, st_base,
          "stationary");
    check(TimeTranslation{eps}, provider_of(steady), triplet_of(steady), phys_of(steady), sd_pts, sd_base, "steady");
    check(Scale{eps, pl.m, pl.n}, st, st_tr, phys_of(stationary), st_pts, st_base, "stationary");
  }
  o.note(std::to_string(count) + " orbits, worst orbit/base " + sci(worst));
  return o;
}

Outcome reduction_cross_checks() {
  Outcome o;
  SampleSet set;
  set.n_r = 12;
  set.n_theta = 12;
  double lift = 0.0;
  for (const SolutionFamily& sol : all_families()) {
    const FieldProvider lifted = lift_profiles(reduced_profiles_of(sol));
    for (const Point& p : sample_points(sol, set)) {
      lift = std::max(lift, jet_rel_gap(lifted(p.t, p.x, p.y), eval_jet(sol, p.t, p.x, p.y)));
    }
  }
  o.require(lift <= 1e-10, "lift gap " + sci(lift));

  const StationaryFront st(fig34());
  const double red = reduced_ode_residual(st.profiles()).max_linf();
  o.require(red <= 1e-9, "stationary reduced " + sci(red));
  const SteadyState sd({});
  const SteadyReport srep = steady_residual(sd.profiles(), sd.triplet(), sd.phys(), default_r_samples(1.0));
  o.require(srep.governing.max_linf() <= 1e-9, "steady reduced " + sci(srep.governing.max_linf()));

  // Gaussian branch (c2 = 0) and linear branch against their closed forms.
  double ode = 0.0;
  {
    const PhysConstants phys{4.0};
    PowerLawParams p{2.0, 0.0, 1.0, -1.0, 2.0};
    p.s0 = linked_s0(p.n, p.sigma0, phys);
    const double c1 = 1.5;
    const LambdaTrajectory tr = integrate_lambda_ode(p, phys, 0.0, 0.1, 2.0, c1 * std::exp(-0.01 / 8.0));
    for (int k = 0; k <= 190; ++k) {
      const double r = 0.1 + 0.01 * k;
      const double want = c1 * std::exp(-r * r / 8.0);
      ode = std::max(ode, std::abs(tr(r) - want) / want);
    }
  }
  {
    const double c1 = 1.5, lambda = 4.0, m = 1.0;
    PowerLawParams p{(1.0 + m) / (4.0 * (1.0 + lambda) * std::pow(c1, 1.0 + m)), 0.0, 1.0, m, 3.0};
    p.s0 = linked_s0(p.n, p.sigma0, {lambda});
    const LambdaTrajectory tr = integrate_lambda_ode(p, {lambda}, 0.0, 1.0, 3.0, c1);
    for (int k = 0; k <= 200; ++k) {
      const double r = 1.0 + 0.01 * k;
      ode = std::max(ode, std::abs(tr(r) - c1 * r) / (c1 * r));
    }
  }
  o.require(ode <= 1e-6, "lambda ode rel " + sci(ode));

  const ReducedBcReport bc = reduced_bc_residual(st.profiles());
  o.require(bc.equivalent_branch, "boundary branch not equivalent");
  o.require(bc.general.max_linf() <= 1e-10 && bc.simplified.max_linf() <= 1e-10,
            "boundary forms " + sci(bc.general.max_linf()) + "/" + sci(bc.simplified.max_linf()));
  // Both boundary formulations must also flag the same broken profile.
  ReducedProfiles off = st.profiles();
  const auto k = st.constants();
  const auto p = st.params();
  auto g = [=](const auto& r) {
    return detail::gaussian_profile(r, k.c1, 1.01 * p.c3, p.c4, k.sigma0, p.n, p.d0, p.lambda, k.delta);
  };
  off.pressure = radial_function([g](const auto& r) { return g(r).pressure; });
  off.speed = radial_function([g](const auto& r) { return g(r).speed; });
  const ReducedBcReport bad = reduced_bc_residual(off);
  o.require(bad.general.max_linf() > 1e-4 && bad.simplified.max_linf() > 1e-4, "perturbed boundary not detected");
  o.note("lift " + sci(lift) + ", reduced " + sci(std::max(red, srep.governing.max_linf())) + ", ode " + sci(ode));
  return o;
}

Outcome numerics_gates() {
  Outcome o;
  const SolutionFamily st = StationaryFront(fig34());
  SampleSet set;
  set.times = {1.0};
  set.r_min_fraction = 0.2;
  set.n_r = 6;
  set.n_theta = 8;
  const std::vector<Point> pts = sample_points(st, set);
  const double delta = boundary_of(st).delta;
  for (auto [scheme, floor, hs] : {std::tuple{2, 1.9, std::vector<double>{8e-3, 4e-3, 2e-3, 1e-3}},
                                   std::tuple{4, 3.8, std::vector<double>{4e-2, 2e-2, 1e-2}}}) {
    std::vector<double> errors;
    for (double f : hs) {
      const double h = f * delta;
      const auto rep = governing_residual(fd_provider(st, scheme, h), triplet_of(st), phys_of(st), pts,
                                          Engine{Engine::Kind::fd, scheme, h});
      errors.push_back(rep.max_linf());
    }
    const double order = richardson_order(errors);
    o.require(order >= floor, "scheme " + std::to_string(scheme) + " order " + sci(order));
    o.note("scheme " + std::to_string(scheme) + " order " + sci(order));
  }

  double path = 0.0;
  for (double a : {0.0, 0.1, 0.5, 1.0, 2.0, 3.0, 4.0}) {
    for (double r : {0.01, 0.05, 0.3, 1.0, 2.5, 7.0}) {
      for (double d : {0.02, 0.5, 1.5, 3.0, 10.0, 20.0}) {
        if (!(r < d)) continue;
        path = std::max(path, std::abs(exp_over_z_integral(a, r, d, ExpIntegralPath::exponential_integral) -
                                       exp_over_z_integral(a, r, d, ExpIntegralPath::quadrature)));
      }
    }
  }
  o.require(path <= 1e-12, "exp integral paths " + sci(path));

  double gap = 0.0;
  SampleSet jets;
  jets.n_r = 12;
  jets.n_theta = 12;
  jets.r_min_fraction = 0.05;
  for (const SolutionFamily& sol : all_families()) {
    const ValueProvider values = [&sol](double t, double x, double y) { return eval_value(sol, t, x, y); };
    const double g = cross_engine_check(provider_of(sol), values, sample_points(sol, jets),
                                        3e-4 * boundary_of(sol).delta, is_time_dependent(sol) ? 1e-4 : 0.0);
    o.require(g <= 1e-6, family_name(sol) + " jet gap " + sci(g));
    gap = std::max(gap, g);
  }
  o.note("exp paths " + sci(path) + ", jet gap " + sci(gap));
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string cfg = (config_dir / "fig34_stationary.ini").string();
  const fs::path a = scratch() / "run_a", b = scratch() / "run_b";
  for (const fs::path& d : {a, b}) {
    o.require(run_cli({"verify", "--config", cfg, "--out", d.string()}) == cli::exit_pass, "verify failed");
    o.require(run_cli({"figure", "--figure", "4", "--grid", "41", "--out", d.string()}) == cli::exit_pass,
              "figure failed");
  }
  int files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    const std::string name = e.path().filename().string();
    const std::string x = slurp(e.path());
    o.require(!x.empty() && x == slurp(b / name), name + " differs");
    ++files;
  }
  o.require(files >= 5, "expected verify and figure outputs");
  o.note(std::to_string(files) + " files identical");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reference constants", 1.0, reference_constants},
      {2, "exact-solution residuals", 10.0, exact_solution_residuals},
      {3, "family coverage", 20.0, family_coverage},
      {4, "figure-1 consistency", 60.0, figure_one_consistency},
      {5, "orbit suite", 30.0, orbit_suite},
      {6, "reduction cross-checks", 60.0, reduction_cross_checks},
      {7, "numerics gates", 60.0, numerics_gates},
      {8, "determinism", 60.0, determinism},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.budget_s, "over time budget");
    if (!o.pass) ++failed;
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  fs::remove_all(scratch());
  return failed == 0 ? 0 : 1;
}
