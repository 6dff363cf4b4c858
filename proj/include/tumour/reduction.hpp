#pragma once

// The rotation-invariant radial reduction: lifting profiles back to fields,
// the radial ODE system and its boundary conditions, the first integral for
// the speed, the separable ODE for Λ*, the overdetermined pair for Λ*, and
// pressure recovery by quadrature.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tumour/core_model.hpp"
#include "tumour/errors.hpp"
#include "tumour/field.hpp"
#include "tumour/numerics/ode.hpp"
#include "tumour/numerics/quadrature.hpp"
#include "tumour/profiles.hpp"
#include "tumour/residuals.hpp"

namespace tumour {

/// n log-spaced radii on [fraction·δ, δ], the last one exactly δ.
inline std::vector<double> default_r_samples(double delta, int n = 64, double fraction = 1e-2) {
  if (!(delta > 0.0)) throw DomainError("default_r_samples: delta > 0 required");
  if (n < 1) throw std::invalid_argument("default_r_samples: n >= 1 required");
  std::vector<double> out;
  const double lo = fraction * delta;
  for (int i = 0; i < n; ++i) {
    const double s = n == 1 ? 1.0 : static_cast<double>(i) / (n - 1);
    out.push_back(i == n - 1 ? delta : lo * std::pow(delta / lo, s));
  }
  return out;
}

namespace detail {

using H3 = Dual<Dual<long double, 3>, 3>;

// f∘r for a radial jet f and a (t, x, y) Hessian-carrying r.
inline H3 compose(const RadialJet& f, const H3& r) {
  H3 g;
  g.v.v = f.v;
  for (std::size_t i = 0; i < 3; ++i) {
    g.v.d[i] = f.d1 * r.v.d[i];
    g.d[i].v = f.d1 * r.d[i].v;
    for (std::size_t j = 0; j < 3; ++j) g.d[i].d[j] = f.d2 * r.d[i].v * r.v.d[j] + f.d1 * r.d[i].d[j];
  }
  return g;
}

inline RadialJet jet_mul(const RadialJet& a, const RadialJet& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2};
}

inline RadialJet jet_pow(const RadialJet& a, long double p) {
  if (p == 0) return {1.0L, 0.0L, 0.0L};
  const long double f = std::pow(a.v, p);
  const long double f1 = p * std::pow(a.v, p - 1);
  const long double f2 = p * (p - 1) * std::pow(a.v, p - 2);
  return {f, f1 * a.d1, f2 * a.d1 * a.d1 + f1 * a.d2};
}

inline bool finite_jet(const RadialJet& j) {
  return std::isfinite(j.v) && std::isfinite(j.d1) && std::isfinite(j.d2);
}

}  // namespace detail

/// Rebuilds (α, u¹, u², p) on (t, x, y) from radial profiles. Scale ansatz:
/// u = t^{−γ−1}R*(r)(cos, sin)(Φ*+φ), α = t^{1/(1−n)}Λ*, p = t^{n/(1−n)}P*,
/// with (ω₁, ω₂) = (x, y)t^γ in polar form (r, φ). Steady ansatz: t-free.
inline FieldProvider lift_profiles(const ReducedProfiles& prof) {
  double gamma = 0.0;
  double ea = 0.0;  // exponent of t on α
  double ep = 0.0;  // exponent of t on p
  bool scale = false;
  if (const auto* s = std::get_if<ScaleAnsatz>(&prof.ansatz)) {
    if (s->n == 1.0) throw DegenerateError("lift_profiles: n = 1 admits no scale ansatz");
    gamma = scale_exponents(s->m, s->n).gamma;
    ea = 1.0 / (1.0 - s->n);
    ep = s->n / (1.0 - s->n);
    scale = true;
  }
  return [prof, gamma, ea, ep, scale](double t, double x, double y) {
    using detail::H3;
    using L = long double;
    if (scale && !(t > 0.0)) throw DomainError("lift_profiles: t > 0 required");
    const L tl = scale ? static_cast<L>(t) : 1.0L;
    const H3 T = hessian_variable<3, L>(tl, 0);
    const H3 X = hessian_variable<3, L>(static_cast<L>(x), 1);
    const H3 Y = hessian_variable<3, L>(static_cast<L>(y), 2);
    const H3 tg = scale ? pow(T, gamma) : H3(1.0);
    const H3 w1 = X * tg;
    const H3 w2 = Y * tg;
    const H3 r = sqrt(w1 * w1 + w2 * w2);
    if (!(r.v.v > 0.0L)) throw SingularityError("lift_profiles: origin of the reduced plane");
    const long double rr = r.v.v;
    const RadialJet jl = prof.lambda(rr);
    const RadialJet jp = prof.pressure(rr);
    const RadialJet js = prof.speed(rr);
    const RadialJet jf = prof.angle(rr);
    for (const RadialJet* j : {&jl, &jp, &js, &jf}) {
      if (!detail::finite_jet(*j)) {
        throw SingularityError("lift_profiles: profile not finite at r=" + std::to_string(static_cast<double>(rr)));
      }
    }
    const H3 Lam = detail::compose(jl, r);
    const H3 P = detail::compose(jp, r);
    const H3 R = detail::compose(js, r);
    const H3 Phi = detail::compose(jf, r);
    const H3 cphi = w1 / r;
    const H3 sphi = w2 / r;
    const H3 cP = cos(Phi);
    const H3 sP = sin(Phi);
    const H3 fu = scale ? pow(T, -gamma - 1.0) : H3(1.0);
    const H3 fa = scale ? pow(T, ea) : H3(1.0);
    const H3 fp = scale ? pow(T, ep) : H3(1.0);
    FieldJet out{jet_from(fa * Lam), jet_from(fu * R * (cP * cphi - sP * sphi)),
                 jet_from(fu * R * (sP * cphi + cP * sphi)), jet_from(fp * P)};
    if (!scale) out.alpha.t = out.u1.t = out.u2.t = out.p.t = 0.0L;
    return out;
  };
}

/// Same, with the scale ansatz exponents given explicitly.
inline FieldProvider lift_profiles(ReducedProfiles prof, double m, double n) {
  prof.ansatz = ScaleAnsatz{m, n};
  return lift_profiles(prof);
}

inline const std::array<std::string, 4>& radial_names() {
  static const std::array<std::string, 4> n{"mass", "mobility", "momentum_angular", "momentum_radial"};
  return n;
}

inline const std::array<std::string, 4>& radial_bc_names() {
  static const std::array<std::string, 4> n{"kinematic", "pressure", "traction_normal", "traction_shear"};
  return n;
}

inline const std::array<std::string, 3>& simplified_bc_names() {
  static const std::array<std::string, 3> n{"speed", "pressure", "speed_slope"};
  return n;
}

/// Profile values and derivatives at one radius.
struct RadialState {
  RadialJet lambda;
  RadialJet pressure;
  RadialJet speed;
  RadialJet angle;
};

inline RadialState radial_state(const ReducedProfiles& p, double r) {
  return {p.lambda(r), p.pressure(r), p.speed(r), p.angle(r)};
}

/// The four radial equations at r, each as LHS − RHS. γ and the dilation
/// source Λ/(n−1) come from the scale ansatz; the steady ansatz has neither.
inline std::array<TermResidual, 4> radial_pointwise(const RadialState& s, double r_in,
                                                    const ReducedProfiles& prof) {
  using L = long double;
  L gamma = 0;
  L dilation = 0;
  if (const auto* a = std::get_if<ScaleAnsatz>(&prof.ansatz)) {
    gamma = scale_exponents(a->m, a->n).gamma;
    dilation = 1.0L / (a->n - 1.0L);
  }
  const ConstitutiveValues c = constitutive_eval(prof.triplet, static_cast<double>(s.lambda.v));
  const L l = prof.phys.lambda;
  const L r = r_in;
  const L Lv = s.lambda.v, L1 = s.lambda.d1;
  const L P1 = s.pressure.d1, P2 = s.pressure.d2;
  const L R = s.speed.v, R1 = s.speed.d1, R2 = s.speed.d2;
  const L F = s.angle.v, F1 = s.angle.d1, F2 = s.angle.d2;
  const L cF = std::cos(F), sF = std::sin(F);
  const L D = c.D, dD = c.dD, S = c.S, dLS = c.d_alpha_sigma;
  std::array<TermResidual, 4> out;
  // γr²Λ′ + (rΛR cosΦ)′ − rS − rΛ/(n−1)
  out[0] = detail::term_residual(std::array<L, 7>{gamma * r * r * L1, Lv * R * cF, r * L1 * R * cF,
                                                  r * Lv * R1 * cF, -r * Lv * R * sF * F1, -r * S,
                                                  -r * Lv * dilation});
  // (rR cosΦ)′ − (rD P′)′
  out[1] = detail::term_residual(
      std::array<L, 6>{R * cF, r * R1 * cF, -r * R * sF * F1, -D * P1, -r * dD * L1 * P1, -r * D * P2});
  // (1+λ)RΛ′ sin2Φ − (2+λ)(rRΛΦ′)′ − (2+λ)rΛR′Φ′ − r((ΛΣ)′ + P′) sinΦ
  out[2] = detail::term_residual(std::array<L, 8>{
      (1 + l) * R * L1 * std::sin(2 * F), -(2 + l) * R * Lv * F1, -(2 + l) * r * R1 * Lv * F1,
      -(2 + l) * r * R * L1 * F1, -(2 + l) * r * R * Lv * F2, -(2 + l) * r * Lv * R1 * F1,
      -r * dLS * L1 * sF, -r * P1 * sF});
  // (1+λ)rRΛ′ cos2Φ + (2+λ)r(rΛR′)′ − (2+λ)ΛR(1 + r²Φ′²) − rRΛ′ − r²((ΛΣ)′ + P′) cosΦ
  out[3] = detail::term_residual(std::array<L, 9>{
      (1 + l) * r * R * L1 * std::cos(2 * F), (2 + l) * r * Lv * R1, (2 + l) * r * r * L1 * R1,
      (2 + l) * r * r * Lv * R2, -(2 + l) * Lv * R, -(2 + l) * Lv * R * r * r * F1 * F1, -r * R * L1,
      -r * r * dLS * L1 * cF, -r * r * P1 * cF});
  return out;
}

/// Norms of the four radial equations over r_samples (all must be positive).
inline ResidualReport reduced_ode_residual(const ReducedProfiles& prof, const std::vector<double>& r_samples) {
  std::vector<RadialState> states(r_samples.size());
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < r_samples.size(); ++i) {
    const double r = r_samples[i];
    if (!(r > 0.0)) {
      bad.push_back(i);
      continue;
    }
    try {
      states[i] = radial_state(prof, r);
      for (const RadialJet* j : {&states[i].lambda, &states[i].pressure, &states[i].speed, &states[i].angle}) {
        if (!detail::finite_jet(*j)) throw SingularityError("non-finite profile");
      }
    } catch (const SingularityError&) {
      bad.push_back(i);
    }
  }
  if (!bad.empty()) {
    const std::string what = "reduced_ode_residual: " + std::to_string(bad.size()) +
                             " singular radius sample(s), first index " + std::to_string(bad.front());
    throw SingularSampleError(what, std::move(bad));
  }
  std::vector<detail::NormAccumulator> acc;
  for (const auto& n : radial_names()) acc.emplace_back(n);
  for (std::size_t i = 0; i < r_samples.size(); ++i) {
    const auto res = radial_pointwise(states[i], r_samples[i], prof);
    for (std::size_t e = 0; e < 4; ++e) acc[e].add(res[e], {1.0, r_samples[i], 0.0});
  }
  ResidualReport rep;
  for (auto& a : acc) rep.equations.push_back(a.finish());
  rep.count = r_samples.size();
  return rep;
}

inline ResidualReport reduced_ode_residual(const ReducedProfiles& prof) {
  return reduced_ode_residual(prof, default_r_samples(prof.delta));
}

struct ReducedBcReport {
  ResidualReport general;     // the four reduced conditions
  ResidualReport simplified;  // R* = P* = R*′ = 0
  // Φ*(δ) ≡ 0 mod π and no kinematic drift (γ = 0): the two sets are equivalent.
  bool equivalent_branch = false;
};

/// Boundary conditions at r = δ in reduced form (γr + R cosΦ = 0 for the
/// scale ansatz, R cosΦ = 0 for the steady one, then P = 0 and the two
/// traction conditions) and the simplified triple R = P = R′ = 0.
inline ReducedBcReport reduced_bc_residual(const ReducedProfiles& prof) {
  using L = long double;
  const double delta = prof.delta;
  const RadialState s = radial_state(prof, delta);
  L gamma = 0;
  if (const auto* a = std::get_if<ScaleAnsatz>(&prof.ansatz)) gamma = scale_exponents(a->m, a->n).gamma;
  const L l = prof.phys.lambda;
  const L r = delta;
  const L R = s.speed.v, R1 = s.speed.d1;
  const L F = s.angle.v, F1 = s.angle.d1;
  const Point at{1.0, delta, 0.0};
  std::array<TermResidual, 4> g;
  g[0] = detail::term_residual(std::array<L, 2>{gamma * r, R * std::cos(F)});
  g[1] = {static_cast<double>(s.pressure.v),
          static_cast<double>(std::abs(s.pressure.v) + r * std::abs(s.pressure.d1))};
  g[2] = detail::term_residual(std::array<L, 3>{(2 + l) * r * R1, (1 + l) * R * std::cos(2 * F), -R});
  g[3] = detail::term_residual(std::array<L, 2>{(2 + l) * r * R * F1, -(1 + l) * R * std::sin(2 * F)});
  const L speed_scale = std::abs(R) + r * std::abs(R1);
  std::array<TermResidual, 3> q{TermResidual{static_cast<double>(R), static_cast<double>(speed_scale)}, g[1],
                                TermResidual{static_cast<double>(r * R1), static_cast<double>(speed_scale)}};
  ReducedBcReport out;
  for (std::size_t e = 0; e < 4; ++e) {
    detail::NormAccumulator a(radial_bc_names()[e]);
    a.add(g[e], at);
    out.general.equations.push_back(a.finish());
  }
  for (std::size_t e = 0; e < 3; ++e) {
    detail::NormAccumulator a(simplified_bc_names()[e]);
    a.add(q[e], at);
    out.simplified.equations.push_back(a.finish());
  }
  out.general.count = out.simplified.count = 1;
  const double turns = static_cast<double>(F) / std::numbers::pi;
  out.equivalent_branch = gamma == 0 && std::abs(turns - std::round(turns)) < 1e-12;
  return out;
}

struct SteadyReport {
  ResidualReport governing;
  ReducedBcReport boundary;
};

/// Steady radial system and its boundary conditions for a general triplet.
inline SteadyReport steady_residual(ReducedProfiles prof, const GeneralTriplet& triplet,
                                    const PhysConstants& phys, const std::vector<double>& r_samples) {
  prof.ansatz = SteadyAnsatz{};
  prof.triplet = triplet;
  prof.phys = phys;
  return {reduced_ode_residual(prof, r_samples), reduced_bc_residual(prof)};
}

/// R* = β/r + d0Λ*^m P*′ for the power-law mobility. The P*′ profile must
/// carry P*″ and P*‴ in its derivative slots (see derivative_function).
inline RadialFunction first_integral_R(double beta, double d0, double m, RadialFunction lambda,
                                       RadialFunction p_prime) {
  return [=](double r) {
    const RadialJet l = lambda(r);
    if (!(l.v > 0.0L)) throw DomainError("first_integral_R: Lambda > 0 required");
    const long double rl = r;
    const RadialJet flow{beta / rl, -beta / (rl * rl), 2 * beta / (rl * rl * rl)};
    const RadialJet mob = detail::jet_mul({static_cast<long double>(d0), 0.0L, 0.0L}, detail::jet_pow(l, m));
    const RadialJet drift = detail::jet_mul(mob, p_prime(r));
    return RadialJet{flow.v + drift.v, flow.d1 + drift.d1, flow.d2 + drift.d2};
  };
}

/// How integrate_lambda_ode advanced Λ*.
enum class LambdaOdeMode {
  separable,    // Λ*′ = rhs(r)/coefficient(Λ*)
  second_order  // degenerate pair: the second-order equation for Λ* instead
};

struct LambdaTrajectory {
  Trajectory trajectory;  // state[0] = Λ*, and state[1] = Λ*′ in second_order mode
  LambdaOdeMode mode = LambdaOdeMode::separable;

  double operator()(double r) const { return trajectory(r)[0]; }
};

namespace detail {

// Coefficient of Λ′ in the separable first-order equation: A Λ^m + B Λ^{m+n−1}.
struct SeparableCoefficients {
  double A = 0.0;
  double B = 0.0;
};

inline SeparableCoefficients separable_coefficients(const PowerLawParams& p, const PhysConstants& phys) {
  const double l = phys.lambda;
  return {(1.0 + p.m) * (1.0 + l), (p.n - 1.0) * (p.n * p.sigma0 - (p.n - 1.0) * (2.0 + l) * p.s0)};
}

}  // namespace detail

/// Integrates the first-order equation
///   ((1+m)(1+λ)Λ^m + (n−1)(nσ0 − (n−1)(2+λ)s0)Λ^{m+n−1}) Λ′ = (1+m)r/(2d0) + (n−1)β/(d0 r)
/// from (r0, Λ0) to r1. When both sides vanish identically (m = −1, β = 0 and
/// the s0–σ0 link) it carries no information, and the second-order equation
///   Λ^mΛ″ − Λ^{m−1}Λ′² − λΛ^mΛ′/((2+λ)r) + 1/(d0(2+λ)) = 0
/// is integrated instead with Λ′(r0) = slope0, defaulting to −r0Λ0/(2d0).
inline LambdaTrajectory integrate_lambda_ode(const PowerLawParams& p, const PhysConstants& phys, double beta,
                                             double r0, double r1, double lambda0, const OdeSpec& spec = {},
                                             std::optional<double> slope0 = std::nullopt) {
  if (!(r0 > 0.0) || !(r1 > 0.0)) throw DomainError("integrate_lambda_ode: radii must be positive");
  if (!(lambda0 > 0.0)) throw DomainError("integrate_lambda_ode: Lambda0 > 0 required");
  if (!(p.d0 != 0.0)) throw DegenerateError("integrate_lambda_ode: d0 = 0");
  const auto k = detail::separable_coefficients(p, phys);
  const double b_scale = std::max({std::abs(p.n * p.sigma0), std::abs((p.n - 1.0) * (2.0 + phys.lambda) * p.s0),
                                   std::numeric_limits<double>::min()});
  const bool lhs_zero = k.A == 0.0 && std::abs(k.B) <= 1e-12 * std::abs(p.n - 1.0) * b_scale;
  const bool rhs_zero = 1.0 + p.m == 0.0 && beta == 0.0;
  LambdaTrajectory out;
  if (lhs_zero && !rhs_zero) {
    throw DegenerateError("integrate_lambda_ode: coefficient vanishes identically but the right side does not");
  }
  if (lhs_zero) {
    out.mode = LambdaOdeMode::second_order;
    const double l = phys.lambda;
    const double m = p.m;
    const double d0 = p.d0;
    const OdeRhs rhs = [l, m, d0](const OdeState& y, OdeState& dy, double r) {
      if (!(y[0] > 0.0)) throw DomainError("Lambda left the positive axis");
      dy[0] = y[1];
      dy[1] = y[1] * y[1] / y[0] + l / ((2.0 + l) * r) * y[1] - std::pow(y[0], -m) / (d0 * (2.0 + l));
    };
    const double s0 = slope0.value_or(-r0 * lambda0 / (2.0 * d0));
    out.trajectory = ode_integrate(rhs, {lambda0, s0}, r0, r1, spec);
    return out;
  }
  const double m = p.m;
  const double n = p.n;
  const double d0 = p.d0;
  const auto coeff = [k, m, n](double L) { return k.A * std::pow(L, m) + k.B * std::pow(L, m + n - 1.0); };
  const double c_start = coeff(lambda0);
  if (c_start == 0.0) throw DegenerateError("integrate_lambda_ode: coefficient vanishes at the initial value");
  const OdeRhs rhs = [=](const OdeState& y, OdeState& dy, double r) {
    if (!(y[0] > 0.0)) throw DomainError("Lambda left the positive axis");
    const double c = coeff(y[0]);
    if (c == 0.0 || (c > 0.0) != (c_start > 0.0)) {
      throw DomainError("coefficient of Lambda' changes sign at r=" + std::to_string(r));
    }
    dy[0] = ((1.0 + m) * r / (2.0 * d0) + (n - 1.0) * beta / (d0 * r)) / c;
  };
  out.trajectory = ode_integrate(rhs, {lambda0}, r0, r1, spec);
  return out;
}

/// Which overdetermined pair for Λ* to evaluate.
enum class OverdeterminedSystem {
  power_law,  // scale reduction with D = d0Λ^m, S = s0Λ^n, Σ = σ0Λ^{n−1}
  general     // steady reduction with an arbitrary triplet
};

/// Residual norms ("eq1", "eq2") of the overdetermined pair for Λ*.
/// power_law:
///   Λ^mΛ″ − Λ^{m−1}Λ′² − λΛ^mΛ′/((2+λ)r) + 1/(d0(2+λ)),
///   ((1+m)r + 2(n−1)β/r)(Λ″ − Λ′²/Λ) + 2(n−1)(nσ0/(2+λ) − (n−1)s0)Λ^{n−1}Λ′
///     + (1 + m − 2(n−1)βλ/((2+λ)r²))Λ′;
/// general:
///   Λ″ − Λ′²/Λ − λΛ′/((2+λ)r) + 1/((2+λ)D),
///   D(S/Λ − S′ + (ΛΣ)′/(2+λ))Λ′ − β/((2+λ)r).
inline ResidualReport overdetermined_residual(const RadialFunction& lambda, const ConstitutiveTriplet& triplet,
                                              const PhysConstants& phys, double beta,
                                              const std::vector<double>& r_samples,
                                              OverdeterminedSystem system) {
  using L = long double;
  const PowerLawParams* pl = std::get_if<PowerLawParams>(&triplet);
  if (system == OverdeterminedSystem::power_law && pl == nullptr) {
    throw std::invalid_argument("overdetermined_residual: power_law system needs PowerLawParams");
  }
  const L l = phys.lambda;
  detail::NormAccumulator e1("eq1");
  detail::NormAccumulator e2("eq2");
  for (double rs : r_samples) {
    if (!(rs > 0.0)) throw SingularSampleError("overdetermined_residual: r <= 0", {});
    const RadialJet j = lambda(rs);
    if (!(j.v > 0.0L)) throw DomainError("overdetermined_residual: Lambda > 0 required");
    const L r = rs;
    const L v = j.v, d1 = j.d1, d2 = j.d2;
    const Point at{1.0, rs, 0.0};
    if (system == OverdeterminedSystem::power_law) {
      const L m = pl->m, n = pl->n;
      const L lm = std::pow(v, m);
      e1.add(detail::term_residual(std::array<L, 4>{lm * d2, -lm / v * d1 * d1, -l / ((2 + l) * r) * lm * d1,
                                                    1 / (pl->d0 * (2 + l))}),
             at);
      const L front = (1 + m) * r + 2 * (n - 1) * beta / r;
      e2.add(detail::term_residual(std::array<L, 5>{
                 front * d2, -front * d1 * d1 / v,
                 2 * (n - 1) * (n * pl->sigma0 / (2 + l) - (n - 1) * pl->s0) * std::pow(v, n - 1) * d1,
                 (1 + m) * d1, -2 * (n - 1) * beta * l / ((2 + l) * r * r) * d1}),
             at);
    } else {
      const ConstitutiveValues c = constitutive_eval(triplet, static_cast<double>(v));
      e1.add(detail::term_residual(
                 std::array<L, 4>{d2, -d1 * d1 / v, -l / ((2 + l) * r) * d1, 1 / ((2 + l) * L(c.D))}),
             at);
      const L D = c.D;
      e2.add(detail::term_residual(std::array<L, 4>{D * c.S / v * d1, -D * c.dS * d1,
                                                    D * c.d_alpha_sigma / (2 + l) * d1, -beta / ((2 + l) * r)}),
             at);
    }
  }
  ResidualReport rep;
  rep.equations = {e1.finish(), e2.finish()};
  rep.count = r_samples.size();
  return rep;
}

/// Source in the Λ* mass balance after the scale reduction: s0Λ^n + Λ/(n−1).
inline std::function<double(double)> scale_source(const PowerLawParams& p) {
  if (p.n == 1.0) throw DegenerateError("scale_source: n = 1");
  return [p](double L) { return p.s0 * detail::ipow(L, p.n) + L / (p.n - 1.0); };
}

struct PressureQuadrature {
  // Q(anchor) = 0 for Q(ρ) = ∫ s·source(Λ(s)) ds; the default anchor is +∞.
  double anchor = std::numeric_limits<double>::infinity();
  QuadratureSpec quad{1e-12, 1e-15, 30};
};

/// P*(r) = c4 + c3 ln r − (1/d0)∫_r^δ Q(ρ)/ρ dρ with Q(ρ) = −∫_ρ^anchor s·source(Λ*(s)) ds:
/// the solution of (rP*′)′ = r·source(Λ*)/d0 that meets P*(δ) = c4 + c3 ln δ.
inline RadialFunction pressure_profile(RadialFunction lambda, std::function<double(double)> source, double d0,
                                       double c3, double c4, double delta, PressureQuadrature pq = {}) {
  if (d0 == 0.0) throw DegenerateError("pressure_profile: d0 = 0");
  if (!(delta > 0.0)) throw DomainError("pressure_profile: delta > 0 required");
  auto integrand = [lambda, source](double s) {
    const RadialJet j = lambda(s);
    // Λ* may underflow to 0 far out on the semi-infinite range.
    if (!(j.v >= 0.0L)) throw DomainError("pressure_profile: Lambda >= 0 required");
    return j.v == 0.0L ? 0.0 : s * source(static_cast<double>(j.v));
  };
  auto Q = [integrand, pq](double rho) {
    const std::function<double(double)> f = integrand;
    if (std::isinf(pq.anchor)) return -quad_semi_infinite(f, rho, pq.quad).value;
    return -quad_adaptive(f, rho, pq.anchor, pq.quad).value;
  };
  return [=](double r) {
    if (!(r > 0.0)) throw SingularityError("pressure_profile: r > 0 required");
    // Outer integral in s = ln ρ, where Q(ρ)/ρ dρ = Q(e^s) ds.
    const std::function<double(double)> outer = [&Q](double s) { return Q(std::exp(s)); };
    const double I = quad_adaptive(outer, std::log(r), std::log(delta), pq.quad).value;
    const double q = Q(r);
    const long double rl = r;
    RadialJet out;
    out.v = c4 + c3 * std::log(rl) - I / d0;
    out.d1 = c3 / rl + q / (d0 * rl);
    out.d2 = -c3 / (rl * rl) - q / (d0 * rl * rl) + integrand(r) / (d0 * rl);
    return out;
  };
}

/// pressure_profile evaluated on r_samples.
inline std::vector<RadialJet> pressure_from_lambda(RadialFunction lambda, std::function<double(double)> source,
                                                   double d0, double c3, double c4, double delta,
                                                   const std::vector<double>& r_samples,
                                                   PressureQuadrature pq = {}) {
  const RadialFunction P = pressure_profile(std::move(lambda), std::move(source), d0, c3, c4, delta, pq);
  std::vector<RadialJet> out;
  out.reserve(r_samples.size());
  for (double r : r_samples) out.push_back(P(r));
  return out;
}

}  // namespace tumour
