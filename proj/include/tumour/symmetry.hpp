#pragma once

// Lie group actions on solutions, applied by pullback: the transformed field
// at (t, x, y) is built from the source jet at the inverse image point.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <variant>
#include <vector>

#include "tumour/core_model.hpp"
#include "tumour/errors.hpp"
#include "tumour/exact_solutions.hpp"
#include "tumour/field.hpp"
#include "tumour/residuals.hpp"

namespace tumour {

/// A smooth function of time with its first two derivatives.
struct TimeFunction {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;

  double operator()(double t) const { return f(t); }

  static TimeFunction constant(double c) {
    return {[c](double) { return c; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
  }
  /// a + b t
  static TimeFunction linear(double a, double b) {
    return {[a, b](double t) { return a + b * t; }, [b](double) { return b; }, [](double) { return 0.0; }};
  }
  /// c t²
  static TimeFunction quadratic(double c) {
    return {[c](double t) { return c * t * t; }, [c](double t) { return 2.0 * c * t; },
            [c](double) { return 2.0 * c; }};
  }
  /// a sin(w t)
  static TimeFunction sine(double a = 1.0, double w = 1.0) {
    return {[a, w](double t) { return a * std::sin(w * t); }, [a, w](double t) { return a * w * std::cos(w * t); },
            [a, w](double t) { return -a * w * w * std::sin(w * t); }};
  }
};

enum class Axis { x, y };

/// x* = Q(εf)x, u* = Q(εf)(u + εḟ(y, −x)), α, p unchanged; Q(θ) = [[cos, sin], [−sin, cos]].
struct Rotation {
  TimeFunction f = TimeFunction::constant(1.0);
  double eps = 0.0;
};

/// x*_axis = x_axis + εg(t), u*_axis = u_axis + εġ.
struct Galilei {
  TimeFunction g = TimeFunction::linear(0.0, 1.0);
  Axis axis = Axis::x;
  double eps = 1.0;
};

/// p* = p + εF(t).
struct PressureShift {
  TimeFunction F = TimeFunction::constant(0.0);
  double eps = 1.0;
};

/// t* = t + ε.
struct TimeTranslation {
  double eps = 0.0;
};

/// t* = e^{2(1−n)ε}t, x* = e^{(1+m)ε}x, α* = e^{2ε}α, u* = e^{(m+2n−1)ε}u, p* = e^{2nε}p.
struct Scale {
  double eps = 0.0;
  double m = 0.0;
  double n = 0.0;
};

using GroupElement = std::variant<Rotation, Galilei, PressureShift, TimeTranslation, Scale>;

inline std::string element_name(const GroupElement& e) {
  static constexpr const char* names[] = {"rotation", "galilei", "pressure-shift", "time-translation", "scale"};
  return names[e.index()];
}

/// Same element with ε negated.
inline GroupElement inverse(GroupElement e) {
  std::visit([](auto& g) { g.eps = -g.eps; }, e);
  return e;
}

namespace detail {

using L = long double;

struct Mat2 {
  L a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static Mat2 zero() { return {0, 0, 0, 0}; }
  static Mat2 scalar(L s) { return {s, 0, 0, s}; }
  std::array<L, 2> apply(L x, L y) const { return {a * x + b * y, c * x + d * y}; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const {
    const L det = a * d - b * c;
    return {d / det, -b / det, -c / det, a / det};
  }
};

// Pullback data at one output time t:
//   source point  t_s = a t + c,  x_s = M x + b
//   α' = kα α_s,  p' = kp p_s + φ,  u' = ku Q u_s + W x + v
struct Action {
  L a = 1, c = 0;
  Mat2 M{}, Mdot = Mat2::zero();
  std::array<L, 2> b{0, 0}, bdot{0, 0};
  L k_alpha = 1, k_p = 1, phi = 0, phidot = 0;
  L k_u = 1;
  Mat2 Q{}, Qdot = Mat2::zero();
  Mat2 W = Mat2::zero(), Wdot = Mat2::zero();
  std::array<L, 2> v{0, 0}, vdot{0, 0};
};

inline Mat2 rotation_q(L theta) {
  const L cs = std::cos(theta);
  const L sn = std::sin(theta);
  return {cs, sn, -sn, cs};
}

inline Action action_at(const GroupElement& elem, double t) {
  Action A;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Rotation>) {
          const L th = g.eps * g.f(t);
          const L thd = g.eps * g.f.df(t);
          const L thdd = g.eps * g.f.d2f(t);
          const L cs = std::cos(th);
          const L sn = std::sin(th);
          A.Q = rotation_q(th);
          A.Qdot = {-sn * thd, cs * thd, -cs * thd, -sn * thd};
          A.M = A.Q.transpose();
          A.Mdot = A.Qdot.transpose();
          A.W = {0, thd, -thd, 0};
          A.Wdot = {0, thdd, -thdd, 0};
        } else if constexpr (std::is_same_v<G, Galilei>) {
          const std::size_t i = g.axis == Axis::x ? 0 : 1;
          A.b[i] = -g.eps * g.g(t);
          A.bdot[i] = -g.eps * g.g.df(t);
          A.v[i] = g.eps * g.g.df(t);
          A.vdot[i] = g.eps * g.g.d2f(t);
        } else if constexpr (std::is_same_v<G, PressureShift>) {
          A.phi = g.eps * g.F(t);
          A.phidot = g.eps * g.F.df(t);
        } else if constexpr (std::is_same_v<G, TimeTranslation>) {
          A.c = -g.eps;
        } else {
          A.a = std::exp(-2.0L * (1.0L - g.n) * g.eps);
          A.M = Mat2::scalar(std::exp(-(1.0L + g.m) * g.eps));
          A.k_alpha = std::exp(2.0L * g.eps);
          A.k_u = std::exp((g.m + 2.0L * g.n - 1.0L) * g.eps);
          A.k_p = std::exp(2.0L * g.n * g.eps);
        }
      },
      elem);
  return A;
}

// k·f_s pulled back through x_s = M x + b, t_s = a t + c; xs_dot = Ṁx + ḃ.
inline Jet pull_scalar(const Jet& s, const Action& A, L k, L add, L add_t, const std::array<L, 2>& xs_dot) {
  const Mat2& M = A.M;
  Jet o;
  o.v = k * s.v + add;
  o.x = k * (M.a * s.x + M.c * s.y);
  o.y = k * (M.b * s.x + M.d * s.y);
  // Mᵀ H M
  const L h11 = s.xx, h12 = s.xy, h22 = s.yy;
  const L m11 = M.a, m12 = M.b, m21 = M.c, m22 = M.d;
  o.xx = k * (m11 * m11 * h11 + 2 * m11 * m21 * h12 + m21 * m21 * h22);
  o.xy = k * (m11 * m12 * h11 + (m11 * m22 + m21 * m12) * h12 + m21 * m22 * h22);
  o.yy = k * (m12 * m12 * h11 + 2 * m12 * m22 * h12 + m22 * m22 * h22);
  o.t = k * (A.a * s.t + s.x * xs_dot[0] + s.y * xs_dot[1]) + add_t;
  return o;
}

inline FieldJet pull_jet(const FieldJet& s, const Action& A, L x, L y) {
  const auto md = A.Mdot.apply(x, y);
  const std::array<L, 2> xs_dot{md[0] + A.bdot[0], md[1] + A.bdot[1]};
  FieldJet o;
  o.alpha = pull_scalar(s.alpha, A, A.k_alpha, 0, 0, xs_dot);
  o.p = pull_scalar(s.p, A, A.k_p, A.phi, A.phidot, xs_dot);
  const Jet u1 = pull_scalar(s.u1, A, 1, 0, 0, xs_dot);
  const Jet u2 = pull_scalar(s.u2, A, 1, 0, 0, xs_dot);
  const L q[2][2] = {{A.Q.a, A.Q.b}, {A.Q.c, A.Q.d}};
  const L qd[2][2] = {{A.Qdot.a, A.Qdot.b}, {A.Qdot.c, A.Qdot.d}};
  const L w[2][2] = {{A.W.a, A.W.b}, {A.W.c, A.W.d}};
  const L wd[2][2] = {{A.Wdot.a, A.Wdot.b}, {A.Wdot.c, A.Wdot.d}};
  const L us[2] = {s.u1.v, s.u2.v};
  for (int i = 0; i < 2; ++i) {
    Jet& out = i == 0 ? o.u1 : o.u2;
    const L k0 = A.k_u * q[i][0];
    const L k1 = A.k_u * q[i][1];
    out.v = k0 * u1.v + k1 * u2.v + w[i][0] * x + w[i][1] * y + A.v[i];
    out.x = k0 * u1.x + k1 * u2.x + w[i][0];
    out.y = k0 * u1.y + k1 * u2.y + w[i][1];
    out.xx = k0 * u1.xx + k1 * u2.xx;
    out.xy = k0 * u1.xy + k1 * u2.xy;
    out.yy = k0 * u1.yy + k1 * u2.yy;
    out.t = k0 * u1.t + k1 * u2.t + A.k_u * (qd[i][0] * us[0] + qd[i][1] * us[1]) + wd[i][0] * x +
            wd[i][1] * y + A.vdot[i];
  }
  return o;
}

}  // namespace detail

/// Pullback of a field provider under a group element.
inline FieldProvider transform_field(const GroupElement& elem, FieldProvider source) {
  return [elem, source = std::move(source)](double t, double x, double y) {
    const detail::Action A = detail::action_at(elem, t);
    const auto xs = A.M.apply(x, y);
    const double ts = static_cast<double>(A.a * t + A.c);
    if (std::holds_alternative<TimeTranslation>(elem) && !(ts > 0.0)) {
      throw DomainError("transform_field: inverse time " + std::to_string(ts) + " outside the source domain");
    }
    const FieldJet s = source(ts, static_cast<double>(xs[0] + A.b[0]), static_cast<double>(xs[1] + A.b[1]));
    return detail::pull_jet(s, A, x, y);
  };
}

/// Image of a source-domain point under the element (the forward point map).
inline Point forward_point(const GroupElement& elem, const Point& src) {
  // t_s = a t + c with a, c independent of t for every element.
  const detail::Action A0 = detail::action_at(elem, src.t);
  const double t = static_cast<double>((src.t - A0.c) / A0.a);
  const detail::Action A = detail::action_at(elem, t);
  const auto x = A.M.inverse().apply(src.x - A.b[0], src.y - A.b[1]);
  return {t, static_cast<double>(x[0]), static_cast<double>(x[1])};
}

inline std::vector<Point> forward_points(const GroupElement& elem, const std::vector<Point>& src) {
  std::vector<Point> out;
  out.reserve(src.size());
  for (const Point& p : src) out.push_back(forward_point(elem, p));
  return out;
}

/// Scale needs the power-law triplet with the same (m, n); everything else is
/// admitted by every triplet.
inline void check_applicable(const GroupElement& elem, const ConstitutiveTriplet& triplet) {
  const auto* s = std::get_if<Scale>(&elem);
  if (s == nullptr) return;
  const auto* pl = std::get_if<PowerLawParams>(&triplet);
  if (pl == nullptr) {
    throw InapplicableSymmetryError("scale symmetry requires the power-law triplet");
  }
  if (!close_rel(pl->m, s->m) || !close_rel(pl->n, s->n)) {
    throw InapplicableSymmetryError("scale symmetry exponents (m, n) do not match the triplet");
  }
}

/// Governing residual of the transformed solution on the image of `samples`.
inline ResidualReport orbit_residual(const GroupElement& elem, const FieldProvider& field,
                                     const ConstitutiveTriplet& triplet, const PhysConstants& phys,
                                     const std::vector<Point>& samples) {
  check_applicable(elem, triplet);
  return governing_residual(transform_field(elem, field), triplet, phys, forward_points(elem, samples));
}

inline ResidualReport orbit_residual(const GroupElement& elem, const SolutionFamily& sol,
                                     const ConstitutiveTriplet& triplet, const PhysConstants& phys,
                                     const std::vector<Point>& samples) {
  return orbit_residual(elem, provider_of(sol), triplet, phys, samples);
}

/// Relative residuals below this are roundoff; orbit comparisons floor the base there.
inline constexpr double roundoff_floor = 1e-16;

/// orbit ≤ factor · base, comparing scale-free (term-normalised) L∞ norms.
inline bool orbit_within(const ResidualReport& orbit, const ResidualReport& base, double factor = 10.0) {
  return orbit.max_rel() <= factor * std::max(base.max_rel(), roundoff_floor);
}

/// Max over n_theta points of Γ = 0 at time t of |X(Γ)|, X the element's
/// generator restricted to (t, x, y). Zero means the boundary is invariant.
inline double boundary_invariance(const GroupElement& elem, const BoundaryCircle& b, double t = 1.0,
                                  int n_theta = 64) {
  const double R = b.radius(t);
  double worst = 0.0;
  for (int k = 0; k < n_theta; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n_theta;
    const double x = R * std::cos(th);
    const double y = R * std::sin(th);
    const double gx = 2.0 * x;
    const double gy = 2.0 * y;
    const double gt = b.level_t(t);
    const double v = std::visit(
        [&](const auto& g) -> double {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Rotation>) {
            return g.f(t) * (y * gx - x * gy);
          } else if constexpr (std::is_same_v<G, Galilei>) {
            return g.g(t) * (g.axis == Axis::x ? gx : gy);
          } else if constexpr (std::is_same_v<G, PressureShift>) {
            return 0.0;
          } else if constexpr (std::is_same_v<G, TimeTranslation>) {
            return gt;
          } else {
            return 2.0 * (1.0 - g.n) * t * gt + (1.0 + g.m) * (x * gx + y * gy);
          }
        },
        elem);
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Reduced plane: (Λ, U¹, U², P) of ω = (ω1, ω2) after removing t by the scale
// ansatz. The plane system admits rotations and the two translations
// ∂_{ω_i} − γ∂_{U^i}.

/// Plane fields as jets in ω (the t entries are unused).
using PlaneProvider = std::function<FieldJet(double w1, double w2)>;

/// The t = 1 slice of a scale-invariant solution: there the ansatz is the identity.
inline PlaneProvider plane_slice(FieldProvider field) {
  return [field = std::move(field)](double w1, double w2) { return field(1.0, w1, w2); };
}

/// ω* = ω + ε e_axis, U*_axis = U_axis − γε.
struct PlaneTranslation {
  Axis axis = Axis::x;
  double eps = 0.0;
  double gamma = 0.0;
};

inline PlaneProvider transform_plane(const PlaneTranslation& g, PlaneProvider source) {
  return [g, source = std::move(source)](double w1, double w2) {
    const double s1 = g.axis == Axis::x ? w1 - g.eps : w1;
    const double s2 = g.axis == Axis::y ? w2 - g.eps : w2;
    FieldJet j = source(s1, s2);
    (g.axis == Axis::x ? j.u1 : j.u2).v -= g.gamma * g.eps;
    return j;
  };
}

/// Residuals of the reduced plane system at ω for the power-law triplet.
inline std::array<TermResidual, 4> plane_pointwise(const FieldJet& j, double w1, double w2,
                                                   const PowerLawParams& pl, const PhysConstants& phys) {
  using L = long double;
  const ScaleExponents se = scale_exponents(pl.m, pl.n);
  const L g = se.gamma;
  const L l = phys.lambda;
  const Jet& a = j.alpha;
  const Jet& u = j.u1;
  const Jet& v = j.u2;
  const Jet& p = j.p;
  const L av = a.v;
  const L an = std::pow(av, static_cast<L>(pl.n));
  const L an1 = std::pow(av, static_cast<L>(pl.n - 1.0));
  const L am = std::pow(av, static_cast<L>(pl.m));
  const L am1 = std::pow(av, static_cast<L>(pl.m - 1.0));
  std::array<TermResidual, 4> r;
  r[0] = detail::term_residual(std::array<L, 7>{g * w1 * a.x, g * w2 * a.y, L(a.x) * u.v + av * u.x,
                                                 L(a.y) * v.v + av * v.y, -L(pl.s0) * an,
                                                 -av / L(pl.n - 1.0), 0});
  r[1] = detail::term_residual(std::array<L, 4>{L(u.x) + v.y, -L(pl.d0) * am * (p.xx + p.yy),
                                                 -L(pl.d0) * pl.m * am1 * (a.x * p.x + a.y * p.y), 0});
  r[2] = detail::term_residual(std::array<L, 8>{
      (2 + l) * (a.x * u.x + av * u.xx), l * (a.x * v.y + av * v.xy), L(a.y) * (u.y + v.x),
      av * (u.yy + v.xy), -L(p.x), -L(pl.sigma0) * pl.n * an1 * a.x, 0, 0});
  r[3] = detail::term_residual(std::array<L, 8>{
      (2 + l) * (a.y * v.y + av * v.yy), l * (a.y * u.x + av * u.xy), L(a.x) * (u.y + v.x),
      av * (u.xy + v.xx), -L(p.y), -L(pl.sigma0) * pl.n * an1 * a.y, 0, 0});
  return r;
}

inline ResidualReport plane_residual(const PlaneProvider& plane, const PowerLawParams& pl,
                                     const PhysConstants& phys, const std::vector<std::array<double, 2>>& pts) {
  std::vector<detail::NormAccumulator> acc;
  for (const auto& n : governing_names()) acc.emplace_back(n);
  for (const auto& w : pts) {
    const FieldJet j = plane(w[0], w[1]);
    const auto r = plane_pointwise(j, w[0], w[1], pl, phys);
    for (std::size_t e = 0; e < 4; ++e) acc[e].add(r[e], Point{1.0, w[0], w[1]});
  }
  ResidualReport rep;
  for (auto& a : acc) rep.equations.push_back(a.finish());
  rep.count = pts.size();
  return rep;
}

}  // namespace tumour
