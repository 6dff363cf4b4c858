#pragma once

// Pointwise residuals of the governing PDEs and the free-boundary conditions,
// reduced to norms over deterministic sample sets.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "tumour/core_model.hpp"
#include "tumour/errors.hpp"
#include "tumour/exact_solutions.hpp"
#include "tumour/field.hpp"
#include "tumour/numerics/finite_difference.hpp"
#include "tumour/numerics/summation.hpp"

namespace tumour {

/// Points on concentric circles: log-spaced radii in [r_min_fraction·R(t), R(t)],
/// n_theta angles offset by half a step from the axes.
struct SampleSet {
  std::vector<double> times{0.5, 1.0, 2.0};
  double r_min_fraction = 1e-2;
  int n_r = 24;
  int n_theta = 24;

  std::vector<Point> points(const std::function<double(double)>& radius) const {
    if (n_r < 1 || n_theta < 1) throw std::invalid_argument("SampleSet: n_r, n_theta must be >= 1");
    if (!(r_min_fraction > 0.0 && r_min_fraction <= 1.0)) {
      throw std::invalid_argument("SampleSet: r_min_fraction must lie in (0, 1]");
    }
    std::vector<Point> out;
    out.reserve(times.size() * static_cast<std::size_t>(n_r * n_theta));
    for (double t : times) {
      if (!(t > 0.0)) throw DomainError("SampleSet: times must be positive");
      const double R = radius(t);
      const double r_min = r_min_fraction * R;
      for (int i = 0; i < n_r; ++i) {
        const double s = n_r == 1 ? 1.0 : static_cast<double>(i) / (n_r - 1);
        const double r = i == n_r - 1 ? R : r_min * std::pow(R / r_min, s);
        for (int j = 0; j < n_theta; ++j) {
          const double th = 2.0 * std::numbers::pi * (j + 0.5) / n_theta;
          out.push_back({t, r * std::cos(th), r * std::sin(th)});
        }
      }
    }
    return out;
  }
};

inline std::vector<Point> sample_points(const SolutionFamily& sol, const SampleSet& set) {
  const BoundaryCircle b = boundary_of(sol);
  return set.points([b](double t) { return b.radius(t); });
}

/// Where residual derivatives come from.
struct Engine {
  enum class Kind { analytic, fd };
  Kind kind = Kind::analytic;
  int order = 0;  // fd scheme order
  double h = 0.0;

  std::string describe() const {
    if (kind == Kind::analytic) return "analytic";
    return "fd{order=" + std::to_string(order) + ",h=" + std::to_string(h) + "}";
  }
};

struct EquationNorm {
  std::string name;
  double linf = 0.0;
  double l2 = 0.0;
  Point at{};
  // linf over the largest sum of term magnitudes seen in the sample set; scale-free.
  double rel_linf = 0.0;
};

struct ResidualReport {
  std::vector<EquationNorm> equations;
  std::size_t count = 0;
  Engine engine{};

  double max_linf() const {
    double m = 0.0;
    for (const auto& e : equations) m = std::max(m, e.linf);
    return m;
  }
  double max_rel() const {
    double m = 0.0;
    for (const auto& e : equations) m = std::max(m, e.rel_linf);
    return m;
  }
  const EquationNorm& operator[](const std::string& name) const {
    for (const auto& e : equations) {
      if (e.name == name) return e;
    }
    throw std::out_of_range("ResidualReport: no equation " + name);
  }
};

/// A residual value together with the magnitudes of the terms that produced it.
struct TermResidual {
  double value = 0.0;
  double terms = 0.0;
};

namespace detail {

template <typename R, std::size_t K>
TermResidual term_residual(const std::array<R, K>& terms) {
  R sum = 0;
  R mag = 0;
  for (R x : terms) {
    sum += x;
    mag += x < 0 ? -x : x;
  }
  return {static_cast<double>(sum), static_cast<double>(mag)};
}

class NormAccumulator {
 public:
  explicit NormAccumulator(std::string name) { out_.name = std::move(name); }

  void add(const TermResidual& r, const Point& at) {
    const double a = std::abs(r.value);
    sq_.add(a * a);
    if (a > out_.linf || (a == out_.linf && first_)) {
      out_.linf = a;
      out_.at = at;
    }
    terms_ = std::max(terms_, r.terms);
    first_ = false;
  }

  EquationNorm finish() {
    out_.l2 = std::sqrt(sq_.value());
    out_.rel_linf = terms_ > 0.0 ? out_.linf / terms_ : (out_.linf > 0.0 ? 1.0 : 0.0);
    return out_;
  }

 private:
  EquationNorm out_;
  CompensatedSum sq_;
  double terms_ = 0.0;
  bool first_ = true;
};

inline void check_finite(const FieldJet& j) {
  for (const Jet* f : {&j.alpha, &j.u1, &j.u2, &j.p}) {
    for (long double v : {f->v, f->t, f->x, f->y, f->xx, f->xy, f->yy}) {
      if (!std::isfinite(v)) throw SingularityError("non-finite field jet");
    }
  }
}

// Evaluates every point first, reporting all singular ones together.
inline std::vector<FieldJet> evaluate_all(const FieldProvider& jets, const std::vector<Point>& pts) {
  std::vector<FieldJet> out(pts.size());
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    try {
      out[i] = jets(pts[i].t, pts[i].x, pts[i].y);
      check_finite(out[i]);
    } catch (const SingularityError&) {
      bad.push_back(i);
    }
  }
  if (!bad.empty()) {
    const std::string what =
        std::to_string(bad.size()) + " singular sample(s), first index " + std::to_string(bad.front());
    throw SingularSampleError(what, std::move(bad));
  }
  return out;
}

}  // namespace detail

inline const std::array<std::string, 4>& governing_names() {
  static const std::array<std::string, 4> n{"mass", "mobility", "momentum_x", "momentum_y"};
  return n;
}

inline const std::array<std::string, 4>& boundary_names() {
  static const std::array<std::string, 4> n{"kinematic", "pressure", "traction_x", "traction_y"};
  return n;
}

/// The four governing equations at one point, each as LHS − RHS. Products and
/// sums run in long double; near the origin the terms reach 10⁶–10⁷ while the
/// residual is wanted to 10⁻⁹.
inline std::array<TermResidual, 4> governing_pointwise(const FieldJet& j, const ConstitutiveTriplet& triplet,
                                                       const PhysConstants& phys) {
  using L = long double;
  const ConstitutiveValues c = constitutive_eval(triplet, j.alpha.v);
  const L l = phys.lambda;
  const Jet& a = j.alpha;
  const Jet& u = j.u1;
  const Jet& v = j.u2;
  const Jet& p = j.p;
  const L av = a.v;
  std::array<TermResidual, 4> r;
  r[0] = detail::term_residual(std::array<L, 6>{L(a.t), L(a.x) * u.v, av * u.x, L(a.y) * v.v, av * v.y, -L(c.S)});
  r[1] = detail::term_residual(std::array<L, 6>{L(u.x), L(v.y), -L(c.D) * p.xx, -L(c.D) * p.yy,
                                                -L(c.dD) * a.x * p.x, -L(c.dD) * a.y * p.y});
  r[2] = detail::term_residual(std::array<L, 10>{
      (2 + l) * a.x * u.x, (2 + l) * av * u.xx, l * a.x * v.y, l * av * v.xy, L(a.y) * u.y, L(a.y) * v.x,
      av * u.yy, av * v.xy, -L(p.x), -L(c.d_alpha_sigma) * a.x});
  r[3] = detail::term_residual(std::array<L, 10>{
      L(a.x) * u.y, L(a.x) * v.x, av * u.xy, av * v.xx, (2 + l) * a.y * v.y, (2 + l) * av * v.yy,
      l * a.y * u.x, l * av * u.xy, -L(p.y), -L(c.d_alpha_sigma) * a.y});
  return r;
}

/// The four boundary conditions at a point of Γ = 0.
inline std::array<TermResidual, 4> boundary_pointwise(const FieldJet& j, const BoundaryCircle& b,
                                                      const PhysConstants& phys, double t, double x,
                                                      double y) {
  using L = long double;
  const L l = phys.lambda;
  const L gx = 2.0L * x;
  const L gy = 2.0L * y;
  const L gt = b.level_t(t);
  const Jet& u = j.u1;
  const Jet& v = j.u2;
  std::array<TermResidual, 4> r;
  r[0] = detail::term_residual(std::array<L, 3>{u.v * gx, v.v * gy, gt});
  // p has a single term; its scale is the pressure variation across one radius.
  r[1] = {static_cast<double>(j.p.v),
          static_cast<double>(std::abs(j.p.v) + std::hypot(x, y) * std::hypot(j.p.x, j.p.y))};
  r[2] = detail::term_residual(std::array<L, 4>{(2 + l) * u.x * gx, l * v.y * gx, u.y * gy, v.x * gy});
  r[3] = detail::term_residual(std::array<L, 4>{u.y * gx, v.x * gx, l * u.x * gy, (2 + l) * v.y * gy});
  return r;
}

inline ResidualReport governing_residual(const FieldProvider& jets, const ConstitutiveTriplet& triplet,
                                         const PhysConstants& phys, const std::vector<Point>& samples,
                                         Engine engine = {}) {
  const std::vector<FieldJet> js = detail::evaluate_all(jets, samples);
  std::vector<detail::NormAccumulator> acc;
  for (const auto& n : governing_names()) acc.emplace_back(n);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto r = governing_pointwise(js[i], triplet, phys);
    for (std::size_t e = 0; e < 4; ++e) acc[e].add(r[e], samples[i]);
  }
  ResidualReport rep;
  for (auto& a : acc) rep.equations.push_back(a.finish());
  rep.count = samples.size();
  rep.engine = engine;
  return rep;
}

inline ResidualReport governing_residual(const FieldProvider& jets, const ConstitutiveTriplet& triplet,
                                         const PhysConstants& phys, const SampleSet& set,
                                         const std::function<double(double)>& radius, Engine engine = {}) {
  return governing_residual(jets, triplet, phys, set.points(radius), engine);
}

/// Boundary conditions at n_theta equispaced points of the circle r = radius(t).
inline ResidualReport boundary_residual(const FieldProvider& jets, const BoundaryCircle& b,
                                        const PhysConstants& phys, double t, int n_theta,
                                        Engine engine = {}) {
  if (!(t > 0.0)) throw DomainError("boundary_residual: t > 0 required");
  if (n_theta < 1) throw std::invalid_argument("boundary_residual: n_theta >= 1 required");
  const double R = b.radius(t);
  std::vector<Point> pts;
  for (int k = 0; k < n_theta; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n_theta;
    pts.push_back({t, R * std::cos(th), R * std::sin(th)});
  }
  const std::vector<FieldJet> js = detail::evaluate_all(jets, pts);
  std::vector<detail::NormAccumulator> acc;
  for (const auto& n : boundary_names()) acc.emplace_back(n);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto r = boundary_pointwise(js[i], b, phys, t, pts[i].x, pts[i].y);
    for (std::size_t e = 0; e < 4; ++e) acc[e].add(r[e], pts[i]);
  }
  ResidualReport rep;
  for (auto& a : acc) rep.equations.push_back(a.finish());
  rep.count = pts.size();
  rep.engine = engine;
  return rep;
}

using ValueProvider = std::function<FieldValue(double t, double x, double y)>;

namespace detail {

inline double component(const FieldValue& v, int k) {
  switch (k) {
    case 0: return v.alpha;
    case 1: return v.u1;
    case 2: return v.u2;
    default: return v.p;
  }
}

inline Jet& component(FieldJet& j, int k) {
  switch (k) {
    case 0: return j.alpha;
    case 1: return j.u1;
    case 2: return j.u2;
    default: return j.p;
  }
}

inline const Jet& component(const FieldJet& j, int k) { return component(const_cast<FieldJet&>(j), k); }

// Central first-derivative weights at offsets −2..2.
inline std::array<double, 5> first_weights(int scheme) {
  if (scheme == 2) return {0.0, -0.5, 0.0, 0.5, 0.0};
  return {1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0};
}

}  // namespace detail

/// Space derivatives by central differences of the value map (scheme 2 or 4,
/// step h); ∂ₜ of every field is taken from `time_source`, never differenced.
inline FieldProvider fd_provider(ValueProvider values, FieldProvider time_source, int scheme, double h) {
  if (scheme != 2 && scheme != 4) throw std::invalid_argument("fd_provider: scheme must be 2 or 4");
  if (!(h > 0.0)) throw std::invalid_argument("fd_provider: h must be positive");
  return [values = std::move(values), time_source = std::move(time_source), scheme, h](
             double t, double x, double y) {
    const FieldJet tj = time_source(t, x, y);
    FieldJet out;
    const auto w = detail::first_weights(scheme);
    // Cache the (2·2+1)² stencil once; each field reads its own component.
    std::array<std::array<FieldValue, 5>, 5> grid{};
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        const bool needed = i == 0 || j == 0 || (w[i + 2] != 0.0 && w[j + 2] != 0.0);
        if (needed) grid[i + 2][j + 2] = values(t, x + i * h, y + j * h);
      }
    }
    for (int k = 0; k < 4; ++k) {
      auto f = [&](int i, int j) { return detail::component(grid[i + 2][j + 2], k); };
      Jet& J = detail::component(out, k);
      J.v = f(0, 0);
      J.t = detail::component(tj, k).t;
      std::function<double(double)> fx = [&](double s) { return f(static_cast<int>(std::lround(s)), 0); };
      std::function<double(double)> fy = [&](double s) { return f(0, static_cast<int>(std::lround(s))); };
      // Unit-step stencils on the cached grid, rescaled by h.
      J.x = fd_derivative(fx, 0.0, 1, scheme, 1.0) / h;
      J.y = fd_derivative(fy, 0.0, 1, scheme, 1.0) / h;
      J.xx = fd_derivative(fx, 0.0, 2, scheme, 1.0) / (h * h);
      J.yy = fd_derivative(fy, 0.0, 2, scheme, 1.0) / (h * h);
      CompensatedSum xy;
      for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
          const double c = w[i + 2] * w[j + 2];
          if (c != 0.0) xy.add(c * f(i, j));
        }
      }
      J.xy = xy.value() / (h * h);
    }
    return out;
  };
}

inline FieldProvider fd_provider(const SolutionFamily& sol, int scheme, double h) {
  return fd_provider([sol](double t, double x, double y) { return eval_value(sol, t, x, y); },
                     provider_of(sol), scheme, h);
}

/// Max over samples, fields and derivative groups (gradient, Hessian, ∂ₜ) of
/// |analytic − FD| divided by the largest analytic entry of that field's group
/// over the whole sample set. Scheme-4 stencils with step h; the time
/// derivative uses step h_t and is skipped when h_t ≤ 0.
inline double cross_engine_check(const FieldProvider& jets, const ValueProvider& values,
                                 const std::vector<Point>& samples, double h, double h_t = 0.0) {
  const FieldProvider fd = fd_provider(values, jets, 4, h);
  // Per field: analytic scale and worst absolute gap for each of the three groups.
  std::array<std::array<long double, 3>, 4> scale{};
  std::array<std::array<long double, 3>, 4> gap{};
  for (const Point& s : samples) {
    const FieldJet a = jets(s.t, s.x, s.y);
    const FieldJet f = fd(s.t, s.x, s.y);
    for (int k = 0; k < 4; ++k) {
      const Jet& A = detail::component(a, k);
      const Jet& F = detail::component(f, k);
      scale[k][0] = std::max({scale[k][0], std::abs(A.x), std::abs(A.y)});
      gap[k][0] = std::max({gap[k][0], std::abs(A.x - F.x), std::abs(A.y - F.y)});
      scale[k][1] = std::max({scale[k][1], std::abs(A.xx), std::abs(A.xy), std::abs(A.yy)});
      gap[k][1] = std::max({gap[k][1], std::abs(A.xx - F.xx), std::abs(A.xy - F.xy), std::abs(A.yy - F.yy)});
      if (h_t > 0.0) {
        std::function<double(double)> ft = [&](double tt) {
          return detail::component(values(tt, s.x, s.y), k);
        };
        const double dt = fd_derivative(ft, s.t, 1, 4, h_t);
        // A time-independent field is measured against its rate |f|/t.
        scale[k][2] = std::max({scale[k][2], std::abs(A.t), std::abs(A.v) / s.t});
        gap[k][2] = std::max(gap[k][2], std::abs(A.t - dt));
      }
    }
  }
  long double worst = 0.0L;
  for (int k = 0; k < 4; ++k) {
    for (int g = 0; g < 3; ++g) {
      worst = std::max(worst, gap[k][g] / (scale[k][g] > 0.0L ? scale[k][g] : 1.0L));
    }
  }
  return static_cast<double>(worst);
}

}  // namespace tumour
