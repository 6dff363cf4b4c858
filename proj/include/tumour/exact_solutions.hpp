#pragma once

// Closed-form solution families of the tumour growth system, with their
// parameter restrictions, field jets, boundaries and radial profiles.

#include <cmath>
#include <string>
#include <variant>

#include "tumour/core_model.hpp"
#include "tumour/errors.hpp"
#include "tumour/field.hpp"
#include "tumour/numerics/exp_integral.hpp"
#include "tumour/profiles.hpp"

namespace tumour {

/// Γ(t, x, y) = x² + y² − δ² t^κ.
struct BoundaryCircle {
  double delta = 1.0;
  double kappa = 0.0;

  double level(double t, double x, double y) const {
    return x * x + y * y - delta * delta * std::pow(t, kappa);
  }
  double radius(double t) const { return delta * std::pow(t, 0.5 * kappa); }
  double level_t(double t) const {
    return kappa == 0.0 ? 0.0 : -kappa * delta * delta * std::pow(t, kappa - 1.0);
  }
};

/// Which of the two mutually exclusive regularity requirements a parameter set meets:
/// a bounded velocity at the origin, or the full free-boundary conditions.
struct Regularity {
  bool origin_regular = false;
  bool boundary_conditions = false;
  std::string sacrificed;  // "origin regularity", "boundary conditions", "both" or ""
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw RestrictionError(what);
}

inline std::string sacrificed_label(bool origin, bool boundary) {
  if (origin && boundary) return "";
  if (origin) return "boundary conditions";
  if (boundary) return "origin regularity";
  return "both";
}

template <typename T>
struct GaussianProfile {
  T lambda;
  T pressure;
  T speed;
};

// Λ = c1 e^{−r²/4d0}; P and R as the m = −1 reduction with zero first-integral constant.
template <typename T>
GaussianProfile<T> gaussian_profile(const T& r, double c1, double c3, double c4, double sigma0,
                                    double n, double d0, double lambda, double delta) {
  using std::exp;
  using std::expm1;
  using std::log;
  const double a = 2.0 * sigma0 * std::pow(c1, n) / ((n - 1.0) * (2.0 + lambda));
  const double b = 2.0 * c1 / (n - 1.0);
  const T q = r * r / (4.0 * d0);
  GaussianProfile<T> out;
  out.lambda = c1 * exp(-q);
  out.pressure = c4 + c3 * log(r) + a * exp_over_z_integral(n / (4.0 * d0), r, delta) +
                 b * exp_over_z_integral(1.0 / (4.0 * d0), r, delta);
  // expm1 form: the three 1/r poles cancel exactly when c3 takes its regular value.
  const double at_origin = c3 / c1 - a / c1 - 2.0 / (n - 1.0);
  out.speed = d0 * ((c3 / c1) * expm1(q) - (a / c1) * expm1((1.0 - n) * q) + at_origin) / r;
  return out;
}

}  // namespace detail

/// c3 that cancels the 1/r singularity of the decaying Gaussian family's velocity.
inline double regular_c3(double c1, double n, double sigma0, double lambda) {
  if (n == 1.0) throw DegenerateError("regular_c3: n = 1");
  return 2.0 * sigma0 * std::pow(c1, n) / ((n - 1.0) * (2.0 + lambda)) + 2.0 * c1 / (n - 1.0);
}

struct StationaryConstants {
  double delta = 0.0;
  double E = 0.0;
  double c1 = 0.0;
  double sigma0 = 0.0;
  double s0 = 0.0;
};

/// Constants that make the Gaussian family satisfy every condition on the fixed circle r = δ.
inline StationaryConstants stationary_constants(double c3, double c4, double n, double lambda,
                                                double d0) {
  if (c3 == 0.0) throw DegenerateError("stationary_constants: c3(n-1) != 0 required, got c3 = 0");
  if (n * (n - 1.0) == 0.0) throw DegenerateError("stationary_constants: n(n-1) != 0 required");
  if (!(d0 > 0.0)) throw DomainError("stationary_constants: d0 > 0 required");
  if (!(lambda > 0.0)) throw DomainError("stationary_constants: lambda > 0 required");
  StationaryConstants k;
  k.delta = std::exp(-c4 / c3);
  k.E = std::exp(std::exp(-2.0 * c4 / c3) / (4.0 * d0));
  k.c1 = n * c3 * k.E / 2.0;
  k.sigma0 = -(2.0 + lambda) * c3 / 2.0 * std::pow(2.0 / (n * c3), n);
  k.s0 = n * k.sigma0 / ((n - 1.0) * (2.0 + lambda));
  return k;
}

struct MovingConstants {
  double d0 = 0.0;
  double s0 = 0.0;
  double sigma0 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Derived constants of the moving-front family with power-law velocity (m ≠ −n−1).
inline MovingConstants power_front_constants(double c1, double delta, double m, double n,
                                             double lambda) {
  detail::require(m != -1.0, "power_front_constants: m != -1 required");
  detail::require(m != -n - 1.0,
                  "power_front_constants: m = -n-1 belongs to the logarithmic front family");
  detail::require(n * (n - 1.0) != 0.0, "power_front_constants: n(n-1) != 0 required");
  detail::require(c1 > 0.0, "power_front_constants: c1 > 0 required");
  detail::require(delta > 0.0, "power_front_constants: delta > 0 required");
  detail::require(lambda > 0.0, "power_front_constants: lambda > 0 required");
  detail::require(1.0 + m > 0.0, "power_front_constants: 1+m > 0 required for positive mobility d0");
  const double l = lambda;
  MovingConstants k;
  k.d0 = (1.0 + m) * std::pow(c1, -1.0 - m) / (4.0 * (1.0 + l));
  k.sigma0 = -std::pow(c1, 1.0 - n) * (3.0 + m + l) / n * std::pow(delta, (2.0 - 2.0 * n) / (1.0 + m));
  k.s0 = n * k.sigma0 / ((n - 1.0) * (2.0 + l));
  k.c2 = 2.0 * c1 * (1.0 + l) * (-1.0 + m + 2.0 * n + l * (m + n)) /
         ((1.0 - n) * (1.0 + m + n) * (2.0 + l)) * std::pow(delta, 2.0 + 2.0 / (1.0 + m));
  k.c3 = c1 * (1.0 + l) * (3.0 + m + l - n * (2.0 + l)) / (n * (n - 1.0) * (2.0 + l)) *
         std::pow(delta, 2.0 / (1.0 + m));
  return k;
}

/// Derived constants of the moving-front family with logarithmic velocity (m = −n−1).
inline MovingConstants log_front_constants(double c1, double delta, double n, double lambda) {
  detail::require(n * (n - 1.0) != 0.0, "log_front_constants: n(n-1) != 0 required");
  detail::require(c1 > 0.0, "log_front_constants: c1 > 0 required");
  detail::require(delta > 0.0, "log_front_constants: delta > 0 required");
  detail::require(lambda > 0.0, "log_front_constants: lambda > 0 required");
  const double l = lambda;
  MovingConstants k;
  k.d0 = -n * std::pow(c1, n) / (4.0 * (1.0 + l));
  if (!(k.d0 > 0.0)) {
    throw DomainError("log_front_constants: unphysical mobility d0 = " + std::to_string(k.d0) +
                      " (needs n*c1^n < 0)");
  }
  k.sigma0 = (n - 2.0 - l) / n * std::pow(c1, 1.0 - n) * std::pow(delta, 2.0 - 2.0 / n);
  k.s0 = n * k.sigma0 / ((n - 1.0) * (2.0 + l));
  k.c2 = 2.0 * c1 * (1.0 + l) * (n * (2.0 + l) + 2.0 * (2.0 - n + l) * std::log(delta)) /
         (n * (1.0 - n) * (2.0 + l)) * std::pow(delta, 2.0 - 2.0 / n);
  k.c3 = c1 * (1.0 + l) * (2.0 + l - n * (3.0 + l)) / (n * (n - 1.0) * (2.0 + l)) *
         std::pow(delta, -2.0 / n);
  return k;
}

struct SteadyConstants {
  double c4 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
};

/// Constants that put the steady state's free boundary on r = δ.
inline SteadyConstants steady_constants(double c3, double delta, double m_exp, double n_exp,
                                        double c1, double d0) {
  if (m_exp == n_exp) throw DegenerateError("steady_constants: m = n divides by zero");
  detail::require(0.0 < m_exp && m_exp < n_exp, "steady_constants: 0 < m < n required");
  detail::require(c1 > 0.0, "steady_constants: c1 > 0 required");
  detail::require(d0 > 0.0, "steady_constants: d0 > 0 required");
  detail::require(delta > 0.0, "steady_constants: delta > 0 required");
  const double q = delta * delta / (4.0 * d0);
  SteadyConstants k;
  k.c4 = -c3 * std::log(delta);
  k.k1 = c3 * m_exp * n_exp * std::exp(m_exp * q) / (2.0 * std::pow(c1, m_exp) * (n_exp - m_exp));
  k.k2 = c3 * m_exp * n_exp * std::exp(n_exp * q) / (2.0 * std::pow(c1, n_exp) * (n_exp - m_exp));
  return k;
}

/// Decaying Gaussian concentration with m = −1 and the s0–σ0 link; c3 is free.
class GaussianDecay {
 public:
  struct Params {
    double c1 = 1.0;
    double c3 = 0.5;
    double c4 = 0.0;
    double n = 2.0;
    double d0 = 1.0;
    double lambda = 1.0;
    double sigma0 = 0.0;
    double delta = 1.0;
  };

  explicit GaussianDecay(const Params& p) : p_(p) {
    detail::require(p.n * (p.n - 1.0) != 0.0, "GaussianDecay: n(n-1) != 0 required");
    detail::require(p.d0 > 0.0, "GaussianDecay: d0 > 0 required");
    detail::require(p.c1 > 0.0, "GaussianDecay: c1 > 0 required");
    detail::require(p.delta > 0.0, "GaussianDecay: delta > 0 required");
    detail::require(p.lambda > 0.0, "GaussianDecay: lambda > 0 required");
    s0_ = linked_s0(p.n, p.sigma0, phys());
    const double a = 2.0 * p.sigma0 * std::pow(p.c1, p.n - 1.0) / ((p.n - 1.0) * (2.0 + p.lambda));
    bracket_at_origin_ = p.c3 / p.c1 - a - 2.0 / (p.n - 1.0);
    regularity_.origin_regular = close_rel(p.c3, regular_c3(p.c1, p.n, p.sigma0, p.lambda));
    bool bc = p.c3 != 0.0 && p.n * p.c3 > 0.0;
    if (bc) {
      const StationaryConstants k = stationary_constants(p.c3, p.c4, p.n, p.lambda, p.d0);
      bc = close_rel(p.delta, k.delta) && close_rel(p.c1, k.c1) && close_rel(p.sigma0, k.sigma0);
    }
    regularity_.boundary_conditions = bc;
    regularity_.sacrificed = detail::sacrificed_label(regularity_.origin_regular, bc);
  }

  const Params& params() const { return p_; }
  double s0() const { return s0_; }
  PhysConstants phys() const { return {p_.lambda}; }
  PowerLawParams power_law() const { return {p_.d0, s0_, p_.sigma0, -1.0, p_.n}; }
  BoundaryCircle boundary() const { return {p_.delta, 0.0}; }
  const Regularity& regularity() const { return regularity_; }
  bool time_dependent() const { return true; }

  template <typename T>
  FieldT<T> fields(const T& t, const T& x, const T& y) const {
    using std::exp;
    using std::expm1;
    using std::log;
    using std::pow;
    using std::sqrt;
    const double n = p_.n;
    const double d0 = p_.d0;
    const double a = 2.0 * p_.sigma0 * std::pow(p_.c1, n - 1.0) / ((n - 1.0) * (2.0 + p_.lambda));
    const T r2 = x * x + y * y;
    const T q = r2 / (4.0 * d0);
    // expm1 form keeps the cancellation at the origin exact when c3 is the regular value.
    const T bracket = (p_.c3 / p_.c1) * expm1(q) - a * expm1((1.0 - n) * q) + bracket_at_origin_;
    const T scale = d0 * bracket / (t * r2);
    const T r = sqrt(r2);
    const double pa = 2.0 * p_.sigma0 * std::pow(p_.c1, n) / ((n - 1.0) * (2.0 + p_.lambda));
    const double pb = 2.0 * p_.c1 / (n - 1.0);
    const T pr = pa * exp_over_z_integral(n / (4.0 * d0), r, p_.delta) +
                 pb * exp_over_z_integral(1.0 / (4.0 * d0), r, p_.delta) + p_.c4 +
                 0.5 * p_.c3 * log(r2);
    return {p_.c1 * pow(t, 1.0 / (1.0 - n)) * exp(-q), x * scale, y * scale,
            pow(t, n / (1.0 - n)) * pr};
  }

  ReducedProfiles profiles() const {
    const Params p = p_;
    auto prof = [p](const auto& r) {
      return detail::gaussian_profile(r, p.c1, p.c3, p.c4, p.sigma0, p.n, p.d0, p.lambda, p.delta);
    };
    return {radial_function([prof](const auto& r) { return prof(r).lambda; }),
            radial_function([prof](const auto& r) { return prof(r).pressure; }),
            radial_function([prof](const auto& r) { return prof(r).speed; }),
            constant_profile(0.0),
            ScaleAnsatz{-1.0, p.n},
            power_law(),
            phys(),
            0.0,
            p.delta};
  }

 private:
  Params p_;
  double s0_ = 0.0;
  double bracket_at_origin_ = 0.0;
  Regularity regularity_;
};

/// The Gaussian family with constants chosen so the circle r = δ is a free boundary.
class StationaryFront {
 public:
  struct Params {
    double c3 = 5.0;
    double c4 = 2.0;
    double n = 2.0;
    double lambda = 4.0;
    double d0 = 2.0;
  };

  explicit StationaryFront(const Params& p)
      : p_(p), k_(stationary_constants(p.c3, p.c4, p.n, p.lambda, p.d0)) {
    detail::require(p.n * p.c3 > 0.0, "StationaryFront: n*c3 > 0 required for positive alpha");
    regularity_.boundary_conditions = true;
    regularity_.origin_regular = close_rel(p.c3, regular_c3(k_.c1, p.n, k_.sigma0, p.lambda));
    regularity_.sacrificed = detail::sacrificed_label(regularity_.origin_regular, true);
  }

  const Params& params() const { return p_; }
  const StationaryConstants& constants() const { return k_; }
  PhysConstants phys() const { return {p_.lambda}; }
  PowerLawParams power_law() const { return {p_.d0, k_.s0, k_.sigma0, -1.0, p_.n}; }
  BoundaryCircle boundary() const { return {k_.delta, 0.0}; }
  const Regularity& regularity() const { return regularity_; }
  bool time_dependent() const { return true; }

  template <typename T>
  FieldT<T> fields(const T& t, const T& x, const T& y) const {
    using std::exp;
    using std::expm1;
    using std::log;
    using std::pow;
    using std::sqrt;
    const double n = p_.n;
    const double d0 = p_.d0;
    const double E = k_.E;
    const double En = std::pow(E, n);
    const T r2 = x * x + y * y;
    const T q = r2 / (4.0 * d0);
    const T bracket = expm1(q) + En / (n - 1.0) * expm1((1.0 - n) * q) + (1.0 + (En - n * E) / (n - 1.0));
    const T scale = 2.0 * d0 / (n * E) * bracket / (t * r2);
    const T r = sqrt(r2);
    const T pr = p_.c3 * En / (1.0 - n) * exp_over_z_integral(n / (4.0 * d0), r, k_.delta) +
                 p_.c3 * n * E / (n - 1.0) * exp_over_z_integral(1.0 / (4.0 * d0), r, k_.delta) +
                 p_.c4 + 0.5 * p_.c3 * log(r2);
    return {p_.c3 * n * E / 2.0 * pow(t, 1.0 / (1.0 - n)) * exp(-q), x * scale, y * scale,
            pow(t, n / (1.0 - n)) * pr};
  }

  ReducedProfiles profiles() const {
    const Params p = p_;
    const StationaryConstants k = k_;
    auto prof = [p, k](const auto& r) {
      return detail::gaussian_profile(r, k.c1, p.c3, p.c4, k.sigma0, p.n, p.d0, p.lambda, k.delta);
    };
    return {radial_function([prof](const auto& r) { return prof(r).lambda; }),
            radial_function([prof](const auto& r) { return prof(r).pressure; }),
            radial_function([prof](const auto& r) { return prof(r).speed; }),
            constant_profile(0.0),
            ScaleAnsatz{-1.0, p.n},
            power_law(),
            phys(),
            0.0,
            k.delta};
  }

 private:
  Params p_;
  StationaryConstants k_;
  Regularity regularity_;
};

/// Moving front x² + y² = δ² t^{(1+m)/(1−n)}, time-independent α = c1 r^{2/(1+m)}.
class PowerFront {
 public:
  struct Params {
    double c1 = 1.0;
    double delta = 1.0;
    double m = 1.0;
    double n = 3.0;
    double lambda = 4.0;
  };

  explicit PowerFront(const Params& p)
      : p_(p), k_(power_front_constants(p.c1, p.delta, p.m, p.n, p.lambda)) {
    regularity_.boundary_conditions = true;
    regularity_.sacrificed = "origin regularity";
  }

  const Params& params() const { return p_; }
  const MovingConstants& constants() const { return k_; }
  PhysConstants phys() const { return {p_.lambda}; }
  PowerLawParams power_law() const { return {k_.d0, k_.s0, k_.sigma0, p_.m, p_.n}; }
  BoundaryCircle boundary() const { return {p_.delta, (1.0 + p_.m) / (1.0 - p_.n)}; }
  const Regularity& regularity() const { return regularity_; }
  bool time_dependent() const { return true; }

  template <typename T>
  FieldT<T> fields(const T& t, const T& x, const T& y) const {
    using std::pow;
    const double m = p_.m;
    const double n = p_.n;
    const double c1 = p_.c1;
    const T r2 = x * x + y * y;
    const T tau = pow(t, (1.0 + m + n) / (1.0 - n));
    const T bracket = k_.d0 * k_.c2 * std::pow(c1, m) * tau +
                      k_.s0 * (1.0 + m) * std::pow(c1, n - 1.0) / (2.0 * (1.0 + m + n)) *
                          pow(r2, (1.0 + m + n) / (1.0 + m));
    const T scale = pow(r2, -(2.0 + m) / (1.0 + m)) * bracket;
    const T pr = k_.s0 * (1.0 + m) * (1.0 + m) * std::pow(c1, n - 1.0 - m) /
                     (4.0 * k_.d0 * n * (1.0 + m + n)) * pow(r2, n / (1.0 + m)) -
                 0.5 * k_.c2 * tau / r2 + k_.c3 * pow(t, n / (1.0 - n));
    // α carries no t; the zero product keeps the AD seed structure uniform.
    return {c1 * pow(r2, 1.0 / (1.0 + m)) + 0.0 * t, x * scale, y * scale, pr};
  }

  ReducedProfiles profiles() const {
    const double m = p_.m;
    const double n = p_.n;
    const double c1 = p_.c1;
    const MovingConstants k = k_;
    return {radial_function([=](const auto& r) {
              using std::pow;
              return c1 * pow(r, 2.0 / (1.0 + m));
            }),
            radial_function([=](const auto& r) {
              using std::pow;
              return k.s0 * (1.0 + m) * (1.0 + m) * std::pow(c1, n - 1.0 - m) /
                         (4.0 * k.d0 * n * (1.0 + m + n)) * pow(r, 2.0 * n / (1.0 + m)) -
                     0.5 * k.c2 / (r * r) + k.c3;
            }),
            radial_function([=](const auto& r) {
              using std::pow;
              return pow(r, -(3.0 + m) / (1.0 + m)) *
                     (k.d0 * k.c2 * std::pow(c1, m) +
                      k.s0 * (1.0 + m) * std::pow(c1, n - 1.0) / (2.0 * (1.0 + m + n)) *
                          pow(r, 2.0 * (1.0 + m + n) / (1.0 + m)));
            }),
            constant_profile(0.0),
            ScaleAnsatz{m, n},
            power_law(),
            phys(),
            0.0,
            p_.delta};
  }

 private:
  Params p_;
  MovingConstants k_;
  Regularity regularity_;
};

/// Moving front with m = −n−1: logarithmic velocity profile, α = c1 r^{−2/n}.
class LogFront {
 public:
  struct Params {
    double c1 = 2.0;
    double delta = 1.0;
    double n = -1.0;
    double lambda = 1.0;
  };

  explicit LogFront(const Params& p) : p_(p), k_(log_front_constants(p.c1, p.delta, p.n, p.lambda)) {
    regularity_.boundary_conditions = true;
    regularity_.sacrificed = "origin regularity";
  }

  const Params& params() const { return p_; }
  const MovingConstants& constants() const { return k_; }
  double m() const { return -p_.n - 1.0; }
  PhysConstants phys() const { return {p_.lambda}; }
  PowerLawParams power_law() const { return {k_.d0, k_.s0, k_.sigma0, m(), p_.n}; }
  BoundaryCircle boundary() const { return {p_.delta, p_.n / (p_.n - 1.0)}; }
  const Regularity& regularity() const { return regularity_; }
  bool time_dependent() const { return true; }

  template <typename T>
  FieldT<T> fields(const T& t, const T& x, const T& y) const {
    using std::log;
    using std::pow;
    const double n = p_.n;
    const double c1 = p_.c1;
    const double g = std::pow(c1, 2.0 * n);
    const T r2 = x * x + y * y;
    const T L = (n / (1.0 - n)) * log(t) + log(r2);
    const T scale = pow(r2, (1.0 - n) / n) / (2.0 * std::pow(c1, 1.0 + n)) *
                    (2.0 * k_.d0 * k_.c2 + k_.s0 * g * L);
    const T pr = -(2.0 * k_.d0 * k_.c2 + k_.s0 * g * (1.0 + L)) / (4.0 * k_.d0 * r2) +
                 k_.c3 * pow(t, n / (1.0 - n));
    return {c1 * pow(r2, -1.0 / n) + 0.0 * t, x * scale, y * scale, pr};
  }

  ReducedProfiles profiles() const {
    const double n = p_.n;
    const double c1 = p_.c1;
    const MovingConstants k = k_;
    const double g = std::pow(c1, 2.0 * n);
    return {radial_function([=](const auto& r) {
              using std::pow;
              return c1 * pow(r, -2.0 / n);
            }),
            radial_function([=](const auto& r) {
              using std::log;
              return -(2.0 * k.d0 * k.c2 + k.s0 * g * (1.0 + 2.0 * log(r))) / (4.0 * k.d0 * r * r) + k.c3;
            }),
            radial_function([=](const auto& r) {
              using std::log;
              using std::pow;
              return pow(r, (2.0 - n) / n) / (2.0 * std::pow(c1, 1.0 + n)) *
                     (2.0 * k.d0 * k.c2 + 2.0 * k.s0 * g * log(r));
            }),
            constant_profile(0.0),
            ScaleAnsatz{m(), n},
            power_law(),
            phys(),
            0.0,
            p_.delta};
  }

 private:
  Params p_;
  MovingConstants k_;
  Regularity regularity_;
};

/// Time-independent state with D = d0/α, S = k1α^m − k2α^n and the compatible Σ.
class SteadyState {
 public:
  struct Params {
    double c1 = 1.0;
    double c3 = 1.0;
    double delta = 1.0;
    double m_exp = 1.0;
    double n_exp = 2.0;
    double lambda = 4.0;
    double d0 = 1.0;
  };

  explicit SteadyState(const Params& p)
      : p_(p), k_(steady_constants(p.c3, p.delta, p.m_exp, p.n_exp, p.c1, p.d0)) {
    detail::require(p.lambda > 0.0, "SteadyState: lambda > 0 required");
    regularity_.boundary_conditions = true;
    regularity_.sacrificed = "origin regularity";
  }

  const Params& params() const { return p_; }
  const SteadyConstants& constants() const { return k_; }
  PhysConstants phys() const { return {p_.lambda}; }
  GeneralTriplet triplet() const {
    return steady_example_triplet(p_.d0, k_.k1, k_.k2, p_.m_exp, p_.n_exp, phys());
  }
  BoundaryCircle boundary() const { return {p_.delta, 0.0}; }
  const Regularity& regularity() const { return regularity_; }
  bool time_dependent() const { return false; }

  template <typename T>
  FieldT<T> fields(const T& t, const T& x, const T& y) const {
    using std::exp;
    using std::log;
    using std::sqrt;
    const double m = p_.m_exp;
    const double n = p_.n_exp;
    const double d0 = p_.d0;
    const double c1 = p_.c1;
    const double a1 = 2.0 * k_.k1 * std::pow(c1, m) / m;
    const double a2 = 2.0 * k_.k2 * std::pow(c1, n) / n;
    const T r2 = x * x + y * y;
    const T q = r2 / (4.0 * d0);
    const T scale = d0 / (c1 * r2) * (p_.c3 * exp(q) - a1 * exp((1.0 - m) * q) + a2 * exp((1.0 - n) * q));
    const T r = sqrt(r2);
    const T pr = k_.c4 + 0.5 * p_.c3 * log(r2) + a1 * exp_over_z_integral(m / (4.0 * d0), r, p_.delta) -
                 a2 * exp_over_z_integral(n / (4.0 * d0), r, p_.delta);
    return {c1 * exp(-q) + 0.0 * t, x * scale, y * scale, pr};
  }

  ReducedProfiles profiles() const {
    const double m = p_.m_exp;
    const double n = p_.n_exp;
    const double d0 = p_.d0;
    const double c1 = p_.c1;
    const double c3 = p_.c3;
    const double delta = p_.delta;
    const SteadyConstants k = k_;
    const double a1 = 2.0 * k.k1 * std::pow(c1, m) / m;
    const double a2 = 2.0 * k.k2 * std::pow(c1, n) / n;
    return {radial_function([=](const auto& r) {
              using std::exp;
              return c1 * exp(-(r * r) / (4.0 * d0));
            }),
            radial_function([=](const auto& r) {
              using std::log;
              return k.c4 + c3 * log(r) + a1 * exp_over_z_integral(m / (4.0 * d0), r, delta) -
                     a2 * exp_over_z_integral(n / (4.0 * d0), r, delta);
            }),
            radial_function([=](const auto& r) {
              using std::exp;
              const auto s = r * r / (4.0 * d0);
              return d0 / (c1 * r) * (c3 * exp(s) - a1 * exp((1.0 - m) * s) + a2 * exp((1.0 - n) * s));
            }),
            constant_profile(0.0),
            SteadyAnsatz{},
            triplet(),
            phys(),
            0.0,
            delta};
  }

 private:
  Params p_;
  SteadyConstants k_;
  Regularity regularity_;
};

using SolutionFamily = std::variant<GaussianDecay, StationaryFront, PowerFront, LogFront, SteadyState>;

inline std::string family_name(const SolutionFamily& sol) {
  static constexpr const char* names[] = {"gaussian", "stationary", "power-front", "log-front",
                                          "steady"};
  return names[sol.index()];
}

inline BoundaryCircle boundary_of(const SolutionFamily& sol) {
  return std::visit([](const auto& f) { return f.boundary(); }, sol);
}

inline PhysConstants phys_of(const SolutionFamily& sol) {
  return std::visit([](const auto& f) { return f.phys(); }, sol);
}

inline ConstitutiveTriplet triplet_of(const SolutionFamily& sol) {
  return std::visit(
      [](const auto& f) -> ConstitutiveTriplet {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, SteadyState>) {
          return f.triplet();
        } else {
          return f.power_law();
        }
      },
      sol);
}

inline Regularity regularity_of(const SolutionFamily& sol) {
  return std::visit([](const auto& f) { return f.regularity(); }, sol);
}

inline bool is_time_dependent(const SolutionFamily& sol) {
  return std::visit([](const auto& f) { return f.time_dependent(); }, sol);
}

inline FieldJet eval_jet(const SolutionFamily& sol, double t, double x, double y) {
  if (is_time_dependent(sol) && !(t > 0.0)) {
    throw DomainError("eval_jet: t > 0 required, got t=" + std::to_string(t));
  }
  if (x == 0.0 && y == 0.0) {
    throw SingularityError("eval_jet: " + family_name(sol) + " is singular at the origin");
  }
  // Steady fields ignore t; evaluate at a harmless t so log/pow stay finite.
  const double te = is_time_dependent(sol) ? t : 1.0;
  return std::visit(
      [&](const auto& f) {
        return jet_of<long double>(
            [&f](const auto& tt, const auto& xx, const auto& yy) { return f.fields(tt, xx, yy); }, te, x, y);
      },
      sol);
}

inline FieldValue eval_value(const SolutionFamily& sol, double t, double x, double y) {
  if (is_time_dependent(sol) && !(t > 0.0)) throw DomainError("eval_value: t > 0 required");
  if (x == 0.0 && y == 0.0) throw SingularityError("eval_value: singular at the origin");
  const double te = is_time_dependent(sol) ? t : 1.0;
  return std::visit(
      [&](const auto& f) {
        const FieldT<double> v = f.fields(te, x, y);
        return FieldValue{v.alpha, v.u1, v.u2, v.p};
      },
      sol);
}

inline FieldProvider provider_of(const SolutionFamily& sol) {
  return [sol](double t, double x, double y) { return eval_jet(sol, t, x, y); };
}

inline ReducedProfiles reduced_profiles_of(const SolutionFamily& sol) {
  return std::visit([](const auto& f) { return f.profiles(); }, sol);
}

struct Annulus {
  double r_min = 0.0;
  double r_max = 0.0;
};

/// Default sampling annulus [10⁻² radius(t), radius(t)] that keeps clear of the origin.
inline Annulus validity_annulus(const SolutionFamily& sol, double t, double r_min_fraction = 1e-2) {
  const double R = boundary_of(sol).radius(is_time_dependent(sol) ? t : 1.0);
  return {r_min_fraction * R, R};
}

}  // namespace tumour
