#pragma once

// The integral family ∫_r^δ e^{−a z²}/z dz that carries every pressure
// profile in the closed-form solutions.

#include <cmath>
#include <numbers>
#include <string>

#include "tumour/errors.hpp"
#include "tumour/numerics/dual.hpp"
#include "tumour/numerics/quadrature.hpp"

namespace tumour {

enum class ExpIntegralPath { exponential_integral, quadrature };

namespace detail {

// Ein(x) = ∫_0^x (1 − e^{−u})/u du, entire; series is well conditioned for x ≤ 2.
inline double ein_series(double x) {
  double term = x;  // (−1)^{k+1} x^k / k!
  double sum = x;
  for (int k = 2; k < 60; ++k) {
    term *= -x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

inline double e1(double x) {
  if (x <= 2.0) return -std::numbers::egamma - std::log(x) + ein_series(x);
  return -std::expint(-x);
}

inline void check_limits(double r, double delta) {
  if (!(r > 0.0) || !(delta > 0.0)) {
    throw SingularityError("exp_over_z_integral: limits must be positive (1/z pole at the origin), got r=" +
                           std::to_string(r) + ", delta=" + std::to_string(delta));
  }
}

}  // namespace detail

/// ∫_r^δ e^{−a z²}/z dz for r, δ > 0 (r > δ flips the sign). With u = z² this is
/// ½[E₁(a r²) − E₁(a δ²)]; the quadrature path integrates exp(−a e^{2s}) over
/// s ∈ [ln r, ln δ] instead.
inline double exp_over_z_integral(double a, double r, double delta,
                                  ExpIntegralPath path = ExpIntegralPath::exponential_integral) {
  detail::check_limits(r, delta);
  if (r == delta) return 0.0;
  if (a == 0.0) return std::log(delta / r);
  if (path == ExpIntegralPath::quadrature) {
    std::function<double(double)> f = [a](double s) { return std::exp(-a * std::exp(2.0 * s)); };
    return quad_adaptive(f, std::log(r), std::log(delta), {1e-15, 1e-16, 40}).value;
  }
  const double lo = a * r * r;
  const double hi = a * delta * delta;
  if (std::abs(lo) <= 2.0 && std::abs(hi) <= 2.0) {
    // ln(δ/r) − ½[Ein(aδ²) − Ein(ar²)], avoids cancelling the two logarithms.
    return std::log(delta / r) - 0.5 * (detail::ein_series(hi) - detail::ein_series(lo));
  }
  if (a < 0.0) {
    throw DomainError("exp_over_z_integral: negative coefficient outside the series range");
  }
  return 0.5 * (detail::e1(lo) - detail::e1(hi));
}

/// Leibniz rule in the lower limit: d/dr ∫_r^δ g = −g(r). Lets the integral
/// sit inside AD expressions without differentiating through quadrature.
template <typename T, std::size_t N>
Dual<T, N> exp_over_z_integral(double a, const Dual<T, N>& r, double delta) {
  using std::exp;
  Dual<T, N> out;
  out.v = exp_over_z_integral(a, r.v, delta);
  const T g = -exp(-a * (r.v * r.v)) / r.v;
  for (std::size_t i = 0; i < N; ++i) out.d[i] = g * r.d[i];
  return out;
}

}  // namespace tumour
