#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <limits>

#include "tumour/errors.hpp"

namespace tumour {

struct QuadratureSpec {
  double rel_tol = 1e-13;
  double abs_tol = 0.0;
  int max_depth = 30;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

struct QuadState {
  const std::function<double(double)>* f;
  double target;       // absolute error budget for the whole interval
  double full_length;
  int max_depth;
  bool exhausted = false;
};

// Bisection on a 7/15-point Gauss–Kronrod pair. Left half first, always,
// so the sum is bit-reproducible.
inline QuadResult gk_recurse(QuadState& st, double a, double b, int depth) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0;
  double l1 = 0.0;
  const double v = Rule::integrate(*st.f, a, b, 0, 0.0, &err, &l1);
  const double budget = st.target * (b - a) / st.full_length;
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * l1;
  if (err <= budget || err <= roundoff) return {v, err};
  if (depth >= st.max_depth) {
    st.exhausted = true;
    return {v, err};
  }
  const double mid = 0.5 * (a + b);
  const QuadResult left = gk_recurse(st, a, mid, depth + 1);
  const QuadResult right = gk_recurse(st, mid, b, depth + 1);
  return {left.value + right.value, left.error + right.error};
}

}  // namespace detail

/// Adaptive Gauss–Kronrod quadrature of f over [a, b]; a > b integrates with
/// reversed orientation. Throws ConvergenceError (carrying the best estimate)
/// when the depth budget runs out.
inline QuadResult quad_adaptive(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec = {}) {
  if (spec.rel_tol <= 0.0 || spec.abs_tol < 0.0 || spec.max_depth < 1) {
    throw std::invalid_argument("quad_adaptive: invalid QuadratureSpec");
  }
  if (a == b) return {0.0, 0.0};
  if (a > b) {
    QuadResult r = quad_adaptive(f, b, a, spec);
    return {-r.value, r.error};
  }
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err0 = 0.0;
  const double coarse = Rule::integrate(f, a, b, 0, 0.0, &err0);
  detail::QuadState st{&f, std::max(spec.abs_tol, spec.rel_tol * std::abs(coarse)), b - a,
                       spec.max_depth};
  QuadResult r = detail::gk_recurse(st, a, b, 0);
  if (st.exhausted && r.error > std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value))) {
    throw ConvergenceError("quad_adaptive: recursion depth exhausted", r.value, r.error);
  }
  return r;
}

/// ∫_a^∞ f(z) dz through z = a + u/(1−u), u ∈ [0, 1).
inline QuadResult quad_semi_infinite(const std::function<double(double)>& f, double a,
                                     const QuadratureSpec& spec = {}) {
  std::function<double(double)> g = [&f, a](double u) {
    const double w = 1.0 - u;
    return f(a + u / w) / (w * w);
  };
  return quad_adaptive(g, 0.0, 1.0, spec);
}

}  // namespace tumour
