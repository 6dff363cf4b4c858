#pragma once

// Forward-mode automatic differentiation.
//
// Dual<T, N> carries a value and N directional derivatives of scalar type T.
// Nesting once (Dual<Dual<double, N>, N>) yields the full Hessian, which is
// how every field jet in this library is produced.

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace tumour {

template <typename T, std::size_t N>
struct Dual {
  T v{};
  std::array<T, N> d{};

  constexpr Dual() = default;
  constexpr Dual(double c) : v(c), d{} {}  // NOLINT: implicit broadcast of constants
  constexpr Dual(const T& value, const std::array<T, N>& grad) : v(value), d(grad) {}

  template <typename U = T, std::enable_if_t<!std::is_same_v<U, double>, int> = 0>
  constexpr Dual(const T& value) : v(value), d{} {}  // NOLINT

  Dual& operator+=(const Dual& o) {
    v += o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend Dual operator-(const Dual& a) {
    Dual r;
    r.v = -a.v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = -a.d[i];
    return r;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r;
    r.v = a.v * b.v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    Dual r;
    r.v = a.v / b.v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
    return r;
  }

  friend Dual operator+(Dual a, double c) {
    a.v += c;
    return a;
  }
  friend Dual operator+(double c, Dual a) { return a + c; }
  friend Dual operator-(Dual a, double c) {
    a.v -= c;
    return a;
  }
  friend Dual operator-(double c, const Dual& a) { return -a + c; }
  friend Dual operator*(Dual a, double c) {
    a.v *= c;
    for (auto& di : a.d) di *= c;
    return a;
  }
  friend Dual operator*(double c, const Dual& a) { return a * c; }
  friend Dual operator/(const Dual& a, double c) { return a * (1.0 / c); }
  friend Dual operator/(double c, const Dual& a) { return Dual(c) / a; }
};

using Grad3 = Dual<double, 3>;
using Hess3 = Dual<Grad3, 3>;

template <typename T>
struct is_dual : std::false_type {};
template <typename T, std::size_t N>
struct is_dual<Dual<T, N>> : std::true_type {};
template <typename T>
inline constexpr bool is_dual_v = is_dual<T>::value;

/// Innermost primal value.
constexpr double value_of(double x) { return x; }
constexpr double value_of(long double x) { return static_cast<double>(x); }
template <typename T, std::size_t N>
constexpr double value_of(const Dual<T, N>& x) {
  return value_of(x.v);
}

namespace detail {
// f(a) given f(a.v) and f'(a.v), both of inner type T.
template <typename T, std::size_t N>
Dual<T, N> chain(const Dual<T, N>& a, const T& f, const T& df) {
  Dual<T, N> r;
  r.v = f;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = df * a.d[i];
  return r;
}
}  // namespace detail

template <typename T, std::size_t N>
Dual<T, N> exp(const Dual<T, N>& a) {
  using std::exp;
  T e = exp(a.v);
  return detail::chain(a, e, e);
}

template <typename T, std::size_t N>
Dual<T, N> expm1(const Dual<T, N>& a) {
  using std::exp;
  using std::expm1;
  return detail::chain(a, T(expm1(a.v)), T(exp(a.v)));
}

template <typename T, std::size_t N>
Dual<T, N> log(const Dual<T, N>& a) {
  using std::log;
  return detail::chain(a, T(log(a.v)), T(1.0 / a.v));
}

template <typename T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  T s = sqrt(a.v);
  return detail::chain(a, s, T(0.5 / s));
}

template <typename T, std::size_t N>
Dual<T, N> sin(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, T(sin(a.v)), T(cos(a.v)));
}

template <typename T, std::size_t N>
Dual<T, N> cos(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, T(cos(a.v)), T(-sin(a.v)));
}

template <typename T, std::size_t N>
Dual<T, N> pow(const Dual<T, N>& a, double p) {
  using std::pow;
  if (p == 0.0) return Dual<T, N>(1.0);
  if (p == 1.0) return a;
  return detail::chain(a, T(pow(a.v, p)), T(p * pow(a.v, p - 1.0)));
}

/// Independent variable `i` of an N-variable gradient computation over scalar S.
template <std::size_t N, typename S = double>
Dual<S, N> gradient_variable(S x, std::size_t i) {
  Dual<S, N> r;
  r.v = x;
  r.d[i] = S(1);
  return r;
}

/// Independent variable `i` for a nested (value, gradient, Hessian) computation.
template <std::size_t N, typename S = double>
Dual<Dual<S, N>, N> hessian_variable(S x, std::size_t i) {
  Dual<Dual<S, N>, N> r;
  r.v = gradient_variable<N, S>(x, i);
  r.d[i].v = S(1);
  return r;
}

}  // namespace tumour
