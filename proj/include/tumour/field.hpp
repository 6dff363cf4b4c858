#pragma once

#include <functional>

#include "tumour/numerics/dual.hpp"

namespace tumour {

struct Point {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct FieldValue {
  double alpha = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double p = 0.0;
};

/// Value, first derivatives in (t, x, y), and second space derivatives of one
/// field. Held in extended precision: residual terms near the origin are many
/// orders of magnitude larger than the residual itself.
struct Jet {
  long double v = 0.0L;
  long double t = 0.0L;
  long double x = 0.0L;
  long double y = 0.0L;
  long double xx = 0.0L;
  long double xy = 0.0L;
  long double yy = 0.0L;
};

/// Every derivative of (α, u¹, u², p) that the governing and boundary
/// residuals consume.
struct FieldJet {
  Jet alpha;
  Jet u1;
  Jet u2;
  Jet p;

  FieldValue value() const {
    return {static_cast<double>(alpha.v), static_cast<double>(u1.v), static_cast<double>(u2.v),
            static_cast<double>(p.v)};
  }
};

using FieldProvider = std::function<FieldJet(double t, double x, double y)>;

template <typename T>
struct FieldT {
  T alpha;
  T u1;
  T u2;
  T p;
};

template <typename S>
Jet jet_from(const Dual<Dual<S, 3>, 3>& h) {
  return {h.v.v, h.v.d[0], h.v.d[1], h.v.d[2], h.d[1].d[1], h.d[1].d[2], h.d[2].d[2]};
}

/// Differentiates a templated field map fields(t, x, y) -> FieldT<T> with
/// nested forward AD in (t, x, y), running the arithmetic in scalar type S.
template <typename S = double, typename Fields>
FieldJet jet_of(const Fields& fields, double t, double x, double y) {
  using H = Dual<Dual<S, 3>, 3>;
  const FieldT<H> f = fields(hessian_variable<3, S>(static_cast<S>(t), 0),
                             hessian_variable<3, S>(static_cast<S>(x), 1),
                             hessian_variable<3, S>(static_cast<S>(y), 2));
  return {jet_from(f.alpha), jet_from(f.u1), jet_from(f.u2), jet_from(f.p)};
}

/// Constant state α = a0, u = 0, p = p0; defined on the whole plane.
inline FieldProvider constant_state(double a0, double p0 = 0.0) {
  return [a0, p0](double, double, double) {
    FieldJet j;
    j.alpha.v = a0;
    j.p.v = p0;
    return j;
  };
}

}  // namespace tumour
