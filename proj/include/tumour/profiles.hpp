#pragma once

// Radial profiles (Λ*, P*, R*, Φ*) of a rotation-invariant reduction and the
// ansatz that lifts them back to (t, x, y).

#include <functional>
#include <variant>

#include "tumour/core_model.hpp"
#include "tumour/numerics/dual.hpp"

namespace tumour {

/// Value and first two r-derivatives of a profile.
struct RadialJet {
  long double v = 0.0L;
  long double d1 = 0.0L;
  long double d2 = 0.0L;
};

using RadialFunction = std::function<RadialJet(long double r)>;
using Dual2 = Dual<Dual<long double, 1>, 1>;

inline RadialJet radial_jet_from(const Dual2& f) { return {f.v.v, f.v.d[0], f.d[0].d[0]}; }

/// Profile as a RadialFunction from a templated scalar map r -> T.
template <typename F>
RadialFunction radial_function(F f) {
  return [f](long double r) { return radial_jet_from(f(hessian_variable<1, long double>(r, 0))); };
}

/// The derivative f′ of a templated scalar map, as a profile (third-order AD).
template <typename F>
RadialFunction derivative_function(F f) {
  return [f](long double r) {
    using D3 = Dual<Dual2, 1>;
    D3 x;
    x.v = hessian_variable<1, long double>(r, 0);
    x.d[0] = Dual2(1.0);
    const D3 y = f(x);
    return radial_jet_from(y.d[0]);
  };
}

inline RadialFunction constant_profile(double c) {
  return [c](long double) { return RadialJet{c, 0.0L, 0.0L}; };
}

/// u = t^{−γ−1}R*(ω)(cos, sin)(Φ*+φ), α = t^{1/(1−n)}Λ*, p = t^{n/(1−n)}P*, ω = (x, y)t^γ.
struct ScaleAnsatz {
  double m = 0.0;
  double n = 0.0;
};

/// Time-independent rotation ansatz: fields are the profiles at r = √(x²+y²).
struct SteadyAnsatz {};

using Ansatz = std::variant<ScaleAnsatz, SteadyAnsatz>;

struct ReducedProfiles {
  RadialFunction lambda;    // Λ*
  RadialFunction pressure;  // P*
  RadialFunction speed;     // R*
  RadialFunction angle;     // Φ*
  Ansatz ansatz = ScaleAnsatz{};
  ConstitutiveTriplet triplet = PowerLawParams{};
  PhysConstants phys{};
  double beta = 0.0;   // first-integral constant
  double delta = 1.0;  // boundary radius in the reduced variable
};

}  // namespace tumour
