#pragma once

// Model parameters and the constitutive triplet (S, D, Σ): proliferation
// rate, mobility, and cell–water pressure difference as functions of the
// cell concentration α.

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tumour/errors.hpp"

namespace tumour {

/// Bulk viscosity λ; shear viscosity is normalised to one.
struct PhysConstants {
  double lambda = 1.0;

  void validate() const {
    if (!(lambda > 0.0)) throw DomainError("PhysConstants: lambda must be positive");
  }
};

/// D = d0 α^m, S = s0 α^n, Σ = σ0 α^{n−1}.
struct PowerLawParams {
  double d0 = 1.0;
  double s0 = 0.0;
  double sigma0 = 0.0;
  double m = 0.0;
  double n = 0.0;
};

/// A scalar function of α together with its first derivative.
struct ScalarFunction {
  std::function<double(double)> f;
  std::function<double(double)> df;

  double operator()(double a) const { return f(a); }
};

/// Black-box triplet evaluated on α > 0.
struct GeneralTriplet {
  ScalarFunction S;
  ScalarFunction D;
  ScalarFunction Sigma;
  std::string name = "general";
};

using ConstitutiveTriplet = std::variant<PowerLawParams, GeneralTriplet>;

struct ScaleExponents {
  double gamma = 0.0;  // ansatz exponent: ω = x t^γ
  double kappa = 0.0;  // boundary exponent: x² + y² = δ² t^κ
};

/// γ = (m+1)/(2(n−1)), κ = (1+m)/(1−n). κ is formed as −2γ so the identity
/// holds bit-exactly.
inline ScaleExponents scale_exponents(double m, double n) {
  if (n == 1.0) throw DegenerateError("scale_exponents: n = 1 admits no scale reduction");
  const double gamma = (m + 1.0) / (2.0 * (n - 1.0));
  return {gamma, -2.0 * gamma};
}

/// s0 that makes the s0–σ0 link hold: s0 = nσ0/((n−1)(2+λ)).
inline double linked_s0(double n, double sigma0, const PhysConstants& phys) {
  if (n == 1.0) throw DegenerateError("linked_s0: n = 1");
  return n * sigma0 / ((n - 1.0) * (2.0 + phys.lambda));
}

struct PowerLawDiagnostics {
  double required_s0 = 0.0;  // NaN when n = 1
  bool s0_link_holds = false;
  bool mobility_positive = false;
  bool exponents_nondegenerate = false;
  std::vector<std::string> flags;
};

inline bool close_rel(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Reports which optional constraints hold; never throws on bad parameters.
inline PowerLawDiagnostics validate_power_law(const PowerLawParams& p, const PhysConstants& phys) {
  PowerLawDiagnostics out;
  out.exponents_nondegenerate = p.n * (p.n - 1.0) != 0.0;
  out.mobility_positive = p.d0 > 0.0;
  if (p.n != 1.0) {
    out.required_s0 = p.n * p.sigma0 / ((p.n - 1.0) * (2.0 + phys.lambda));
    out.s0_link_holds = close_rel(p.s0, out.required_s0);
  } else {
    out.required_s0 = std::nan("");
  }
  if (!out.mobility_positive) out.flags.emplace_back("degenerate mobility");
  if (!out.exponents_nondegenerate) out.flags.emplace_back("n(n-1) = 0");
  if (!out.s0_link_holds) out.flags.emplace_back("s0-sigma0 link violated");
  return out;
}

struct ConstitutiveValues {
  double S = 0.0;
  double D = 0.0;
  double Sigma = 0.0;
  double dS = 0.0;            // dS/dα
  double d_alpha_sigma = 0.0; // d(αΣ)/dα
  double dD = 0.0;            // dD/dα
};

namespace detail {

// Rejects α outside the domain of α^p: (0, ∞) for negative exponents, and
// α ≥ 0 for non-integer ones.
inline void check_power_domain(double alpha, std::initializer_list<double> exponents) {
  if (alpha > 0.0) return;
  for (double p : exponents) {
    const bool integer = p == std::floor(p);
    if (p < 0.0 || (alpha < 0.0 && !integer)) {
      throw DomainError("constitutive_eval: alpha=" + std::to_string(alpha) +
                        " outside the domain of exponent " + std::to_string(p));
    }
  }
}

inline double ipow(double a, double p) { return p == 0.0 ? 1.0 : std::pow(a, p); }

}  // namespace detail

inline ConstitutiveValues constitutive_eval(const ConstitutiveTriplet& triplet, double alpha) {
  if (const auto* p = std::get_if<PowerLawParams>(&triplet)) {
    detail::check_power_domain(alpha, {p->m, p->n, p->n - 1.0});
    if (p->m != 0.0) detail::check_power_domain(alpha, {p->m - 1.0});
    ConstitutiveValues v;
    v.S = p->s0 * detail::ipow(alpha, p->n);
    v.D = p->d0 * detail::ipow(alpha, p->m);
    v.Sigma = p->sigma0 * detail::ipow(alpha, p->n - 1.0);
    v.dS = p->n == 0.0 ? 0.0 : p->n * p->s0 * detail::ipow(alpha, p->n - 1.0);
    v.d_alpha_sigma = p->n == 0.0 ? 0.0 : p->n * p->sigma0 * detail::ipow(alpha, p->n - 1.0);
    v.dD = p->m == 0.0 ? 0.0 : p->m * p->d0 * detail::ipow(alpha, p->m - 1.0);
    return v;
  }
  const auto& g = std::get<GeneralTriplet>(triplet);
  if (!(alpha > 0.0)) {
    throw DomainError("constitutive_eval: general triplet '" + g.name + "' requires alpha > 0");
  }
  ConstitutiveValues v;
  v.S = g.S.f(alpha);
  v.D = g.D.f(alpha);
  v.Sigma = g.Sigma.f(alpha);
  v.dS = g.S.df(alpha);
  v.d_alpha_sigma = v.Sigma + alpha * g.Sigma.df(alpha);
  v.dD = g.D.df(alpha);
  return v;
}

/// S(α) = k1 α^m − k2 α^n.
inline ScalarFunction proliferation_two_power(double k1, double k2, double m_exp, double n_exp) {
  return {[=](double a) { return k1 * std::pow(a, m_exp) - k2 * std::pow(a, n_exp); },
          [=](double a) {
            return k1 * m_exp * std::pow(a, m_exp - 1.0) - k2 * n_exp * std::pow(a, n_exp - 1.0);
          }};
}

/// The Σ that pairs with proliferation_two_power so that
/// S/α − dS/dα + d(αΣ)/dα/(2+λ) ≡ 0:
/// Σ(α) = (2+λ)[k1(1−1/m)α^{m−1} + k2(1/n−1)α^{n−1}].
inline ScalarFunction sigma_from_proliferation(double k1, double k2, double m_exp, double n_exp,
                                               const PhysConstants& phys) {
  if (m_exp == 0.0 || n_exp == 0.0) {
    throw DegenerateError("sigma_from_proliferation: exponents must be nonzero");
  }
  const double c = 2.0 + phys.lambda;
  const double a1 = c * k1 * (1.0 - 1.0 / m_exp);
  const double a2 = c * k2 * (1.0 / n_exp - 1.0);
  return {[=](double a) { return a1 * detail::ipow(a, m_exp - 1.0) + a2 * detail::ipow(a, n_exp - 1.0); },
          [=](double a) {
            double r = 0.0;
            if (m_exp != 1.0) r += a1 * (m_exp - 1.0) * std::pow(a, m_exp - 2.0);
            if (n_exp != 1.0) r += a2 * (n_exp - 1.0) * std::pow(a, n_exp - 2.0);
            return r;
          }};
}

/// D(α) = d0/α.
inline ScalarFunction inverse_mobility(double d0) {
  return {[=](double a) { return d0 / a; }, [=](double a) { return -d0 / (a * a); }};
}

/// The steady-state example triplet: D = d0/α, S = k1α^m − k2α^n, Σ compatible with S.
inline GeneralTriplet steady_example_triplet(double d0, double k1, double k2, double m_exp,
                                             double n_exp, const PhysConstants& phys) {
  return {proliferation_two_power(k1, k2, m_exp, n_exp), inverse_mobility(d0),
          sigma_from_proliferation(k1, k2, m_exp, n_exp, phys), "steady-example"};
}

/// max over samples of |S/α − dS/dα + d(αΣ)/dα/(2+λ)|.
inline double compatibility_residual(const ConstitutiveTriplet& triplet, const PhysConstants& phys,
                                     std::span<const double> alpha_samples) {
  double worst = 0.0;
  for (double a : alpha_samples) {
    const ConstitutiveValues v = constitutive_eval(triplet, a);
    worst = std::max(worst, std::abs(v.S / a - v.dS + v.d_alpha_sigma / (2.0 + phys.lambda)));
  }
  return worst;
}

}  // namespace tumour
