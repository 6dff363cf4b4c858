#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "tumour/exact_solutions.hpp"
#include "tumour/numerics/exp_integral.hpp"
#include "tumour/numerics/finite_difference.hpp"
#include "tumour/reduction.hpp"
#include "tumour/residuals.hpp"

using namespace tumour;

namespace {

StationaryFront::Params fig34() { return {5.0, 2.0, 2.0, 4.0, 2.0}; }

std::vector<SolutionFamily> all_families() {
  return {GaussianDecay({1.0, 0.5, 5.0, 3.0, 0.75, 4.0, -3.0, 1.0}),
          StationaryFront(fig34()),
          StationaryFront({1.0, -2.5, 2.0, 4.0, 8.0}),
          PowerFront({}),
          LogFront({}),
          LogFront({1.0, 1.0, -2.0, 4.0}),
          SteadyState({})};
}

RadialFunction scaled(RadialFunction f, double k) {
  return [f, k](long double r) {
    RadialJet j = f(r);
    return RadialJet{k * j.v, k * j.d1, k * j.d2};
  };
}

// Stationary profiles with c3 replaced (the boundary constants no longer match).
ReducedProfiles stationary_with_c3(const StationaryFront& s, double c3) {
  ReducedProfiles prof = s.profiles();
  const auto k = s.constants();
  const auto p = s.params();
  auto g = [=](const auto& r) {
    return detail::gaussian_profile(r, k.c1, c3, p.c4, k.sigma0, p.n, p.d0, p.lambda, k.delta);
  };
  prof.pressure = radial_function([g](const auto& r) { return g(r).pressure; });
  prof.speed = radial_function([g](const auto& r) { return g(r).speed; });
  return prof;
}

// Steady speed profile written out for a given k1 (affine in k1).
RadialFunction steady_speed(const SteadyState& s, double k1) {
  const auto p = s.params();
  const double k2 = s.constants().k2;
  const double a1 = 2.0 * k1 * std::pow(p.c1, p.m_exp) / p.m_exp;
  const double a2 = 2.0 * k2 * std::pow(p.c1, p.n_exp) / p.n_exp;
  return radial_function([=](const auto& r) {
    using std::exp;
    const auto q = r * r / (4.0 * p.d0);
    return p.d0 / (p.c1 * r) * (p.c3 * exp(q) - a1 * exp((1.0 - p.m_exp) * q) + a2 * exp((1.0 - p.n_exp) * q));
  });
}

double jet_rel_gap(const FieldJet& a, const FieldJet& b) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Jet& A = detail::component(a, k);
    const Jet& B = detail::component(b, k);
    const std::array<long double, 7> ea{A.v, A.t, A.x, A.y, A.xx, A.xy, A.yy};
    const std::array<long double, 7> eb{B.v, B.t, B.x, B.y, B.xx, B.xy, B.yy};
    long double scale = 1.0L;
    for (long double e : eb) scale = std::max(scale, std::abs(e));
    for (std::size_t i = 0; i < 7; ++i) {
      worst = std::max(worst, static_cast<double>(std::abs(ea[i] - eb[i]) / scale));
    }
  }
  return worst;
}

}  // namespace

TEST(Lift, StationaryRoundTripAtUnitTime) {
  const StationaryFront s(fig34());
  const FieldProvider lifted = lift_profiles(s.profiles());
  for (const Point& p : sample_points(s, SampleSet{})) {
    if (p.t != 1.0) continue;
    EXPECT_LE(jet_rel_gap(lifted(1.0, p.x, p.y), eval_jet(s, 1.0, p.x, p.y)), 1e-12);
  }
}

TEST(Lift, AlphaHalvesAtTimeTwo) {
  const StationaryFront s(fig34());
  const FieldProvider lifted = lift_profiles(s.profiles(), -1.0, 2.0);
  for (double x : {0.05, 0.3, 0.6}) {
    const double a1 = static_cast<double>(lifted(1.0, x, 0.1).alpha.v);
    const double a2 = static_cast<double>(lifted(2.0, x, 0.1).alpha.v);
    EXPECT_NEAR(a2, 0.5 * a1, 1e-14 * a1);
    EXPECT_NEAR(a2, eval_value(s, 2.0, x, 0.1).alpha, 1e-13 * a2);
  }
}

TEST(Lift, ConstantProfilesGiveReciprocalTime) {
  ReducedProfiles prof{constant_profile(3.0), constant_profile(0.0), constant_profile(0.0), constant_profile(0.0),
                       ScaleAnsatz{-1.0, 2.0}};
  const FieldProvider lifted = lift_profiles(prof);
  for (double t : {0.5, 1.0, 4.0}) {
    const FieldJet j = lifted(t, 0.2, -0.3);
    EXPECT_NEAR(static_cast<double>(j.alpha.v), 3.0 / t, 1e-15);
    EXPECT_NEAR(static_cast<double>(j.alpha.t), -3.0 / (t * t), 1e-14);
    EXPECT_EQ(j.u1.v, 0.0L);
    EXPECT_EQ(j.p.v, 0.0L);
  }
}

TEST(Lift, RejectsNonPositiveTime) {
  const StationaryFront s(fig34());
  const FieldProvider lifted = lift_profiles(s.profiles());
  EXPECT_THROW(lifted(0.0, 0.1, 0.1), DomainError);
}

TEST(ReducedOde, StationaryProfilesSolveRadialSystem) {
  const StationaryFront s(fig34());
  const ResidualReport rep = reduced_ode_residual(s.profiles());
  EXPECT_EQ(rep.count, 64u);
  EXPECT_LE(rep.max_linf(), 1e-9);
}

TEST(ReducedOde, MobilityEquationByHand) {
  // (rR)′ = (rDP′)′ with β = 0 means rR − r d0 P′/Λ vanishes.
  const StationaryFront s(fig34());
  const ReducedProfiles prof = s.profiles();
  const double d0 = s.params().d0;
  for (double r : default_r_samples(s.constants().delta, 16)) {
    const RadialJet R = prof.speed(r), P = prof.pressure(r), L = prof.lambda(r);
    const double flux = static_cast<double>(r * R.v);
    const double drift = static_cast<double>(r * d0 * P.d1 / L.v);
    EXPECT_NEAR(flux, drift, 1e-12 * std::max(1.0, std::abs(drift)));
  }
}

TEST(ReducedOde, AngularEquationVanishesOnZeroAngleBranch) {
  for (const SolutionFamily& sol : all_families()) {
    const ResidualReport rep = reduced_ode_residual(reduced_profiles_of(sol));
    EXPECT_EQ(rep["momentum_angular"].linf, 0.0) << family_name(sol);
  }
}

TEST(ReducedOde, EveryFamilySolvesRadialSystem) {
  for (const SolutionFamily& sol : all_families()) {
    EXPECT_LE(reduced_ode_residual(reduced_profiles_of(sol)).max_rel(), 1e-12) << family_name(sol);
  }
}

TEST(ReducedOde, PerturbedLambdaBreaksMassEquation) {
  const StationaryFront s(fig34());
  ReducedProfiles prof = s.profiles();
  prof.lambda = scaled(prof.lambda, 1.0 + 1e-3);
  EXPECT_GE(reduced_ode_residual(prof)["mass"].linf, 1e-5);
}

TEST(ReducedOde, SingularRadiusRejected) {
  const StationaryFront s(fig34());
  try {
    reduced_ode_residual(s.profiles(), {0.1, 0.0, 0.2});
    FAIL() << "expected SingularSampleError";
  } catch (const SingularSampleError& e) {
    EXPECT_EQ(e.indices(), std::vector<std::size_t>{1});
  }
}

TEST(ReducedBc, StationaryConditionsHold) {
  const StationaryFront s(fig34());
  const ReducedBcReport bc = reduced_bc_residual(s.profiles());
  EXPECT_LE(bc.general.max_linf(), 1e-10);
  EXPECT_LE(bc.simplified.max_linf(), 1e-10);
  EXPECT_TRUE(bc.equivalent_branch);
}

TEST(ReducedBc, SteadyConditionsHold) {
  const ReducedBcReport bc = reduced_bc_residual(SteadyState({}).profiles());
  EXPECT_LE(bc.simplified.max_linf(), 1e-10);
  EXPECT_LE(bc.general.max_linf(), 1e-10);
}

TEST(ReducedBc, WrongC3LeavesSpeedAtBoundary) {
  const StationaryFront s(fig34());
  const ReducedProfiles bad = stationary_with_c3(s, 5.05);
  const ReducedBcReport bc = reduced_bc_residual(bad);
  EXPECT_GT(bc.simplified["speed"].linf, 1e-4);
  // Both formulations flag the non-solution together.
  EXPECT_GT(bc.general.max_linf(), 1e-4);
  EXPECT_TRUE(bc.equivalent_branch);
  const double R = static_cast<double>(bad.speed(s.constants().delta).v);
  EXPECT_NEAR(bc.simplified["speed"].linf, std::abs(R), 1e-15);
}

TEST(FirstIntegral, ZeroBetaZeroGradient) {
  const RadialFunction R = first_integral_R(0.0, 2.0, -1.0, constant_profile(1.5), constant_profile(0.0));
  for (double r : {0.1, 1.0, 3.0}) EXPECT_EQ(R(r).v, 0.0L);
}

TEST(FirstIntegral, RadialFlow) {
  for (double d0 : {0.3, 7.0}) {
    const RadialFunction R = first_integral_R(1.0, d0, 2.0, constant_profile(2.0), constant_profile(0.0));
    for (double r : {0.1, 1.0, 3.0}) {
      EXPECT_NEAR(static_cast<double>(R(r).v), 1.0 / r, 1e-15 / r);
      EXPECT_NEAR(static_cast<double>(R(r).d1), -1.0 / (r * r), 1e-14 / (r * r));
    }
  }
}

TEST(FirstIntegral, MatchesStationarySpeed) {
  const StationaryFront s(fig34());
  const auto k = s.constants();
  const auto p = s.params();
  const ReducedProfiles prof = s.profiles();
  const RadialFunction R = first_integral_R(0.0, p.d0, -1.0, prof.lambda, derivative_function([=](const auto& r) {
    return detail::gaussian_profile(r, k.c1, p.c3, p.c4, k.sigma0, p.n, p.d0, p.lambda, k.delta).pressure;
  }));
  for (double r : default_r_samples(k.delta, 100)) {
    const double want = static_cast<double>(prof.speed(r).v);
    EXPECT_NEAR(static_cast<double>(R(r).v), want, 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST(FirstIntegral, SolvesMobilityEquationForAnyPressure) {
  // Any smooth P* with R* from the first integral zeroes the mobility equation.
  const StationaryFront s(fig34());
  ReducedProfiles prof = s.profiles();
  auto P = [](const auto& r) {
    using std::sin;
    return sin(r) + 0.3 * r * r * r;
  };
  prof.pressure = radial_function(P);
  prof.speed = first_integral_R(0.0, s.params().d0, -1.0, prof.lambda, derivative_function(P));
  EXPECT_LE(reduced_ode_residual(prof)["mobility"].rel_linf, 1e-14);
}

TEST(LambdaOde, GaussianBranchFromDegenerateSeparableForm) {
  const PhysConstants phys{4.0};
  PowerLawParams p{2.0, 0.0, 1.0, -1.0, 2.0};
  p.s0 = linked_s0(p.n, p.sigma0, phys);
  const double c1 = 1.5;
  const LambdaTrajectory tr = integrate_lambda_ode(p, phys, 0.0, 0.1, 2.0, c1 * std::exp(-0.01 / 8.0));
  EXPECT_EQ(tr.mode, LambdaOdeMode::second_order);
  for (double r = 0.1; r <= 2.0; r += 0.01) {
    const double want = c1 * std::exp(-r * r / 8.0);
    EXPECT_NEAR(tr(r), want, 1e-6 * want);
  }
}

TEST(LambdaOde, LinearProfileRegime) {
  const double c1 = 1.5, lambda = 4.0, m = 1.0;
  PowerLawParams p{(1.0 + m) / (4.0 * (1.0 + lambda) * std::pow(c1, 1.0 + m)), 0.0, 1.0, m, 3.0};
  p.s0 = linked_s0(p.n, p.sigma0, {lambda});
  const LambdaTrajectory tr = integrate_lambda_ode(p, {lambda}, 0.0, 1.0, 3.0, c1);
  EXPECT_EQ(tr.mode, LambdaOdeMode::separable);
  for (double r = 1.0; r <= 3.0; r += 0.01) EXPECT_NEAR(tr(r), c1 * r, 1e-6 * c1 * r);
}

TEST(LambdaOde, ZeroRightSideKeepsLambdaConstant) {
  const PhysConstants phys{4.0};
  const PowerLawParams p{2.0, 0.5, 1.0, -1.0, 2.0};  // link broken
  const LambdaTrajectory tr = integrate_lambda_ode(p, phys, 0.0, 0.2, 3.0, 0.8);
  EXPECT_EQ(tr.mode, LambdaOdeMode::separable);
  for (double r : {0.2, 1.0, 2.5, 3.0}) EXPECT_NEAR(tr(r), 0.8, 1e-14);
}

TEST(LambdaOde, CoefficientZeroCrossingReportsLocation) {
  // λ = 1: the coefficient 2 − 3Λ vanishes at Λ = 2/3 while Λ′ = r/(2 − 3Λ)/2 drives Λ up from 0.3.
  // Integrating, 2Λ − 1.5Λ² = r²/4 + C, so the crossing sits at r² = 4(2/3 − C).
  const PowerLawParams p{1.0, 1.0, 0.0, 0.0, 2.0};
  const double r0 = 0.1, l0 = 0.3;
  const double C = 2.0 * l0 - 1.5 * l0 * l0 - r0 * r0 / 4.0;
  const double r_cross = std::sqrt(4.0 * (2.0 / 3.0 - C));
  try {
    integrate_lambda_ode(p, {1.0}, 0.0, r0, 5.0, l0);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_NEAR(e.location(), r_cross, 1e-3);
    EXPECT_LE(e.partial().back(), e.location());
  }
}

TEST(LambdaOde, RejectsBadInput) {
  const PowerLawParams p{1.0, 1.0, 0.0, 0.0, 2.0};
  EXPECT_THROW(integrate_lambda_ode(p, {1.0}, 0.0, 0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(integrate_lambda_ode(p, {1.0}, 0.0, 0.1, 1.0, -1.0), DomainError);
}

TEST(Overdetermined, GaussianProfileWithFreeC2) {
  const double d0 = 2.0, lambda = 4.0, n = 2.0, sigma0 = 1.0;
  const PhysConstants phys{lambda};
  const PowerLawParams p{d0, linked_s0(n, sigma0, phys), sigma0, -1.0, n};
  const double k = (2.0 + 2.0 * lambda) / (2.0 + lambda);
  for (double c2 : {0.0, 0.3, -0.7}) {
    const RadialFunction L = radial_function([=](const auto& r) {
      using std::exp;
      using std::pow;
      return 1.3 * exp(c2 * pow(r, k) - r * r / (4.0 * d0));
    });
    const ResidualReport rep =
        overdetermined_residual(L, p, phys, 0.0, default_r_samples(2.0), OverdeterminedSystem::power_law);
    EXPECT_LE(rep.max_linf(), 1e-9) << "c2=" << c2;
  }
}

TEST(Overdetermined, LinearProfileWithMatchingMobility) {
  const double c1 = 1.5, lambda = 4.0, m = 1.0, n = 3.0, sigma0 = 1.0;
  const PhysConstants phys{lambda};
  const PowerLawParams p{(1.0 + m) / (4.0 * (1.0 + lambda) * std::pow(c1, 1.0 + m)), linked_s0(n, sigma0, phys),
                         sigma0, m, n};
  const RadialFunction L = radial_function([=](const auto& r) { return c1 * r; });
  const ResidualReport rep =
      overdetermined_residual(L, p, phys, 0.0, default_r_samples(3.0), OverdeterminedSystem::power_law);
  EXPECT_LE(rep.max_linf(), 1e-9);
}

TEST(Overdetermined, ConstantLambdaLeavesMobilityTerm) {
  const PowerLawParams p{0.8, 0.1, 0.2, -1.0, 2.0};
  const PhysConstants phys{3.0};
  const ResidualReport rep =
      overdetermined_residual(constant_profile(2.0), p, phys, 0.0, {0.5, 1.0}, OverdeterminedSystem::power_law);
  EXPECT_DOUBLE_EQ(rep["eq1"].linf, 1.0 / (0.8 * 5.0));
}

TEST(Overdetermined, SteadyGeneralSystem) {
  const SteadyState s({});
  const ResidualReport rep = overdetermined_residual(s.profiles().lambda, s.triplet(), s.phys(), 0.0,
                                                     default_r_samples(1.0), OverdeterminedSystem::general);
  EXPECT_LE(rep.max_linf(), 1e-9);
}

TEST(Overdetermined, PowerLawSystemNeedsPowerLaw) {
  const SteadyState s({});
  EXPECT_THROW(overdetermined_residual(s.profiles().lambda, s.triplet(), s.phys(), 0.0, {0.5},
                                       OverdeterminedSystem::power_law),
               std::invalid_argument);
}

TEST(Pressure, HomogeneousPartIsLog) {
  const RadialFunction P = pressure_profile(constant_profile(1.0), [](double) { return 0.0; }, 1.0, 1.0, 0.0, 2.0);
  for (double r : {0.05, 0.5, 1.0, 2.0, 5.0}) {
    EXPECT_NEAR(static_cast<double>(P(r).v), std::log(r), 1e-14);
    EXPECT_NEAR(static_cast<double>(P(r).d1), 1.0 / r, 1e-13);
  }
}

TEST(Pressure, SteadyClosedForm) {
  const SteadyState s({});
  const ReducedProfiles prof = s.profiles();
  const auto p = s.params();
  const RadialFunction P =
      pressure_profile(prof.lambda, s.triplet().S.f, p.d0, p.c3, s.constants().c4, p.delta);
  for (double r : default_r_samples(p.delta, 16)) {
    EXPECT_NEAR(static_cast<double>(P(r).v), static_cast<double>(prof.pressure(r).v), 1e-9);
  }
}

TEST(Pressure, StationaryClosedForm) {
  const StationaryFront s(fig34());
  const ReducedProfiles prof = s.profiles();
  const auto p = s.params();
  const std::vector<double> rs = default_r_samples(s.constants().delta, 16);
  const std::vector<RadialJet> got =
      pressure_from_lambda(prof.lambda, scale_source(s.power_law()), p.d0, p.c3, p.c4, s.constants().delta, rs);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const RadialJet want = prof.pressure(rs[i]);
    EXPECT_NEAR(static_cast<double>(got[i].v), static_cast<double>(want.v), 1e-9);
    EXPECT_NEAR(static_cast<double>(got[i].d1), static_cast<double>(want.d1), 1e-9 * std::max(1.0L, std::abs(want.d1)));
  }
}

TEST(Steady, ResidualOfClosedForm) {
  const SteadyState s({});
  const SteadyReport rep = steady_residual(s.profiles(), s.triplet(), s.phys(), default_r_samples(1.0));
  EXPECT_LE(rep.governing.max_linf(), 1e-9);
  EXPECT_LE(rep.boundary.simplified.max_linf(), 1e-10);
}

TEST(Steady, MassEquationByHand) {
  // m = 1, n = 2: (rΛR)′ = r(k1Λ − k2Λ²).
  const SteadyState s({});
  const ReducedProfiles prof = s.profiles();
  const double k1 = s.constants().k1, k2 = s.constants().k2;
  std::function<double(double)> flux = [&](double r) {
    return static_cast<double>(r * prof.lambda(r).v * prof.speed(r).v);
  };
  for (double r : {0.1, 0.4, 0.9}) {
    const double L = static_cast<double>(prof.lambda(r).v);
    const double want = r * (k1 * L - k2 * L * L);
    EXPECT_NEAR(fd_derivative(flux, r, 1, 4, 1e-3 * r), want, 1e-8 * std::max(1.0, std::abs(want)));
  }
}

TEST(Steady, TrivialState) {
  const GeneralTriplet zero{{[](double) { return 0.0; }, [](double) { return 0.0; }},
                            {[](double) { return 1.0; }, [](double) { return 0.0; }},
                            {[](double) { return 0.0; }, [](double) { return 0.0; }},
                            "zero"};
  const ReducedProfiles prof{constant_profile(2.0), constant_profile(0.0), constant_profile(0.0),
                             constant_profile(0.0), SteadyAnsatz{}, zero, {1.0}, 0.0, 1.0};
  const SteadyReport rep = steady_residual(prof, zero, {1.0}, default_r_samples(1.0));
  EXPECT_EQ(rep.governing.max_linf(), 0.0);
  EXPECT_EQ(rep.boundary.general.max_linf(), 0.0);
  EXPECT_EQ(rep.boundary.simplified.max_linf(), 0.0);
}

TEST(Steady, PerturbedK1LeavesSpeedAtBoundary) {
  const SteadyState s({});
  const double k1 = s.constants().k1;
  std::array<double, 3> at_delta{};
  for (int i = 0; i < 3; ++i) {
    ReducedProfiles prof = s.profiles();
    prof.speed = steady_speed(s, k1 * (1.0 + 0.01 * i));
    at_delta[i] = static_cast<double>(prof.speed(1.0).v);
    const SteadyReport rep = steady_residual(prof, s.triplet(), s.phys(), default_r_samples(1.0));
    if (i == 0) {
      EXPECT_LE(rep.boundary.simplified["speed"].linf, 1e-12);
    } else {
      EXPECT_GT(rep.boundary.simplified["speed"].linf, 1e-4);
    }
  }
  // Affine in k1.
  EXPECT_NEAR(at_delta[2] - at_delta[1], at_delta[1] - at_delta[0], 1e-14);
}

TEST(Invariants, LiftRoundTripEveryFamily) {
  SampleSet set;
  set.n_r = 12;
  set.n_theta = 12;
  for (const SolutionFamily& sol : all_families()) {
    const FieldProvider lifted = lift_profiles(reduced_profiles_of(sol));
    const std::vector<Point> pts = sample_points(sol, set);
    double gap = 0.0;
    for (const Point& p : pts) gap = std::max(gap, jet_rel_gap(lifted(p.t, p.x, p.y), eval_jet(sol, p.t, p.x, p.y)));
    EXPECT_LE(gap, 1e-10) << family_name(sol);
    const auto a = governing_residual(lifted, triplet_of(sol), phys_of(sol), pts);
    const auto b = governing_residual(provider_of(sol), triplet_of(sol), phys_of(sol), pts);
    EXPECT_LE(std::abs(a.max_rel() - b.max_rel()), 1e-10) << family_name(sol);
  }
}

TEST(Invariants, ReducedAndFullResidualsAgreeUnderPerturbation) {
  SampleSet set;
  set.n_r = 10;
  set.n_theta = 6;
  for (const SolutionFamily& sol :
       {SolutionFamily(StationaryFront(fig34())), SolutionFamily(PowerFront({})), SolutionFamily(LogFront({}))}) {
    const ReducedProfiles base = reduced_profiles_of(sol);
    const PowerLawParams law = std::get<PowerLawParams>(base.triplet);
    std::vector<std::pair<ReducedProfiles, bool>> cases{{base, true}};
    ReducedProfiles p1 = base;
    p1.lambda = scaled(p1.lambda, 1.01);
    cases.push_back({p1, false});
    ReducedProfiles p2 = base;
    PowerLawParams l2 = law;
    l2.s0 += 0.05;
    p2.triplet = l2;
    cases.push_back({p2, false});
    ReducedProfiles p3 = base;
    p3.pressure = scaled(p3.pressure, 1.02);
    cases.push_back({p3, false});
    for (const auto& [prof, solution] : cases) {
      const double reduced = reduced_ode_residual(prof).max_linf();
      const double full =
          governing_residual(lift_profiles(prof), prof.triplet, prof.phys, sample_points(sol, set)).max_linf();
      if (solution) {
        EXPECT_LE(reduced, 1e-8) << family_name(sol);
        EXPECT_LE(full, 1e-8) << family_name(sol);
      } else {
        EXPECT_GE(reduced, 1e-4) << family_name(sol);
        EXPECT_GE(full, 1e-4) << family_name(sol);
      }
    }
  }
}

TEST(Samples, DefaultRadii) {
  const std::vector<double> r = default_r_samples(2.0);
  ASSERT_EQ(r.size(), 64u);
  EXPECT_DOUBLE_EQ(r.front(), 0.02);
  EXPECT_EQ(r.back(), 2.0);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GT(r[i], r[i - 1]);
  EXPECT_THROW(default_r_samples(0.0), DomainError);
}
