#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "tumour/exact_solutions.hpp"
#include "tumour/residuals.hpp"
#include "tumour/symmetry.hpp"

using namespace tumour;

namespace {

StationaryFront::Params fig34() { return {5.0, 2.0, 2.0, 4.0, 2.0}; }

SampleSet small_set() {
  SampleSet s;
  s.n_r = 8;
  s.n_theta = 8;
  return s;
}

// Largest entry-wise difference relative to the largest entry of each field.
double jet_gap(const FieldJet& a, const FieldJet& b) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Jet& A = detail::component(a, k);
    const Jet& B = detail::component(b, k);
    const std::array<long double, 7> ea{A.v, A.t, A.x, A.y, A.xx, A.xy, A.yy};
    const std::array<long double, 7> eb{B.v, B.t, B.x, B.y, B.xx, B.xy, B.yy};
    long double scale = 1.0L;
    for (long double e : ea) scale = std::max(scale, std::abs(e));
    for (std::size_t i = 0; i < 7; ++i) worst = std::max(worst, static_cast<double>(std::abs(ea[i] - eb[i]) / scale));
  }
  return worst;
}

std::vector<Point> probe_points() {
  return {{1.0, 0.3, 0.4}, {0.7, -0.5, 0.2}, {1.6, 0.1, -0.6}, {2.2, -0.35, -0.25}};
}

std::vector<GroupElement> every_variant(double eps) {
  return {Rotation{TimeFunction::sine(), eps},
          Galilei{TimeFunction::quadratic(0.5), Axis::y, eps},
          PressureShift{TimeFunction::quadratic(1.0), eps},
          TimeTranslation{0.2 * eps},
          Scale{eps, -1.0, 3.0}};
}

}  // namespace

TEST(Transform, ZeroEpsIsIdentity) {
  const FieldProvider src = provider_of(GaussianDecay({1.0, 0.5, 5.0, 3.0, 0.75, 4.0, -3.0, 1.0}));
  std::vector<GroupElement> elems = every_variant(0.0);
  elems.push_back(PressureShift{TimeFunction::constant(0.0), 1.0});
  for (const GroupElement& e : elems) {
    const FieldProvider out = transform_field(e, src);
    for (const Point& p : probe_points()) {
      EXPECT_EQ(jet_gap(out(p.t, p.x, p.y), src(p.t, p.x, p.y)), 0.0) << element_name(e);
    }
  }
}

TEST(Transform, ConstantRotationFixesRadialSolutions) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> frac(0.05, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> time(0.5, 2.0);
  std::uniform_real_distribution<double> eps(-3.0, 3.0);
  for (const SolutionFamily& sol : {SolutionFamily(StationaryFront(fig34())), SolutionFamily(SteadyState({}))}) {
    const FieldProvider src = provider_of(sol);
    const double delta = boundary_of(sol).delta;
    for (int i = 0; i < 100; ++i) {
      const FieldProvider rot = transform_field(Rotation{TimeFunction::constant(1.0), eps(rng)}, src);
      const double r = frac(rng) * delta, th = angle(rng), t = time(rng);
      const FieldValue a = rot(t, r * std::cos(th), r * std::sin(th)).value();
      const FieldValue b = src(t, r * std::cos(th), r * std::sin(th)).value();
      const double s = std::max({1.0, std::abs(b.alpha), std::abs(b.p), std::hypot(b.u1, b.u2)});
      EXPECT_NEAR(a.alpha, b.alpha, 1e-12 * s);
      EXPECT_NEAR(a.p, b.p, 1e-12 * s);
      EXPECT_NEAR(a.u1, b.u1, 1e-12 * s);
      EXPECT_NEAR(a.u2, b.u2, 1e-12 * s);
    }
  }
}

TEST(Transform, GalileiBoostOfConstantState) {
  const FieldProvider boosted = transform_field(Galilei{TimeFunction::linear(0.0, 1.0), Axis::x, 1.0},
                                                constant_state(1.5));
  const FieldJet j = boosted(0.8, 0.2, -0.4);
  EXPECT_EQ(j.u1.v, 1.0L);
  EXPECT_EQ(j.u2.v, 0.0L);
  EXPECT_EQ(j.alpha.v, 1.5L);
  const PowerLawParams zero_source{1.0, 0.0, 1.0, 0.0, 2.0};
  const ResidualReport rep = governing_residual(boosted, zero_source, {4.0}, SampleSet{}.points([](double) { return 2.0; }));
  EXPECT_EQ(rep.max_linf(), 0.0);
}

TEST(Transform, PressureShiftAddsSpaceConstant) {
  const FieldProvider src = provider_of(StationaryFront(fig34()));
  const FieldProvider out = transform_field(PressureShift{TimeFunction::quadratic(1.0), 1.0}, src);
  const FieldJet a = out(1.5, 0.2, 0.1);
  const FieldJet b = src(1.5, 0.2, 0.1);
  EXPECT_NEAR(static_cast<double>(a.p.v - b.p.v), 2.25, 1e-14);
  EXPECT_NEAR(static_cast<double>(a.p.t - b.p.t), 3.0, 1e-14);
  EXPECT_EQ(a.p.x, b.p.x);
  EXPECT_EQ(a.p.yy, b.p.yy);
}

TEST(Transform, TimeTranslationOutsideDomainThrows) {
  const FieldProvider out = transform_field(TimeTranslation{2.0}, provider_of(StationaryFront(fig34())));
  EXPECT_THROW(out(1.0, 0.1, 0.1), DomainError);
}

TEST(OrbitResidual, ScaleOnStationaryFront) {
  const SolutionFamily sol = StationaryFront(fig34());
  const ResidualReport rep =
      orbit_residual(Scale{0.3, -1.0, 2.0}, sol, triplet_of(sol), phys_of(sol), sample_points(sol, SampleSet{}));
  EXPECT_LE(rep.max_linf(), 1e-8);
}

TEST(OrbitResidual, ScaledFieldMatchesIndependentScaling) {
  // The scaled stationary front at (t, x) equals e^{2ε}α(e^{−2(1−n)ε}t, e^{−(1+m)ε}x); with m = −1 only time rescales.
  const StationaryFront s(fig34());
  const double eps = 0.3;
  const FieldProvider out = transform_field(Scale{eps, -1.0, 2.0}, provider_of(s));
  const double t = 1.3, x = 0.2, y = -0.15;
  const FieldValue src = eval_value(s, t * std::exp(2.0 * eps), x, y);
  const FieldValue got = out(t, x, y).value();
  EXPECT_NEAR(got.alpha, std::exp(2.0 * eps) * src.alpha, 1e-12 * got.alpha);
  EXPECT_NEAR(got.p, std::exp(4.0 * eps) * src.p, 1e-12 * std::abs(got.p));
  EXPECT_NEAR(got.u1, std::exp(2.0 * eps) * src.u1, 1e-12 * std::abs(got.u1));
}

TEST(OrbitResidual, PressureShiftLeavesResidualsUnchanged) {
  const SolutionFamily sol = StationaryFront(fig34());
  const std::vector<Point> pts = sample_points(sol, SampleSet{});
  const ResidualReport base = governing_residual(provider_of(sol), triplet_of(sol), phys_of(sol), pts);
  const ResidualReport orb =
      orbit_residual(PressureShift{TimeFunction::quadratic(1.0), 1.0}, sol, triplet_of(sol), phys_of(sol), pts);
  for (std::size_t e = 0; e < 4; ++e) EXPECT_EQ(orb.equations[e].linf, base.equations[e].linf);
}

TEST(OrbitResidual, TimeDependentRotation) {
  const SolutionFamily sol = StationaryFront(fig34());
  const std::vector<Point> pts = sample_points(sol, SampleSet{});
  const ResidualReport full =
      orbit_residual(Rotation{TimeFunction::sine(), 0.5}, sol, triplet_of(sol), phys_of(sol), pts);
  const ResidualReport half =
      orbit_residual(Rotation{TimeFunction::sine(), 0.25}, sol, triplet_of(sol), phys_of(sol), pts);
  EXPECT_LE(full.max_linf(), 1e-8);
  EXPECT_LE(full.max_rel(), 10.0 * std::max(half.max_rel(), roundoff_floor));
}

TEST(OrbitResidual, RotationVelocityCorrection) {
  // With f = t the rotated constant state picks up the rigid velocity ε(y, −x) rotated back.
  const double eps = 0.4;
  const FieldProvider out = transform_field(Rotation{TimeFunction::linear(0.0, 1.0), eps}, constant_state(1.0));
  const double t = 0.0, x = 0.3, y = 0.5;
  const FieldJet j = out(t, x, y);
  // At t = 0 the rotation angle vanishes, leaving u* = ε(y, −x) in the source frame, which is the image frame.
  EXPECT_NEAR(static_cast<double>(j.u1.v), eps * y, 1e-15);
  EXPECT_NEAR(static_cast<double>(j.u2.v), -eps * x, 1e-15);
}

TEST(OrbitResidual, ScaleRequiresPowerLawTriplet) {
  const SolutionFamily steady = SteadyState({});
  EXPECT_THROW(orbit_residual(Scale{0.3, 1.0, 2.0}, steady, triplet_of(steady), phys_of(steady),
                              sample_points(steady, small_set())),
               InapplicableSymmetryError);
  const SolutionFamily st = StationaryFront(fig34());
  EXPECT_THROW(orbit_residual(Scale{0.3, 1.0, 2.0}, st, triplet_of(st), phys_of(st), sample_points(st, small_set())),
               InapplicableSymmetryError);
  EXPECT_NO_THROW(check_applicable(Rotation{}, triplet_of(steady)));
}

TEST(OrbitResidual, SolutionsPreservedAcrossOrbit) {
  const std::vector<SolutionFamily> fams{GaussianDecay({1.0, 0.5, 5.0, 3.0, 0.75, 4.0, -3.0, 1.0}),
                                         StationaryFront(fig34()), PowerFront({}), LogFront({}), SteadyState({})};
  for (const SolutionFamily& sol : fams) {
    const ConstitutiveTriplet tr = triplet_of(sol);
    const std::vector<Point> pts = sample_points(sol, small_set());
    const ResidualReport base = governing_residual(provider_of(sol), tr, phys_of(sol), pts);
    for (double eps : {-1.0, -0.5, 0.5, 1.0}) {
      std::vector<GroupElement> elems{Rotation{TimeFunction::constant(1.0), eps},
                                      Rotation{TimeFunction::sine(), eps},
                                      Galilei{TimeFunction::linear(0.0, 1.0), Axis::x, eps},
                                      PressureShift{TimeFunction::quadratic(1.0), eps}, TimeTranslation{0.4 * eps}};
      if (const auto* pl = std::get_if<PowerLawParams>(&tr)) elems.push_back(Scale{eps, pl->m, pl->n});
      for (const GroupElement& e : elems) {
        const ResidualReport orb = orbit_residual(e, sol, tr, phys_of(sol), pts);
        EXPECT_TRUE(orbit_within(orb, base))
            << family_name(sol) << " " << element_name(e) << " eps=" << eps << " orbit " << orb.max_rel()
            << " base " << base.max_rel();
      }
    }
  }
}

TEST(GroupLaw, RotationsCompose) {
  const FieldProvider src = provider_of(GaussianDecay({1.0, 0.5, 5.0, 3.0, 0.75, 4.0, -3.0, 1.0}));
  for (const TimeFunction& f : {TimeFunction::constant(1.0), TimeFunction::sine(0.7, 1.3)}) {
    const FieldProvider twice = transform_field(Rotation{f, 0.3}, transform_field(Rotation{f, 0.45}, src));
    const FieldProvider once = transform_field(Rotation{f, 0.75}, src);
    for (const Point& p : probe_points()) EXPECT_LE(jet_gap(twice(p.t, p.x, p.y), once(p.t, p.x, p.y)), 1e-12);
  }
}

TEST(GroupLaw, InverseUndoesEveryVariant) {
  const FieldProvider src = provider_of(GaussianDecay({1.0, 0.5, 5.0, 3.0, 0.75, 4.0, -3.0, 1.0}));
  for (const GroupElement& e : every_variant(0.6)) {
    const FieldProvider round = transform_field(e, transform_field(inverse(e), src));
    for (const Point& p : probe_points()) {
      EXPECT_LE(jet_gap(round(p.t, p.x, p.y), src(p.t, p.x, p.y)), 1e-12) << element_name(e);
    }
    for (const Point& p : probe_points()) {
      const Point back = forward_point(inverse(e), forward_point(e, p));
      EXPECT_NEAR(back.t, p.t, 1e-14);
      EXPECT_NEAR(back.x, p.x, 1e-14);
      EXPECT_NEAR(back.y, p.y, 1e-14);
    }
  }
}

TEST(BoundaryInvariance, RotationOnAnyCircle) {
  for (const BoundaryCircle& b : {BoundaryCircle{0.5, 0.0}, BoundaryCircle{2.0, -1.0}, BoundaryCircle{1.0, 3.0}}) {
    EXPECT_LE(boundary_invariance(Rotation{TimeFunction::sine(), 1.0}, b, 1.3), 1e-13);
  }
}

TEST(BoundaryInvariance, ScaleOnStaticCircleWithZeroMobilityExponent) {
  EXPECT_EQ(boundary_invariance(Scale{1.0, -1.0, 2.0}, {0.67, 0.0}), 0.0);
}

TEST(BoundaryInvariance, ScaleRequiresMatchingKappa) {
  const Scale s{1.0, 1.0, 3.0};
  EXPECT_LE(boundary_invariance(s, {1.0, -1.0}), 1e-14);
  // On Γ = 0 the criterion is 2(1+m)δ²t^κ (1 + κ(1−n)/(1+m)); here 4(κ + 1) at t = δ = 1.
  EXPECT_NEAR(boundary_invariance(s, {1.0, 1.0}), 8.0, 1e-13);
  EXPECT_NEAR(boundary_invariance(s, {1.0, 0.0}), 4.0, 1e-13);
  EXPECT_NEAR(boundary_invariance(s, {1.0, 2.0}) / boundary_invariance(s, {1.0, 1.0}), 1.5, 1e-13);
}

TEST(BoundaryInvariance, FamilyBoundariesAreScaleInvariant) {
  EXPECT_LE(boundary_invariance(Scale{1.0, 1.0, 3.0}, boundary_of(PowerFront({}))), 1e-13);
  const StationaryFront s(fig34());
  EXPECT_LE(boundary_invariance(Scale{1.0, -1.0, 2.0}, s.boundary()), 1e-13);
}

TEST(Plane, SliceOfScaleInvariantSolution) {
  const PowerFront pf({});
  const SolutionFamily sol = pf;
  const auto pl = std::get<PowerLawParams>(triplet_of(sol));
  const double R = boundary_of(sol).radius(1.0);
  std::vector<std::array<double, 2>> pts;
  for (double f : {0.1, 0.3, 0.6, 0.9}) {
    for (double th : {0.2, 1.7, 3.9}) pts.push_back({f * R * std::cos(th), f * R * std::sin(th)});
  }
  const PlaneProvider plane = plane_slice(provider_of(sol));
  EXPECT_LE(plane_residual(plane, pl, phys_of(sol), pts).max_rel(), 1e-12);
  for (Axis ax : {Axis::x, Axis::y}) {
    const double gamma = scale_exponents(pl.m, pl.n).gamma;
    const PlaneProvider moved = transform_plane({ax, 0.05 * R, gamma}, plane);
    EXPECT_LE(plane_residual(moved, pl, phys_of(sol), pts).max_rel(), 1e-12);
    // A translation without the velocity correction is not a symmetry.
    const PlaneProvider wrong = transform_plane({ax, 0.05 * R, 0.0}, plane);
    EXPECT_GT(plane_residual(wrong, pl, phys_of(sol), pts).max_rel(), 1e-6);
  }
}
