#include <gtest/gtest.h>

#include <cmath>

#include "itlab/interferometer.hpp"
#include "itlab/units.hpp"

using namespace itlab;

namespace {
GratingSpec lab_grating(int n) {
  return {n, units::nm_to_au(400.0), kTwoPi / units::pm_to_au(16.0)};
}
const double kL = units::cm_to_au(66.0);
const double kMass = units::amu_to_au(23.0);
}  // namespace

TEST(GratingWf, ZeroMomentumLimit) {
  EXPECT_DOUBLE_EQ(grating_momentum_wf(lab_grating(100), 0.0), 100.0);
  EXPECT_DOUBLE_EQ(grating_momentum_wf(lab_grating(7), 0.0), 7.0);
}

TEST(GratingWf, DiffractionOrders) {
  const GratingSpec odd = lab_grating(51);
  const GratingSpec even = lab_grating(100);
  const double pg = odd.grating_momentum();
  EXPECT_NEAR(grating_momentum_wf(odd, pg), 51.0, 1e-9);
  EXPECT_NEAR(grating_momentum_wf(odd, -3 * pg), 51.0, 1e-9);
  // for even N the real factor alternates sign between orders; its magnitude is N
  EXPECT_NEAR(grating_momentum_wf(even, pg), -100.0, 1e-9);
  EXPECT_NEAR(grating_momentum_wf(even, 2 * pg), 100.0, 1e-9);
  EXPECT_NEAR(std::abs(grating_array_factor(even, pg) - Complex(100.0, 0.0)), 0.0, 1e-9);
}

TEST(GratingWf, FirstZero) {
  const GratingSpec g = lab_grating(100);
  EXPECT_NEAR(grating_momentum_wf(g, kTwoPi / (100 * g.period)), 0.0, 1e-10);
}

TEST(GratingWf, SmoothAcrossSingularity) {
  const GratingSpec g = lab_grating(10);
  const double pg = g.grating_momentum();
  const double eps = 1e-9 * pg;
  EXPECT_NEAR(grating_momentum_wf(g, pg + eps), grating_momentum_wf(g, pg), 1e-6);
  const double direct = std::sin(10 * (pg + 1e-3 * pg) * g.period / 2) / std::sin((pg + 1e-3 * pg) * g.period / 2);
  EXPECT_NEAR(grating_momentum_wf(g, pg + 1e-3 * pg), direct, 1e-9);
}

TEST(GratingWf, ArrayFactorNearlyEqualAtPeaks) {
  for (int n : {50, 100, 200}) {
    const GratingSpec g = lab_grating(n);
    const Complex ratio = grating_array_factor(g, g.grating_momentum()) / grating_array_factor(g, 0.0);
    EXPECT_LE(std::abs(ratio - 1.0), 1e-3) << n;
  }
}

TEST(GratingSpec, Validation) {
  EXPECT_THROW((GratingSpec{1, 1.0, 1.0}).validate(), ValidationError);
  EXPECT_THROW((GratingSpec{2, 0.0, 1.0}).validate(), ValidationError);
  EXPECT_THROW((GratingSpec{2, 1.0, -1.0}).validate(), ValidationError);
}

TEST(Geometry, LabTriple) {
  const GratingSpec g = lab_grating(100);
  InterferometerGeometry geom{kL, units::pm_to_au(16.0), units::um_to_au(30.0)};
  const auto c = geometry_consistency(g, geom);
  EXPECT_NEAR(c.wavelength_ratio, 4e-5, 1e-15);
  EXPECT_NEAR(c.diffraction_angle, 4e-5, 1e-15);
  // quoted w = 30 um against L lambda / d = 26.4 um
  EXPECT_NEAR(*c.path_ratio, 4.5454545454545e-5, 1e-15);
  EXPECT_NEAR(c.max_relative_deviation, 0.13636363636, 1e-9);
  EXPECT_THROW(validate_geometry(g, geom), ValidationError);
  EXPECT_NEAR(units::au_to_nm(*consistent_geometry(g, kL).path_separation) * 1e-3, 26.4, 1e-9);
}

TEST(TwoPath, ConstructiveAndDestructive) {
  const GratingSpec g = lab_grating(100);
  const auto geom = consistent_geometry(g, kL);
  const double t = time_of_flight(g, geom, kMass);
  const double single = std::norm(std::pow(std::sqrt(Complex(0.0, -kMass / t)), 3) * 100.0);
  EXPECT_NEAR(std::norm(two_path_superposition(g, geom, 0.0, t, kMass)) / single, 4.0, 1e-12);
  EXPECT_NEAR(std::norm(two_path_superposition(g, geom, g.period / 2, t, kMass)) / single, 0.0, 1e-12);
}

TEST(TwoPath, PhaseDifference) {
  const GratingSpec g = lab_grating(100);
  const auto geom = consistent_geometry(g, kL);
  const double t = time_of_flight(g, geom, kMass);
  const double x = 0.3 * g.period;
  // I = |A|^2 2 N^2 (1 + cos(2 pi x / d))
  const double single = std::norm(std::pow(std::sqrt(Complex(0.0, -kMass / t)), 3) * 100.0);
  EXPECT_NEAR(std::norm(two_path_superposition(g, geom, x, t, kMass)) / single,
              2.0 * (1.0 + std::cos(kTwoPi * x / g.period)), 1e-10);
}

TEST(TwoPath, InconsistentInputs) {
  const GratingSpec g = lab_grating(100);
  auto geom = consistent_geometry(g, kL);
  const double t = time_of_flight(g, geom, kMass);
  EXPECT_THROW(two_path_superposition(g, geom, 0.0, 1.01 * t, kMass), ValidationError);
  geom.wavelength *= 1.01;
  EXPECT_THROW(two_path_superposition(g, geom, 0.0, t, kMass), ValidationError);
}

TEST(Fringes, PeriodVisibilityAndScaling) {
  const GratingSpec g100 = lab_grating(100);
  const GratingSpec g50 = lab_grating(50);
  const auto geom = consistent_geometry(g100, kL);
  const double d = g100.period;
  const auto a = fringe_profile(g100, geom, -3 * d, 3 * d, 385, kMass);
  const auto b = fringe_profile(g50, geom, -3 * d, 3 * d, 385, kMass);
  EXPECT_NEAR(units::au_to_nm(a.period), 400.0, 0.4);
  EXPECT_NEAR(a.visibility, 1.0, 1e-6);
  EXPECT_NEAR(a.peak_intensity / b.peak_intensity, 4.0, 0.01);
  for (double v : a.intensity) EXPECT_GE(v, 0.0);
  EXPECT_DOUBLE_EQ(a.x_samples.front(), -3 * d);
  EXPECT_DOUBLE_EQ(a.x_samples.back(), 3 * d);
}

TEST(Fringes, PeriodIndependentOfSetup) {
  for (double l_cm : {10.0, 66.0, 200.0})
    for (double lambda_pm : {8.0, 16.0, 50.0}) {
      GratingSpec g{20, units::nm_to_au(400.0), kTwoPi / units::pm_to_au(lambda_pm)};
      const auto geom = consistent_geometry(g, units::cm_to_au(l_cm));
      const auto p = fringe_profile(g, geom, -2 * g.period, 2 * g.period, 161, 1000.0);
      EXPECT_NEAR(p.period / g.period, 1.0, 1e-6) << l_cm << " " << lambda_pm;
    }
}

TEST(Fringes, Undersampled) {
  const GratingSpec g = lab_grating(100);
  const auto geom = consistent_geometry(g, kL);
  EXPECT_THROW(fringe_profile(g, geom, -3 * g.period, 3 * g.period, 90, kMass), ValidationError);
  EXPECT_NO_THROW(fringe_profile(g, geom, -3 * g.period, 3 * g.period, 97, kMass));
}
