#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "itlab/fourier.hpp"
#include "itlab/gaussian.hpp"
#include "itlab/split_step.hpp"

using namespace itlab;

namespace {
double linf_vs(const Wavepacket& psi, auto&& exact) {
  double err = 0.0;
  for (std::size_t k = 0; k < psi.grid.size(); ++k)
    err = std::max(err, std::abs(psi.amplitudes[k] - exact(psi.grid.z(k))));
  return err;
}
}  // namespace

TEST(GaussianInitial, PeakAmplitude) {
  const GaussianSpec spec{10.0, 0.0, 0.0, 1.0};
  const Wavepacket psi = gaussian_initial(spec, make_grid(-128, 128, 512));
  EXPECT_NEAR(std::abs(psi.amplitudes[256]), 0.23752675292432983, 1e-15);
  EXPECT_NEAR(norm(psi), 1.0, 1e-10);
}

TEST(GaussianInitial, MomentumPeak) {
  const GaussianSpec spec{10.0, 0.0, 0.0, 1.0};
  const MomentumSpectrum s = to_momentum(gaussian_initial(spec, make_grid(-128, 128, 512)));
  EXPECT_NEAR(std::abs(s.amplitudes[256]), 2.3752675292432983, 1e-10);
}

TEST(GaussianInitial, NormalizedForAnySpec) {
  for (double sigma : {0.5, 2.0, 7.0})
    for (double z0 : {-3.0, 0.0, 4.0}) {
      const Wavepacket psi = gaussian_initial({sigma, z0, 0.8, 2.0}, make_grid(-64, 64, 1024));
      EXPECT_NEAR(norm(psi), 1.0, 1e-10) << sigma << " " << z0;
    }
}

TEST(GaussianInitial, GridTooSmall) {
  EXPECT_THROW(gaussian_initial({10.0, 0.0, 0.0, 1.0}, make_grid(-30, 30, 256)), ValidationError);
  EXPECT_THROW(gaussian_initial({0.0, 0.0, 0.0, 1.0}, make_grid(-30, 30, 256)), ValidationError);
}

TEST(FreeExact, InitialValue) {
  const GaussianSpec spec{10.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(std::abs(free_exact(spec, 0.0, 0.0) - std::pow(kPi * 100.0, -0.25)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(free_exact(spec, 7.0, 0.0) - gaussian_amplitude(spec, 7.0)), 0.0, 1e-16);
}

TEST(FreeExact, Densities) {
  const GaussianSpec spec{10.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(std::norm(free_exact(spec, 30.0, 1000.0)), 5.1352887510740738e-3, 1e-15);
  EXPECT_NEAR(std::norm(free_exact(spec, 30.0, 200.0)), 4.1707100072566015e-3, 1e-15);
}

TEST(FreeExact, RequiresCentredPacket) {
  EXPECT_THROW(free_exact({10.0, 1.0, 0.0, 1.0}, 0.0, 1.0), ValidationError);
  EXPECT_THROW(free_exact({10.0, 0.0, 0.1, 1.0}, 0.0, 1.0), ValidationError);
  EXPECT_THROW(free_exact({10.0, 0.0, 0.0, 1.0}, 0.0, -1.0), ValidationError);
}

TEST(ForcedExact, ZeroForceIsFree) {
  const GaussianSpec spec{2.0, 0.0, 0.0, 1.0};
  for (double z : {-3.0, 0.0, 8.0}) EXPECT_EQ(forced_exact(spec, 0.0, z, 15.0), free_exact(spec, z, 15.0));
}

TEST(ForcedExact, BoostedDensity) {
  const GaussianSpec spec{2.0, 0.0, 0.0, 1.5};
  for (double t : {1.0, 5.0, 15.0})
    for (double z : {-2.0, 10.0, 60.0}) {
      const double shift = 0.7 * t * t / (2.0 * spec.mass);
      const double ref = std::norm(free_exact(spec, z - shift, t));
      EXPECT_NEAR(std::norm(forced_exact(spec, 0.7, z, t)), ref, 1e-12 * ref);
    }
}

TEST(ForcedExact, PeakDensity) {
  const GaussianSpec spec{2.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(std::norm(forced_exact(spec, 1.0, 112.5, 15.0)), 7.2685291757722479e-2, 1e-15);
}

TEST(SplitStep, FreeMatchesClosedForm) {
  const GaussianSpec spec{10.0, 0.0, 0.0, 1.0};
  const Grid grid = make_grid(-512, 512, 1024);
  const Wavepacket psi = splitstep_propagate(gaussian_initial(spec, grid), {ForceField::free(), 0.0, 200.0, 0.0, grid});
  EXPECT_DOUBLE_EQ(psi.time, 200.0);
  EXPECT_LE(linf_vs(psi, [&](double z) { return free_exact(spec, z, 200.0); }), 1e-6);
}

TEST(SplitStep, UniformForceMatchesClosedForm) {
  const GaussianSpec spec{2.0, 0.0, 0.0, 1.0};
  const Grid grid = make_grid(-64, 192, 2048);
  const auto field = ForceField::uniform(1.0);
  const Wavepacket psi = splitstep_propagate(gaussian_initial(spec, grid), {field, 0.0, 10.0, 0.0, grid});
  EXPECT_LE(linf_vs(psi, [&](double z) { return forced_exact(spec, 1.0, z, 10.0); }), 1e-6);
}

TEST(SplitStep, NormDriftOverManySteps) {
  const GaussianSpec spec{3.0, 0.0, 0.0, 1.0};
  const Grid grid = make_grid(-32, 32, 256);
  const auto field = ForceField::harmonic(1.0, 0.5);
  const Wavepacket psi = splitstep_propagate(gaussian_initial(spec, grid), {field, 0.0, 100.0, 0.01, grid});
  EXPECT_NEAR(norm(psi), 1.0, 1e-10);
}

TEST(SplitStep, CoherentStateRecurrence) {
  const GaussianSpec spec{1.0, 1.5, 0.0, 1.0};
  const Grid grid = make_grid(-16, 16, 256);
  const Wavepacket psi0 = gaussian_initial(spec, grid);
  const Wavepacket psi =
      splitstep_propagate(psi0, {ForceField::harmonic(1.0, 1.0), 0.0, kTwoPi, kTwoPi / 4096, grid});
  Complex overlap(0.0, 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) overlap += std::conj(psi0.amplitudes[k]) * psi.amplitudes[k];
  EXPECT_GE(std::abs(overlap * grid.spacing()), 1.0 - 1e-6);
}

TEST(SplitStep, MomentumInvariantUnderFreeMotion) {
  const GaussianSpec spec{4.0, 0.0, 0.3, 1.0};
  const Grid grid = make_grid(-1024, 1024, 4096);
  const Wavepacket psi0 = gaussian_initial(spec, grid);
  const Wavepacket psi = splitstep_propagate(psi0, {ForceField::free(), 0.0, 300.0, 0.0, grid});
  const auto a = to_momentum(psi0);
  const auto b = to_momentum(psi);
  double err = 0.0;
  for (std::size_t k = 0; k < a.amplitudes.size(); ++k)
    err = std::max(err, std::abs(std::norm(a.amplitudes[k]) - std::norm(b.amplitudes[k])));
  EXPECT_LE(err, 1e-8);
}

TEST(SplitStep, SecondOrderInTimeStep) {
  const GaussianSpec spec{2.0, 0.0, 0.0, 1.0};
  const Grid grid = make_grid(-64, 192, 2048);
  const auto field = ForceField::uniform(1.0);
  const Wavepacket psi0 = gaussian_initial(spec, grid);
  auto error = [&](double dt) {
    const Wavepacket psi = splitstep_propagate(psi0, {field, 0.0, 8.0, dt, grid});
    return linf_vs(psi, [&](double z) { return forced_exact(spec, 1.0, z, 8.0); });
  };
  const double coarse = error(0.04);
  const double fine = error(0.02);
  EXPECT_NEAR(coarse / fine, 4.0, 0.2);
}

TEST(SplitStep, BoundaryViolation) {
  const GaussianSpec spec{2.0, 0.0, 0.0, 1.0};
  const Grid grid = make_grid(-16, 16, 256);
  EXPECT_THROW(splitstep_propagate(gaussian_initial(spec, grid), {ForceField::free(), 0.0, 50.0, 0.0, grid}),
               BoundaryError);
}

TEST(SplitStep, PlanValidation) {
  const Grid grid = make_grid(-16, 16, 256);
  const Wavepacket psi = gaussian_initial({1.0, 0.0, 0.0, 1.0}, grid);
  EXPECT_THROW(splitstep_propagate(psi, {ForceField::free(), 0.0, 1.0, 0.0, make_grid(-16, 16, 512)}),
               ValidationError);
  EXPECT_THROW(splitstep_propagate(psi, {ForceField::free(), 1.0, 0.0, 0.0, grid}), ValidationError);
  EXPECT_THROW(splitstep_propagate(psi, {ForceField::free(), 0.0, 1.0, 0.0, grid, 0.0}), ValidationError);
  const Wavepacket same = splitstep_propagate(psi, {ForceField::free(), 0.0, 0.0, 0.0, grid});
  EXPECT_EQ(same.amplitudes, psi.amplitudes);
}

TEST(SplitStep, DefaultStepKineticPhase) {
  const Grid grid = make_grid(-16, 16, 256);
  const double p = grid.nyquist_momentum();
  EXPECT_NEAR(p * p / 2.0 * default_time_step(grid, 1.0), kPi / 4, 1e-14);
}
