#pragma once

#include <cmath>
#include <string>

#include "itlab/errors.hpp"
#include "itlab/force_field.hpp"
#include "itlab/fourier.hpp"
#include "itlab/grid.hpp"

namespace itlab {

/// Density above which the outermost samples signal that the packet reached the boundary.
inline constexpr double kEdgeDensityThreshold = 1e-8;

struct PropagationPlan {
  ForceField field = ForceField::free();
  double t_i = 0.0;
  double t_f = 0.0;
  double dt = 0.0;  // 0 selects default_time_step(grid, mass)
  Grid grid = Grid(-1.0, 1.0, Grid::kMinPoints);
  double mass = 1.0;
};

/// Largest step keeping the kinetic phase at the Nyquist momentum within pi/4.
inline double default_time_step(const Grid& grid, double mass) {
  const double p_max = grid.nyquist_momentum();
  return (kPi / 4.0) * 2.0 * mass * kHbar / (p_max * p_max);
}

namespace detail {
inline void check_edges(const Wavepacket& psi, double t) {
  const double edge = std::max(std::norm(psi.amplitudes.front()), std::norm(psi.amplitudes.back()));
  if (!(edge <= kEdgeDensityThreshold))
    throw BoundaryError("edge density " + std::to_string(edge) + " exceeds 1e-8 at t = " + std::to_string(t) +
                        "; enlarge the grid");
}
}  // namespace detail

/// Strang-split spectral propagation: half potential kick, full kinetic
/// step in momentum space, half potential kick. Adjacent half kicks are
/// fused, which leaves |Psi| (and hence the edge check) unchanged.
inline Wavepacket splitstep_propagate(const Wavepacket& psi, const PropagationPlan& plan) {
  const double mass = plan.mass;
  if (!(psi.grid == plan.grid)) throw ValidationError("wavepacket grid differs from the propagation grid");
  if (!(mass > 0.0)) throw ValidationError("mass must be positive");
  if (!(plan.t_f >= plan.t_i)) throw ValidationError("propagation needs t_f >= t_i");
  const double span = plan.t_f - plan.t_i;
  detail::check_edges(psi, plan.t_i);
  if (span == 0.0) return Wavepacket(psi.grid, psi.amplitudes, plan.t_f);

  double dt = plan.dt == 0.0 ? default_time_step(plan.grid, mass) : plan.dt;
  if (!(dt > 0.0)) throw ValidationError("time step must be positive");
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(span / dt - 1e-9)));
  dt = span / static_cast<double>(steps);

  const Grid& grid = plan.grid;
  const std::size_t n = grid.size();
  const double dp = grid.momentum_spacing();

  ComplexVector half_kick(n), full_kick(n), kinetic(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = plan.field.potential_energy(grid.z(j));
    if (!std::isfinite(v)) throw IntegrationError("non-finite potential on the grid");
    half_kick[j] = std::polar(1.0, -0.5 * v * dt / kHbar);
    full_kick[j] = half_kick[j] * half_kick[j];
    const double p = fft_frequency(j, n) * dp;
    // 1/n restores the unnormalised backward transform.
    kinetic[j] = std::polar(1.0 / static_cast<double>(n), -p * p / (2.0 * mass * kHbar) * dt);
  }

  FftPlan fft(n);
  Wavepacket out(grid, psi.amplitudes, plan.t_i);
  ComplexVector& amps = out.amplitudes;
  for (std::size_t j = 0; j < n; ++j) amps[j] *= half_kick[j];
  for (std::size_t step = 0; step < steps; ++step) {
    fft.forward(amps);
    for (std::size_t j = 0; j < n; ++j) amps[j] *= kinetic[j];
    fft.backward(amps);
    const auto& kick = (step + 1 == steps) ? half_kick : full_kick;
    for (std::size_t j = 0; j < n; ++j) amps[j] *= kick[j];
    detail::check_edges(out, plan.t_i + static_cast<double>(step + 1) * dt);
  }
  out.time = plan.t_f;
  return out;
}

}  // namespace itlab
