#pragma once

// Closed-form Gaussian wavepackets: the initial state, its momentum
// representation, and exact free and uniformly forced evolution.

#include <cmath>
#include <complex>

#include "itlab/errors.hpp"
#include "itlab/grid.hpp"
#include "itlab/units.hpp"

namespace itlab {

struct GaussianSpec {
  double sigma = 1.0;
  double z0 = 0.0;
  double p0 = 0.0;
  double mass = 1.0;

  void validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ValidationError("Gaussian width sigma must be positive");
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
    if (!std::isfinite(z0) || !std::isfinite(p0)) throw ValidationError("Gaussian centre must be finite");
  }

  /// Dimensionless spreading parameter hbar t / (m sigma^2).
  double regime(double t) const { return kHbar * t / (mass * sigma * sigma); }
};

/// (pi sigma^2)^(-1/4) exp(-(z - z0)^2 / 2 sigma^2 + i p0 z / hbar)
inline Complex gaussian_amplitude(const GaussianSpec& spec, double z) {
  const double u = (z - spec.z0) / spec.sigma;
  return std::pow(kPi * spec.sigma * spec.sigma, -0.25) * std::exp(-0.5 * u * u) *
         std::polar(1.0, spec.p0 * z / kHbar);
}

/// Fourier partner of gaussian_amplitude:
/// (sigma^2 / pi hbar^2)^(1/4) exp(-(p - p0)^2 sigma^2 / 2 hbar^2 - i (p - p0) z0 / hbar).
inline Complex gaussian_momentum(const GaussianSpec& spec, double p) {
  const double q = (p - spec.p0) * spec.sigma / kHbar;
  return std::pow(spec.sigma * spec.sigma / (kPi * kHbar * kHbar), 0.25) * std::exp(-0.5 * q * q) *
         std::polar(1.0, -(p - spec.p0) * spec.z0 / kHbar);
}

/// Samples the Gaussian on a grid. The grid must cover z0 +- 4 sigma.
inline Wavepacket gaussian_initial(const GaussianSpec& spec, const Grid& grid, double time = 0.0) {
  spec.validate();
  if (spec.z0 - 4.0 * spec.sigma < grid.z_min() || spec.z0 + 4.0 * spec.sigma > grid.z_max())
    throw ValidationError("grid does not span 8 sigma around the packet centre");
  ComplexVector amps(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) amps[k] = gaussian_amplitude(spec, grid.z(k));
  return Wavepacket(grid, std::move(amps), time);
}

/// Closed-form momentum spectrum sampled on n ascending points in [p_lo, p_hi].
inline MomentumSpectrum sample_gaussian_spectrum(const GaussianSpec& spec, double p_lo, double p_hi, std::size_t n,
                                                 double time = 0.0) {
  spec.validate();
  if (n < 4 || !(p_hi > p_lo)) throw ValidationError("momentum sampling needs p_hi > p_lo and at least four points");
  MomentumSpectrum out;
  out.time = time;
  out.p_values.resize(n);
  out.amplitudes.resize(n);
  const double h = (p_hi - p_lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    out.p_values[k] = p_lo + static_cast<double>(k) * h;
    out.amplitudes[k] = gaussian_momentum(spec, out.p_values[k]);
  }
  return out;
}

namespace detail {
inline void require_centred_at_rest(const GaussianSpec& spec) {
  spec.validate();
  if (spec.z0 != 0.0 || spec.p0 != 0.0)
    throw ValidationError("closed-form evolution assumes a packet at rest at the origin (z0 = p0 = 0)");
}
}  // namespace detail

/// Exact free evolution of the centred Gaussian:
/// (sigma^2/pi)^(1/4) (sigma^2 + i hbar t/m)^(-1/2) exp(-z^2/2 (sigma^2 - i hbar t/m)/(sigma^4 + hbar^2 t^2/m^2)).
inline Complex free_exact(const GaussianSpec& spec, double z_f, double t) {
  detail::require_centred_at_rest(spec);
  if (t < 0.0) throw ValidationError("free_exact needs t >= 0");
  const double s2 = spec.sigma * spec.sigma;
  const double tau = kHbar * t / spec.mass;
  const Complex width(s2, tau);
  const Complex exponent = -0.5 * z_f * z_f * Complex(s2, -tau) / (s2 * s2 + tau * tau);
  return std::pow(s2 / kPi, 0.25) / std::sqrt(width) * std::exp(exponent);
}

/// Exact evolution under a constant force F: a phase times the free packet
/// translated by F t^2 / 2m.
inline Complex forced_exact(const GaussianSpec& spec, double force, double z_f, double t) {
  if (t < 0.0) throw ValidationError("forced_exact needs t >= 0");
  const double m = spec.mass;
  const double phase = force * t * z_f / kHbar - force * force * t * t * t / (6.0 * m * kHbar);
  return std::polar(1.0, phase) * free_exact(spec, z_f - force * t * t / (2.0 * m), t);
}

}  // namespace itlab
