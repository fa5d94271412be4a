#pragma once

// Three-grating Mach-Zehnder atom interferometer: zeroth and first
// diffraction orders recombined and imaged onto a detection screen.
//
// Intensities are in arbitrary units. The single-slit envelope and overall
// constants are dropped, so only ratios and fringe positions are meaningful.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/grid.hpp"
#include "itlab/units.hpp"

namespace itlab {

struct GratingSpec {
  int n_slits = 2;
  /// grating period d (a.u.)
  double period = 1.0;
  /// beam momentum along z (a.u.)
  double p0 = 1.0;

  void validate() const {
    if (n_slits < 2) throw ValidationError("grating needs at least two slits");
    if (!(period > 0.0)) throw ValidationError("grating period must be positive");
    if (!(p0 > 0.0)) throw ValidationError("beam momentum must be positive");
  }

  /// p_g = 2 pi hbar / d
  double grating_momentum() const { return kTwoPi * kHbar / period; }
};

struct InterferometerGeometry {
  /// grating separation L (a.u.)
  double separation = 1.0;
  /// de Broglie wavelength (a.u.)
  double wavelength = 1.0;
  /// path separation w at the second grating (a.u.); often only quoted approximately
  std::optional<double> path_separation;
};

struct GeometryConsistency {
  double diffraction_angle = 0.0;  // p_g / p0
  double wavelength_ratio = 0.0;   // lambda / d
  std::optional<double> path_ratio;  // w / L
  /// max relative deviation among the available ratios
  double max_relative_deviation = 0.0;
};

inline GeometryConsistency geometry_consistency(const GratingSpec& spec, const InterferometerGeometry& geom) {
  GeometryConsistency c;
  c.diffraction_angle = spec.grating_momentum() / spec.p0;
  c.wavelength_ratio = geom.wavelength / spec.period;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  c.max_relative_deviation = rel(c.wavelength_ratio, c.diffraction_angle);
  if (geom.path_separation) {
    c.path_ratio = *geom.path_separation / geom.separation;
    c.max_relative_deviation = std::max({c.max_relative_deviation, rel(*c.path_ratio, c.diffraction_angle),
                                         rel(*c.path_ratio, c.wavelength_ratio)});
  }
  return c;
}

/// Grating spec and geometry must agree on p_g/p0 = lambda/d (= w/L when w is given) to 1e-9.
inline void validate_geometry(const GratingSpec& spec, const InterferometerGeometry& geom) {
  spec.validate();
  if (!(geom.separation > 0.0) || !(geom.wavelength > 0.0))
    throw ValidationError("interferometer lengths must be positive");
  const auto c = geometry_consistency(spec, geom);
  if (c.max_relative_deviation > 1e-9)
    throw ValidationError("inconsistent interferometer geometry: p_g/p0, lambda/d and w/L differ by " +
                          std::to_string(c.max_relative_deviation));
}

/// Geometry implied by a beam wavelength and the grating: p0 = 2 pi hbar / lambda, w = L lambda / d.
inline InterferometerGeometry consistent_geometry(const GratingSpec& spec, double separation) {
  InterferometerGeometry g;
  g.separation = separation;
  g.wavelength = kTwoPi * kHbar / spec.p0;
  g.path_separation = separation * g.wavelength / spec.period;
  return g;
}

/// N-slit interference factor sin(N p d / 2 hbar) / sin(p d / 2 hbar).
/// At p = n p_g the removable singularity takes its limit (-1)^(n (N-1)) N.
inline double grating_momentum_wf(const GratingSpec& spec, double p_x) {
  spec.validate();
  const double u = p_x * spec.period / (2.0 * kHbar);
  const double order = std::round(u / kPi);
  const double offset = u - order * kPi;
  const int n = spec.n_slits;
  if (std::abs(offset) < 1e-7) {
    // sin(N(n pi + e))/sin(n pi + e) = (-1)^(n(N-1)) sin(N e)/sin(e), expanded near e = 0
    const double sign = (static_cast<long long>(std::abs(order)) * (n - 1)) % 2 == 0 ? 1.0 : -1.0;
    const double e2 = offset * offset;
    return sign * n * (1.0 - (static_cast<double>(n) * n - 1.0) * e2 / 6.0);
  }
  return std::sin(n * u) / std::sin(u);
}

/// Array factor referenced to the first slit, sum_k exp(-i p k d / hbar).
/// Its value at every diffraction order is exactly N.
inline Complex grating_array_factor(const GratingSpec& spec, double p_x) {
  const double u = p_x * spec.period / (2.0 * kHbar);
  return std::polar(1.0, -u * (spec.n_slits - 1)) * grating_momentum_wf(spec, p_x);
}

/// Common time of flight t = 2 L / (p0 / m).
inline double time_of_flight(const GratingSpec& spec, const InterferometerGeometry& geom, double mass) {
  return 2.0 * geom.separation * mass / spec.p0;
}

/// Two-trajectory amplitude at transverse position x on the detection screen:
/// (m / i t)^(3/2) [exp(i S^(0)/hbar) Psi~(p0) + exp(i S^(1)/hbar) Psi~(p0 + p_g)],
/// with the action difference S^(0) - S^(1) = p_g x split symmetrically.
inline Complex two_path_superposition(const GratingSpec& spec, const InterferometerGeometry& geom, double x, double t,
                                      double mass) {
  validate_geometry(spec, geom);
  if (!(mass > 0.0)) throw ValidationError("mass must be positive");
  const double tof = time_of_flight(spec, geom, mass);
  if (std::abs(t - tof) > 1e-9 * tof)
    throw ValidationError("time of flight must equal 2 L m / p0 on both paths");
  const double p_g = spec.grating_momentum();
  const Complex prefactor = std::pow(std::sqrt(Complex(0.0, -mass / t)), 3);
  const Complex zeroth = std::polar(1.0, 0.5 * p_g * x / kHbar) * grating_array_factor(spec, 0.0);
  const Complex first = std::polar(1.0, -0.5 * p_g * x / kHbar) * grating_array_factor(spec, p_g);
  return prefactor * (zeroth + first);
}

struct FringeProfile {
  std::vector<double> x_samples;
  std::vector<double> intensity;
  /// mean spacing of intensity maxima
  double period = 0.0;
  double visibility = 0.0;
  double peak_intensity = 0.0;
};

inline constexpr int kMinSamplesPerPeriod = 16;

namespace detail {
/// Sub-sample location of a local maximum from a parabola through three samples.
inline double refine_peak(double x0, double h, double ym, double y0, double yp) {
  const double denom = ym - 2.0 * y0 + yp;
  if (denom == 0.0) return x0;
  return x0 + 0.5 * h * (ym - yp) / denom;
}
}  // namespace detail

/// Samples |Psi|^2 on [x_lo, x_hi] (endpoints included) and measures the
/// fringe period from the spacing of maxima.
inline FringeProfile fringe_profile(const GratingSpec& spec, const InterferometerGeometry& geom, double x_lo,
                                    double x_hi, int n_samples, double mass) {
  validate_geometry(spec, geom);
  if (!(x_hi > x_lo)) throw ValidationError("fringe range must have x_hi > x_lo");
  if (n_samples < 2) throw ValidationError("fringe profile needs at least two samples");
  const double h = (x_hi - x_lo) / (n_samples - 1);
  if (spec.period / h < kMinSamplesPerPeriod * (1.0 - 1e-12))
    throw ValidationError("fringe profile undersampled: need at least 16 samples per grating period");

  const double t = time_of_flight(spec, geom, mass);
  FringeProfile out;
  out.x_samples.resize(n_samples);
  out.intensity.resize(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    const double x = x_lo + k * h;
    out.x_samples[k] = x;
    out.intensity[k] = std::norm(two_path_superposition(spec, geom, x, t, mass));
  }

  const auto [lo_it, hi_it] = std::minmax_element(out.intensity.begin(), out.intensity.end());
  out.peak_intensity = *hi_it;
  out.visibility = (*hi_it - *lo_it) / (*hi_it + *lo_it);

  std::vector<double> peaks;
  const double floor = 0.5 * out.peak_intensity;
  for (int k = 1; k + 1 < n_samples; ++k) {
    const double y = out.intensity[k];
    if (y > floor && y >= out.intensity[k - 1] && y > out.intensity[k + 1])
      peaks.push_back(detail::refine_peak(out.x_samples[k], h, out.intensity[k - 1], y, out.intensity[k + 1]));
  }
  if (peaks.size() >= 2) out.period = (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
  return out;
}

}  // namespace itlab
