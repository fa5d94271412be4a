#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/interpolate.hpp"
#include "itlab/units.hpp"

namespace itlab {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Uniform periodic grid: samples at z_min + k*dz for k = 0..n-1, dz = (z_max - z_min)/n.
class Grid {
 public:
  static constexpr std::size_t kMinPoints = 16;

  Grid(double z_min, double z_max, std::size_t n_points) : z_min_(z_min), z_max_(z_max), n_points_(n_points) {
    if (!std::isfinite(z_min) || !std::isfinite(z_max) || !(z_max > z_min))
      throw ValidationError("grid interval is degenerate: need z_max > z_min");
    if (n_points < kMinPoints) throw ValidationError("grid needs at least 16 points, got " + std::to_string(n_points));
    if (!std::has_single_bit(n_points))
      throw ValidationError("grid point count must be a power of two, got " + std::to_string(n_points));
  }

  double z_min() const { return z_min_; }
  double z_max() const { return z_max_; }
  std::size_t size() const { return n_points_; }
  double spacing() const { return (z_max_ - z_min_) / static_cast<double>(n_points_); }
  double z(std::size_t k) const { return z_min_ + static_cast<double>(k) * spacing(); }

  /// dp = 2*pi*hbar / (n dz)
  double momentum_spacing() const { return kTwoPi * kHbar / (static_cast<double>(n_points_) * spacing()); }
  /// Largest representable |p| (Nyquist).
  double nyquist_momentum() const { return kPi * kHbar / spacing(); }

  std::vector<double> points() const {
    std::vector<double> zs(n_points_);
    for (std::size_t k = 0; k < n_points_; ++k) zs[k] = z(k);
    return zs;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double z_min_;
  double z_max_;
  std::size_t n_points_;
};

inline Grid make_grid(double z_min, double z_max, std::size_t n_points) { return Grid(z_min, z_max, n_points); }

/// Complex amplitudes on a grid at a given time.
struct Wavepacket {
  Grid grid;
  ComplexVector amplitudes;
  double time = 0.0;

  Wavepacket(Grid g, ComplexVector amps, double t) : grid(g), amplitudes(std::move(amps)), time(t) {
    if (amplitudes.size() != grid.size())
      throw ValidationError("wavepacket has " + std::to_string(amplitudes.size()) + " amplitudes for a grid of " +
                            std::to_string(grid.size()));
  }

  /// Cubic interpolation of the amplitude at an off-grid point.
  Complex at(double z) const {
    return cubic_interpolate<Complex>(amplitudes, grid.z_min(), grid.spacing(), z);
  }
};

/// Momentum-space amplitudes on the grid conjugate to a spatial Grid,
/// ordered by increasing p: p_k = (k - n/2) dp.
struct MomentumSpectrum {
  std::vector<double> p_values;
  ComplexVector amplitudes;
  double time = 0.0;

  double spacing() const { return p_values.size() > 1 ? p_values[1] - p_values[0] : 0.0; }
  double p_min() const { return p_values.front(); }
  double p_max() const { return p_values.back(); }

  /// Psi~(p) by cubic interpolation; ExtrapolationError outside the grid.
  Complex at(double p) const { return cubic_interpolate<Complex>(amplitudes, p_min(), spacing(), p); }

  double density_at(double p) const { return std::norm(at(p)); }

  double norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return sum * spacing();
  }

  double mean_momentum() const {
    double w = 0.0, s = 0.0;
    for (std::size_t k = 0; k < p_values.size(); ++k) {
      w += std::norm(amplitudes[k]);
      s += std::norm(amplitudes[k]) * p_values[k];
    }
    return w > 0.0 ? s / w : 0.0;
  }

  double momentum_spread() const {
    const double mean = mean_momentum();
    double w = 0.0, s = 0.0;
    for (std::size_t k = 0; k < p_values.size(); ++k) {
      w += std::norm(amplitudes[k]);
      s += std::norm(amplitudes[k]) * (p_values[k] - mean) * (p_values[k] - mean);
    }
    return w > 0.0 ? std::sqrt(s / w) : 0.0;
  }
};

/// Integral of |Psi|^2 over the grid. On a periodic grid the trapezoid rule
/// reduces to the plain sum times dz.
inline double norm(const Wavepacket& psi) {
  double sum = 0.0;
  for (const auto& a : psi.amplitudes) sum += std::norm(a);
  return sum * psi.grid.spacing();
}

inline double mean_position(const Wavepacket& psi) {
  double w = 0.0, s = 0.0;
  for (std::size_t k = 0; k < psi.amplitudes.size(); ++k) {
    w += std::norm(psi.amplitudes[k]);
    s += std::norm(psi.amplitudes[k]) * psi.grid.z(k);
  }
  return w > 0.0 ? s / w : 0.0;
}

inline double position_spread(const Wavepacket& psi) {
  const double mean = mean_position(psi);
  double w = 0.0, s = 0.0;
  for (std::size_t k = 0; k < psi.amplitudes.size(); ++k) {
    const double d = psi.grid.z(k) - mean;
    w += std::norm(psi.amplitudes[k]);
    s += std::norm(psi.amplitudes[k]) * d * d;
  }
  return w > 0.0 ? std::sqrt(s / w) : 0.0;
}

/// Largest |Psi| among the two outermost samples.
inline double edge_amplitude(const Wavepacket& psi) {
  return std::max(std::abs(psi.amplitudes.front()), std::abs(psi.amplitudes.back()));
}

}  // namespace itlab
