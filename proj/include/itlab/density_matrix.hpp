#pragma once

// Position-representation density matrix of the free imaging state.
//
// rho(z, z', t) = Psi_IT*(z, t) Psi_IT(z', t) is evaluated literally, giving
//   rho = exp(-(v^2 + v'^2) / 2V^2) exp(-i Omega t) / (sqrt(pi) V t),
// with v = z/t, V = hbar/(m sigma) and Omega = (v^2 - v'^2)/(2 V sigma).
// The envelope carries v^2 + v'^2, not v^2 - v'^2.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/fourier.hpp"
#include "itlab/gaussian.hpp"
#include "itlab/imaging.hpp"

namespace itlab {

struct DensityMatrixSample {
  double v = 0.0;
  double v_prime = 0.0;
  double V = 0.0;
  double sigma = 0.0;
  double t = 0.0;
  Complex value;

  double omega() const { return (v * v - v_prime * v_prime) / (2.0 * V * sigma); }
};

/// Omega = (v^2 - v'^2) / (2 V sigma); antisymmetric in (v, v').
inline double offdiagonal_frequency(double v, double v_prime, double V, double sigma) {
  if (!(V > 0.0) || !(sigma > 0.0)) throw ValidationError("V and sigma must be positive");
  return (v * v - v_prime * v_prime) / (2.0 * V * sigma);
}

/// Width velocity V = hbar / (m sigma).
inline double width_velocity(const GaussianSpec& spec) { return kHbar / (spec.mass * spec.sigma); }

inline DensityMatrixSample rho_element(const GaussianSpec& spec, double z_f, double z_f_prime, double t) {
  if (!(t > 0.0)) throw ValidationError("density matrix element needs t > 0");
  if (spec.regime(t) <= 1.0)
    warn("density matrix element at t = " + std::to_string(t) + " is outside the imaging regime");
  DensityMatrixSample s;
  s.v = z_f / t;
  s.v_prime = z_f_prime / t;
  s.V = width_velocity(spec);
  s.sigma = spec.sigma;
  s.t = t;
  if (z_f == z_f_prime) {
    s.value = std::norm(free_it(spec, z_f, t));
  } else {
    s.value = std::conj(free_it(spec, z_f, t)) * free_it(spec, z_f_prime, t);
  }
  return s;
}

/// Element following the classical velocities, z = v t and z' = v' t.
inline DensityMatrixSample rho_along_velocities(const GaussianSpec& spec, double v, double v_prime, double t) {
  return rho_element(spec, v * t, v_prime * t, t);
}

inline constexpr int kSamplesPerOscillation = 64;

/// Mean of rho(z, z', t) over [t_center - window/2, t_center + window/2] by
/// composite Simpson. `n_samples = 0` picks 64 samples per oscillation period
/// of the fastest instantaneous frequency in the window; an explicit count
/// below that is rejected.
inline Complex time_average_offdiagonal(const GaussianSpec& spec, double z_f, double z_f_prime, double t_center,
                                        double window, int n_samples = 0) {
  if (window < 0.0) throw ValidationError("averaging window must be non-negative");
  if (window == 0.0) return rho_element(spec, z_f, z_f_prime, t_center).value;
  const double t_lo = t_center - 0.5 * window;
  const double t_hi = t_center + 0.5 * window;
  if (!(t_lo > 0.0)) throw ValidationError("averaging window extends to t <= 0");

  // Fixed positions: phase m (z'^2 - z^2) / (2 hbar t), fastest at the window start.
  const double omega_max = spec.mass * std::abs(z_f * z_f - z_f_prime * z_f_prime) / (2.0 * kHbar * t_lo * t_lo);
  const int required =
      std::max(2, static_cast<int>(std::ceil(kSamplesPerOscillation * omega_max * window / kTwoPi)));
  if (n_samples != 0 && n_samples < required)
    throw ValidationError("averaging undersampled: " + std::to_string(n_samples) + " samples, need " +
                          std::to_string(required));
  int intervals = std::max({n_samples, required, 64});
  if (intervals % 2 == 1) ++intervals;

  const double h = window / intervals;
  Complex sum = rho_element(spec, z_f, z_f_prime, t_lo).value + rho_element(spec, z_f, z_f_prime, t_hi).value;
  for (int k = 1; k < intervals; ++k)
    sum += (k % 2 == 1 ? 4.0 : 2.0) * rho_element(spec, z_f, z_f_prime, t_lo + k * h).value;
  return sum * (h / 3.0) / window;
}

/// Angular frequency omega maximising |sum_k x_k exp(+i omega t_k)| for uniformly
/// spaced samples, i.e. the Omega of a signal ~ exp(-i Omega t). Coarse search on a
/// zero-padded FFT, then golden-section refinement of the exact transform.
inline double dominant_frequency(std::span<const Complex> samples, double dt) {
  const std::size_t n = samples.size();
  if (n < 8) throw ValidationError("frequency extraction needs at least eight samples");
  if (!(dt > 0.0)) throw ValidationError("sample spacing must be positive");

  const std::size_t padded = std::bit_ceil(n) * 8;
  ComplexVector work(padded, Complex(0.0, 0.0));
  std::copy(samples.begin(), samples.end(), work.begin());
  // backward transform: sum_k x_k exp(+2 pi i k j / padded)
  FftPlan(padded).backward(work);
  std::size_t best = 0;
  for (std::size_t j = 1; j < padded; ++j)
    if (std::abs(work[j]) > std::abs(work[best])) best = j;
  const double bin = kTwoPi / (static_cast<double>(padded) * dt);
  const double coarse = fft_frequency(best, padded) * bin;

  auto power = [&](double omega) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) acc += samples[k] * std::polar(1.0, omega * static_cast<double>(k) * dt);
    return std::abs(acc);
  };
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = coarse - bin, b = coarse + bin;
  double c = b - golden * (b - a), d = a + golden * (b - a);
  double fc = power(c), fd = power(d);
  for (int iter = 0; iter < 80; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - golden * (b - a);
      fc = power(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + golden * (b - a);
      fd = power(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace itlab
