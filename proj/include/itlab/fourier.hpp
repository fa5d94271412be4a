#pragma once

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <string>

#include "itlab/errors.hpp"
#include "itlab/grid.hpp"

namespace itlab {

namespace detail {
// FFTW planning is not thread-safe; execution is.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

/// In-place complex DFT of a fixed length, unnormalised in both directions.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n) : n_(n), scratch_(n) {
    std::lock_guard lock(detail::fftw_planner_mutex());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch_.data());
    const int len = static_cast<int>(n);
    forward_ = fftw_plan_dft_1d(len, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward_ = fftw_plan_dft_1d(len, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (forward_ == nullptr || backward_ == nullptr) throw NumericError("FFTW could not create a plan");
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }

  std::size_t size() const { return n_; }

  /// X_k = sum_j x_j exp(-2 pi i jk/n)
  void forward(ComplexVector& data) const { run(forward_, data); }
  /// x_j = sum_k X_k exp(+2 pi i jk/n)
  void backward(ComplexVector& data) const { run(backward_, data); }

 private:
  void run(fftw_plan plan, ComplexVector& data) const {
    if (data.size() != n_) throw ValidationError("FFT length mismatch");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
  }

  std::size_t n_;
  ComplexVector scratch_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

/// Amplitude below which the outermost samples count as decayed.
inline constexpr double kEdgeAmplitudeThreshold = 1e-8;

/// FFT bin holding momentum index k of the ascending spectrum.
inline std::size_t fft_bin(std::size_t k, std::size_t n) { return (k + n / 2) % n; }

/// Signed integer frequency of FFT bin j.
inline double fft_frequency(std::size_t j, std::size_t n) {
  return j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
}

/// Psi~(p) = (2 pi hbar)^(-1/2) * integral exp(-i p z / hbar) Psi(z) dz on the conjugate grid.
inline MomentumSpectrum to_momentum(const Wavepacket& psi) {
  const Grid& grid = psi.grid;
  const std::size_t n = grid.size();
  const double edge = edge_amplitude(psi);
  if (!(edge <= kEdgeAmplitudeThreshold))
    throw AliasingError("wavepacket amplitude " + std::to_string(edge) +
                        " at the grid edge exceeds 1e-8; enlarge the grid");

  ComplexVector work = psi.amplitudes;
  FftPlan(n).forward(work);

  const double dz = grid.spacing();
  const double dp = grid.momentum_spacing();
  const double scale = dz / std::sqrt(kTwoPi * kHbar);
  MomentumSpectrum out;
  out.time = psi.time;
  out.p_values.resize(n);
  out.amplitudes.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = (static_cast<double>(k) - static_cast<double>(n / 2)) * dp;
    out.p_values[k] = p;
    out.amplitudes[k] = scale * std::polar(1.0, -p * grid.z_min() / kHbar) * work[fft_bin(k, n)];
  }
  return out;
}

/// Inverse of to_momentum onto the given spatial grid.
inline Wavepacket from_momentum(const MomentumSpectrum& spectrum, const Grid& grid) {
  const std::size_t n = grid.size();
  if (spectrum.amplitudes.size() != n) throw ValidationError("spectrum length does not match the grid");
  const double dp = grid.momentum_spacing();
  if (std::abs(spectrum.spacing() - dp) > 1e-12 * dp) throw ValidationError("spectrum is not conjugate to the grid");

  ComplexVector work(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = spectrum.p_values[k];
    work[fft_bin(k, n)] = spectrum.amplitudes[k] * std::polar(1.0, p * grid.z_min() / kHbar);
  }
  FftPlan(n).backward(work);
  const double scale = dp / std::sqrt(kTwoPi * kHbar);
  for (auto& a : work) a *= scale;
  return Wavepacket(grid, std::move(work), spectrum.time);
}

}  // namespace itlab
