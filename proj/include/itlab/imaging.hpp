#pragma once

// Semiclassical propagators and the imaging relation between the asymptotic
// spatial wavefunction and the initial momentum wavefunction.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "itlab/classical.hpp"
#include "itlab/errors.hpp"
#include "itlab/fourier.hpp"
#include "itlab/gaussian.hpp"
#include "itlab/grid.hpp"

namespace itlab {

struct SemiclassicalAmplitude {
  Complex value;
  ActionRecord action;
};

/// One-dimensional Van Vleck propagator
/// K_sc = (2 pi i hbar)^(-1/2) |dp_i/dz_f|^(1/2) exp(i S_c / hbar).
inline SemiclassicalAmplitude semiclassical_propagator(const ActionRecord& record) {
  const double j = record.dpi_dzf;
  if (!std::isfinite(j) || !(j > 0.0) || j > kCausticAbsolute)
    throw CausticError("action record carries a singular trajectory density");
  const Complex prefactor = 1.0 / std::sqrt(Complex(0.0, kTwoPi * kHbar));
  return {prefactor * std::sqrt(j) * std::polar(1.0, record.action / kHbar), record};
}

/// Closed-form free imaging wavefunction for the centred Gaussian:
/// (m / i t)^(1/2) exp(i m z^2 / 2 hbar t) Psi~(m z / t).
inline Complex free_it(const GaussianSpec& spec, double z_f, double t) {
  detail::require_centred_at_rest(spec);
  if (!(t > 0.0)) throw ValidationError("imaging wavefunction needs t > 0");
  const double m = spec.mass;
  const double p_i = m * z_f / t;
  return std::sqrt(Complex(0.0, -m / t)) * std::polar(1.0, m * z_f * z_f / (2.0 * kHbar * t)) *
         gaussian_momentum(spec, p_i);
}

/// Closed-form imaging wavefunction under a constant force, with
/// p_i = m (z_f - F t^2 / 2m) / t.
inline Complex forced_it(const GaussianSpec& spec, double force, double z_f, double t) {
  detail::require_centred_at_rest(spec);
  if (!(t > 0.0)) throw ValidationError("imaging wavefunction needs t > 0");
  const double m = spec.mass;
  const double p_i = m * (z_f - force * t * t / (2.0 * m)) / t;
  const double phase = force * t * z_f / (2.0 * kHbar) - force * force * t * t * t / (24.0 * m * kHbar) +
                       m * z_f * z_f / (2.0 * kHbar * t);
  return std::polar(1.0, phase) * std::sqrt(Complex(0.0, -m / t)) * gaussian_momentum(spec, p_i);
}

struct ItPrediction {
  double z_f = 0.0;
  double t_f = 0.0;
  double p_i = 0.0;
  Complex amplitude;
  double density = 0.0;
  /// dp_i/dz_f
  double classical_density = 0.0;
  /// hbar (t_f - t_i) / (m sigma^2) with sigma estimated from the spectrum
  double regime = 0.0;
  bool pre_asymptotic = false;
  ActionRecord record;
};

/// Width of a minimum-uncertainty packet with the spectrum's momentum spread.
inline double effective_width(const MomentumSpectrum& spectrum) {
  const double dp = spectrum.momentum_spread();
  if (!(dp > 0.0)) throw ValidationError("spectrum has no momentum spread");
  return kHbar / (std::sqrt(2.0) * dp);
}

/// Asymptotic wavefunction (2 pi hbar)^(1/2) K_sc(z_f, z_i) Psi~(p_i) with p_i
/// fixed by the trajectory reaching z_f. Below hbar t / m sigma^2 = 1 the result
/// is flagged (and a warning emitted) but still returned.
inline ItPrediction it_wavefunction(const MomentumSpectrum& spectrum, const ForceField& field, double z_i, double z_f,
                                    double t_i, double t_f, double mass, double dt = 0.0) {
  ActionRecord record = van_vleck_jacobian(field, z_i, z_f, t_i, t_f, mass, dt);
  const double p_i = record.trajectory.p_i;
  if (p_i < spectrum.p_min() || p_i > spectrum.p_max())
    throw ExtrapolationError("stationary momentum " + std::to_string(p_i) + " lies outside the spectrum");
  const Complex psi_p = spectrum.at(p_i);

  ItPrediction out;
  out.z_f = z_f;
  out.t_f = t_f;
  out.p_i = p_i;
  out.classical_density = record.dpi_dzf;
  out.density = record.dpi_dzf * std::norm(psi_p);
  out.amplitude = std::sqrt(kTwoPi * kHbar) * semiclassical_propagator(record).value * psi_p;
  const double sigma = effective_width(spectrum);
  out.regime = kHbar * (t_f - t_i) / (mass * sigma * sigma);
  out.pre_asymptotic = out.regime <= 1.0;
  if (out.pre_asymptotic)
    warn("imaging prediction at z_f = " + std::to_string(z_f) + " is pre-asymptotic (hbar t/m sigma^2 = " +
         std::to_string(out.regime) + ")");
  out.record = std::move(record);
  return out;
}

struct ItDensityRatio {
  /// |Psi(z_f,t_f)|^2 / |Psi~(p_i,t_i)|^2
  double ratio = 0.0;
  double classical_density = 0.0;
  /// ratio / classical_density - 1
  double relative_deviation = 0.0;
};

inline constexpr double kMinMomentumDensity = 1e-12;

/// Quantum estimate of the classical trajectory density, compared with dp_i/dz_f.
inline ItDensityRatio it_density_ratio(Complex exact_value, const MomentumSpectrum& spectrum,
                                       const ActionRecord& record) {
  const double momentum_density = spectrum.density_at(record.trajectory.p_i);
  if (!(momentum_density > kMinMomentumDensity))
    throw UndefinedRatioError("momentum density at p_i vanishes; density ratio undefined");
  ItDensityRatio out;
  out.ratio = std::norm(exact_value) / momentum_density;
  out.classical_density = record.dpi_dzf;
  out.relative_deviation = out.ratio / record.dpi_dzf - 1.0;
  return out;
}

/// Final-momentum density predicted by classical transport.
struct InverseItPrediction {
  enum class Source { initial_position, initial_momentum };

  double p_f = 0.0;
  double density = 0.0;
  /// dz_i/dp_f (position source) or dp_i/dp_f (momentum source)
  double jacobian = 0.0;
  Source source = Source::initial_position;
  double z_i = 0.0;
  double p_i = 0.0;
};

namespace detail {
template <typename F>
double secant_root(F&& residual, double x0, double x1, double tolerance, const char* what) {
  double f0 = residual(x0);
  if (f0 == 0.0) return x0;
  double f1 = residual(x1);
  for (int iter = 0; iter < 100; ++iter) {
    if (std::abs(f1) <= tolerance) return x1;
    const double slope = (f1 - f0) / (x1 - x0);
    if (!std::isfinite(slope) || slope == 0.0) throw NoTrajectoryError(std::string("no trajectory: ") + what);
    const double x2 = x1 - f1 / slope;
    if (std::abs(x2 - x1) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x1)))
      return x1;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = residual(x1);
  }
  throw ConvergenceError(std::string("root search did not converge: ") + what);
}
}  // namespace detail

/// Inverted imaging relation |Psi~(p_f,t_f)|^2 = |dz_i/dp_f| |Psi(z_i,t_i)|^2.
///
/// It applies when the final momentum is fixed by the initial position (the
/// packet's momentum spread no longer matters, e.g. a quarter oscillator
/// period). For position-independent forces p_f depends on p_i alone; there
/// dz_i/dp_f is undefined and the density is carried over from the initial
/// momentum wavefunction instead, |Psi~(p_f)|^2 = |dp_i/dp_f| |Psi~(p_i)|^2.
/// Mixed dependence throws ValidationError.
inline InverseItPrediction inverse_it_density(const Wavepacket& psi_initial, const ForceField& field, double t_f,
                                              double mass, double p_f, double dt = 0.0) {
  const double t_i = psi_initial.time;
  detail::check_times(t_i, t_f, mass);
  dt = detail::resolve_dt(t_i, t_f, dt);
  const double span = t_f - t_i;
  const std::size_t steps = detail::step_count(span, dt);
  auto final_momentum = [&](double z, double p) {
    return detail::verlet_endpoint(field, z, p, span, steps, mass).second;
  };

  const MomentumSpectrum spectrum = to_momentum(psi_initial);
  const double z_bar = mean_position(psi_initial);
  const double p_bar = spectrum.mean_momentum();
  const double z_spread = position_spread(psi_initial);
  const double p_spread = spectrum.momentum_spread();

  const double hz = 1e-4 * std::max(1.0, std::abs(z_bar));
  const double hp = 1e-4 * std::max(1.0, std::abs(p_bar));
  auto dpf_dzi = [&](double z, double p) { return (final_momentum(z + hz, p) - final_momentum(z - hz, p)) / (2 * hz); };
  auto dpf_dpi = [&](double z, double p) { return (final_momentum(z, p + hp) - final_momentum(z, p - hp)) / (2 * hp); };

  const double from_position = std::abs(dpf_dzi(z_bar, p_bar)) * z_spread;
  const double from_momentum = std::abs(dpf_dpi(z_bar, p_bar)) * p_spread;
  const double tolerance = 1e-12 * std::max(1.0, std::abs(p_f));

  InverseItPrediction out;
  out.p_f = p_f;
  if (from_momentum <= 1e-3 * from_position) {
    out.source = InverseItPrediction::Source::initial_position;
    out.p_i = p_bar;
    const double slope = dpf_dzi(z_bar, p_bar);
    const double guess = z_bar + (p_f - final_momentum(z_bar, p_bar)) / slope;
    out.z_i = detail::secant_root([&](double z) { return final_momentum(z, p_bar) - p_f; }, guess, guess + hz,
                                  tolerance, "initial position for p_f");
    const double d = dpf_dzi(out.z_i, p_bar);
    if (!std::isfinite(1.0 / d) || d == 0.0) throw CausticError("dz_i/dp_f diverges");
    out.jacobian = 1.0 / std::abs(d);
    out.density = out.jacobian * std::norm(psi_initial.at(out.z_i));
  } else if (from_position <= 1e-3 * from_momentum) {
    out.source = InverseItPrediction::Source::initial_momentum;
    out.z_i = z_bar;
    const double slope = dpf_dpi(z_bar, p_bar);
    const double guess = p_bar + (p_f - final_momentum(z_bar, p_bar)) / slope;
    out.p_i = detail::secant_root([&](double p) { return final_momentum(z_bar, p) - p_f; }, guess, guess + hp,
                                  tolerance, "initial momentum for p_f");
    const double d = dpf_dpi(z_bar, out.p_i);
    if (!std::isfinite(1.0 / d) || d == 0.0) throw CausticError("dp_i/dp_f diverges");
    out.jacobian = 1.0 / std::abs(d);
    out.density = out.jacobian * spectrum.density_at(out.p_i);
  } else {
    throw ValidationError("final momentum depends on both initial position and momentum; no imaging relation applies");
  }
  return out;
}

struct SpacetimePoint {
  double z_f = 0.0;
  double t_f = 0.0;
};

struct TransportEntry {
  double z_f = 0.0;
  double t_f = 0.0;
  double p_i = 0.0;
  double dpi_dzf = 0.0;
  double density = 0.0;
  /// density * dz_f per unit dp_i, i.e. density / dpi_dzf
  double transported = 0.0;
  /// |Psi~(p_i)|^2
  double reference = 0.0;
  double violation = 0.0;
};

struct TransportReport {
  std::vector<TransportEntry> entries;
  /// max over points of |transported/reference - 1|
  double max_violation = 0.0;
  /// max over point pairs on a common trajectory of |transported_a/transported_b - 1|
  double max_pairwise_violation = 0.0;
  std::size_t trajectory_pairs = 0;

  bool passes(double tolerance) const {
    return max_violation <= tolerance && max_pairwise_violation <= tolerance;
  }
};

using DensityFn = std::function<double(double z, double t)>;

/// Checks |Psi(z_f,t_f)|^2 dz_f = |Psi~(p_i)|^2 dp_i at every point, with
/// dz_f = dp_i / (dp_i/dz_f), and between every pair of points lying on the
/// same classical trajectory. Violations are reported, never thrown.
inline TransportReport probability_transport_check(const ForceField& field, const MomentumSpectrum& spectrum,
                                                   std::span<const SpacetimePoint> points, const DensityFn& density,
                                                   double z_i, double t_i, double mass) {
  TransportReport report;
  for (const auto& pt : points) {
    const ActionRecord record = van_vleck_jacobian(field, z_i, pt.z_f, t_i, pt.t_f, mass);
    TransportEntry e;
    e.z_f = pt.z_f;
    e.t_f = pt.t_f;
    e.p_i = record.trajectory.p_i;
    e.dpi_dzf = record.dpi_dzf;
    e.density = density(pt.z_f, pt.t_f);
    e.transported = e.density / e.dpi_dzf;
    e.reference = spectrum.density_at(e.p_i);
    e.violation = e.transported / e.reference - 1.0;
    report.max_violation = std::max(report.max_violation, std::abs(e.violation));
    report.entries.push_back(e);
  }
  const auto& es = report.entries;
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      if (std::abs(es[a].p_i - es[b].p_i) > 1e-7 * std::max(1.0, std::abs(es[a].p_i))) continue;
      ++report.trajectory_pairs;
      report.max_pairwise_violation =
          std::max(report.max_pairwise_violation, std::abs(es[a].transported / es[b].transported - 1.0));
    }
  }
  return report;
}

}  // namespace itlab
