#pragma once

// Error metrics and regime scans: where does the imaging form take over from
// the exact wavefunction?

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/fourier.hpp"
#include "itlab/gaussian.hpp"
#include "itlab/imaging.hpp"
#include "itlab/split_step.hpp"

namespace itlab {

struct PointwiseDensity {
  double t = 0.0;
  double z_f = 0.0;
  double density_exact = 0.0;
  double density_it = 0.0;
};

struct ConvergenceReport {
  std::vector<double> times;
  std::vector<double> l_inf_rel;
  std::vector<double> regime;
  std::vector<PointwiseDensity> pointwise;
};

/// Points with exact density below this fraction of the window peak are ignored.
inline constexpr double kBulkFraction = 1e-6;
inline constexpr int kMinWindowPoints = 256;

/// max |it/exact - 1| over the bulk of the exact density.
inline double relative_linf_gap(std::span<const double> exact, std::span<const double> it) {
  const double peak = *std::max_element(exact.begin(), exact.end());
  double gap = 0.0;
  for (std::size_t k = 0; k < exact.size(); ++k)
    if (exact[k] >= kBulkFraction * peak) gap = std::max(gap, std::abs(it[k] / exact[k] - 1.0));
  return gap;
}

/// Densities of exact and imaging wavefunctions over [z_lo, z_hi] at each time.
/// Free and uniform fields use closed forms; other potentials need `grid` and
/// go through split-step propagation and the trajectory-based prediction.
inline ConvergenceReport it_error_scan(const GaussianSpec& spec, const ForceField& field, std::span<const double> times,
                                       double z_lo, double z_hi, int n_points = kMinWindowPoints,
                                       std::optional<Grid> grid = std::nullopt) {
  spec.validate();
  if (n_points < kMinWindowPoints) throw ValidationError("error scan window needs at least 256 points");
  if (!(z_hi > z_lo)) throw ValidationError("error scan window is empty");
  for (double t : times)
    if (!(t > 0.0)) throw ValidationError("error scan times must be positive");

  ConvergenceReport report;
  const double h = (z_hi - z_lo) / (n_points - 1);
  std::vector<double> exact(n_points), it(n_points);

  auto record = [&](double t) {
    report.times.push_back(t);
    report.regime.push_back(spec.regime(t));
    report.l_inf_rel.push_back(relative_linf_gap(exact, it));
    for (int k = 0; k < n_points; ++k) report.pointwise.push_back({t, z_lo + k * h, exact[k], it[k]});
  };

  if (field.has_analytic_solution()) {
    const double force = field.uniform_force();
    for (double t : times) {
      for (int k = 0; k < n_points; ++k) {
        const double z = z_lo + k * h;
        exact[k] = std::norm(forced_exact(spec, force, z, t));
        it[k] = std::norm(forced_it(spec, force, z, t));
      }
      record(t);
    }
    return report;
  }

  if (!grid) throw ValidationError("a propagation grid is required for fields without a closed-form solution");
  Wavepacket psi = gaussian_initial(spec, *grid, 0.0);
  const MomentumSpectrum spectrum = to_momentum(psi);
  std::vector<double> sorted(times.begin(), times.end());
  std::sort(sorted.begin(), sorted.end());
  for (double t : sorted) {
    PropagationPlan plan{field, psi.time, t, 0.0, *grid, spec.mass};
    psi = splitstep_propagate(psi, plan);
    for (int k = 0; k < n_points; ++k) {
      const double z = z_lo + k * h;
      exact[k] = std::norm(psi.at(z));
      it[k] = it_wavefunction(spectrum, field, spec.z0, z, 0.0, t, spec.mass).density;
    }
    record(t);
  }
  return report;
}

struct MomentumPictureRow {
  double t = 0.0;
  double p_i = 0.0;
  double z_f = 0.0;
  /// |Psi_F(z_f, t)|^2 / (m / t)
  double scaled_exact = 0.0;
  /// |Psi~(p_i)|^2
  double momentum_density = 0.0;
};

struct MomentumPictureSummary {
  double t = 0.0;
  double regime = 0.0;
  /// max |scaled_exact - momentum_density| / max momentum_density
  double l_inf_rel = 0.0;
  /// trapezoid integral of scaled_exact over p_i
  double area = 0.0;
  /// rms width of scaled_exact in p_i
  double width = 0.0;
  /// exact density peak over the classical asymptote (m/t) |Psi~(0)|^2
  double peak_over_classical = 0.0;
};

struct MomentumPictureScan {
  std::vector<MomentumPictureRow> rows;
  std::vector<MomentumPictureSummary> summaries;
};

/// Exact forced density divided by the classical density m/t, resampled against
/// p_i = m (z_f - F t^2 / 2m) / t over |p_i| <= half_width (default 8 hbar/sigma).
inline MomentumPictureScan momentum_picture_scan(const GaussianSpec& spec, double force, std::span<const double> times,
                                                 int n_points = 801, double half_width = 0.0) {
  spec.validate();
  if (n_points < 3) throw ValidationError("momentum picture needs at least three points");
  if (half_width == 0.0) half_width = 8.0 * kHbar / spec.sigma;
  const double m = spec.mass;
  const double h = 2.0 * half_width / (n_points - 1);
  const double p_centre = spec.p0;

  MomentumPictureScan scan;
  for (double t : times) {
    if (!(t > 0.0)) throw ValidationError("momentum picture times must be positive");
    MomentumPictureSummary s;
    s.t = t;
    s.regime = spec.regime(t);
    double peak_reference = 0.0, max_diff = 0.0, area = 0.0, first = 0.0, second = 0.0, peak_exact = 0.0;
    for (int k = 0; k < n_points; ++k) {
      MomentumPictureRow r;
      r.t = t;
      r.p_i = p_centre - half_width + k * h;
      r.z_f = r.p_i * t / m + force * t * t / (2.0 * m);
      const double exact = std::norm(forced_exact(spec, force, r.z_f, t));
      r.scaled_exact = exact / (m / t);
      r.momentum_density = std::norm(gaussian_momentum(spec, r.p_i));
      peak_reference = std::max(peak_reference, r.momentum_density);
      peak_exact = std::max(peak_exact, exact);
      max_diff = std::max(max_diff, std::abs(r.scaled_exact - r.momentum_density));
      const double w = (k == 0 || k == n_points - 1) ? 0.5 * h : h;
      area += w * r.scaled_exact;
      first += w * r.scaled_exact * r.p_i;
      second += w * r.scaled_exact * r.p_i * r.p_i;
      scan.rows.push_back(r);
    }
    s.l_inf_rel = max_diff / peak_reference;
    s.area = area;
    const double mean = first / area;
    s.width = std::sqrt(second / area - mean * mean);
    s.peak_over_classical = peak_exact / ((m / t) * std::norm(gaussian_momentum(spec, spec.p0)));
    scan.summaries.push_back(s);
  }
  return scan;
}

}  // namespace itlab
