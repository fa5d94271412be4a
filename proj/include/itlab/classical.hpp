#pragma once

// Classical trajectories, actions and the shooting problem that selects the
// stationary-phase trajectory between two fixed endpoints.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/force_field.hpp"
#include "itlab/units.hpp"

namespace itlab {

/// Default number of velocity-Verlet steps per trajectory.
inline constexpr std::size_t kDefaultTrajectorySteps = 10'000;
/// Paths with fewer steps than this trigger an accuracy warning in the action quadrature.
inline constexpr std::size_t kMinActionSteps = 1'000;

struct PhasePoint {
  double t;
  double z;
  double p;
};

struct TrajectorySolution {
  double z_i = 0.0;
  double p_i = 0.0;
  double t_i = 0.0;
  double t_f = 0.0;
  double z_f = 0.0;
  double p_f = 0.0;
  double mass = 1.0;
  std::vector<PhasePoint> path;

  double duration() const { return t_f - t_i; }
};

/// Classical action along one trajectory with its Van Vleck Jacobian dp_i/dz_f.
struct ActionRecord {
  double action = 0.0;
  double dpi_dzf = 0.0;
  TrajectorySolution trajectory;
};

struct TransitionZoneEstimate {
  double f = 0.0;
  double sigma = 0.0;
  double mass = 1.0;
  double z_i = 0.0;
  double t_i = 0.0;
  double mean_energy = 0.0;
  double threshold = 10.0;
  bool valid = false;
};

namespace detail {

inline void check_times(double t_i, double t_f, double mass) {
  if (!(t_f > t_i)) throw ValidationError("trajectory needs t_f > t_i");
  if (!(mass > 0.0)) throw ValidationError("mass must be positive");
}

inline double resolve_dt(double t_i, double t_f, double dt) {
  const double span = t_f - t_i;
  if (dt == 0.0) return span / static_cast<double>(kDefaultTrajectorySteps);
  if (!(dt > 0.0)) throw ValidationError("time step must be positive");
  if (dt > span * (1.0 + 1e-12)) throw ValidationError("time step exceeds the propagation interval");
  return dt;
}

inline std::size_t step_count(double span, double dt) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(span / dt - 1e-9)));
}

inline double checked_force(const ForceField& field, double z) {
  const double f = field.force(z);
  if (!std::isfinite(f)) throw IntegrationError("non-finite force at z = " + std::to_string(z));
  return f;
}

/// Velocity Verlet without storing the path; returns (z_f, p_f).
inline std::pair<double, double> verlet_endpoint(const ForceField& field, double z, double p, double span,
                                                 std::size_t steps, double mass) {
  const double h = span / static_cast<double>(steps);
  double f = checked_force(field, z);
  for (std::size_t k = 0; k < steps; ++k) {
    const double p_half = p + 0.5 * h * f;
    z += h * p_half / mass;
    f = checked_force(field, z);
    p = p_half + 0.5 * h * f;
  }
  return {z, p};
}

}  // namespace detail

/// Velocity-Verlet trajectory from (z_i, p_i) at t_i to t_f. `dt = 0` selects
/// (t_f - t_i)/10^4; the step is shrunk so that an integer number of steps lands on t_f.
inline TrajectorySolution integrate_trajectory(const ForceField& field, double z_i, double p_i, double t_i, double t_f,
                                               double mass, double dt = 0.0) {
  detail::check_times(t_i, t_f, mass);
  dt = detail::resolve_dt(t_i, t_f, dt);
  const double span = t_f - t_i;
  const std::size_t steps = detail::step_count(span, dt);
  const double h = span / static_cast<double>(steps);

  TrajectorySolution sol;
  sol.z_i = z_i;
  sol.p_i = p_i;
  sol.t_i = t_i;
  sol.t_f = t_f;
  sol.mass = mass;
  sol.path.reserve(steps + 1);

  double z = z_i;
  double p = p_i;
  double f = detail::checked_force(field, z);
  sol.path.push_back({t_i, z, p});
  for (std::size_t k = 1; k <= steps; ++k) {
    const double p_half = p + 0.5 * h * f;
    z += h * p_half / mass;
    f = detail::checked_force(field, z);
    p = p_half + 0.5 * h * f;
    const double t = (k == steps) ? t_f : t_i + static_cast<double>(k) * h;
    sol.path.push_back({t, z, p});
  }
  sol.z_f = z;
  sol.p_f = p;
  return sol;
}

/// Total energy p^2/2m + V(z) at a phase point.
inline double energy(const ForceField& field, const PhasePoint& pt, double mass) {
  return 0.5 * pt.p * pt.p / mass + field.potential_energy(pt.z);
}

/// S = integral (T - V) dt along the sampled path, composite Simpson
/// (with a 3/8 panel when the interval count is odd).
inline double accumulate_action(const TrajectorySolution& traj, const ForceField& field) {
  const auto& path = traj.path;
  if (path.size() < 2) throw ValidationError("trajectory path has fewer than two samples");
  const std::size_t intervals = path.size() - 1;
  if (intervals < kMinActionSteps)
    warn("action quadrature on " + std::to_string(intervals) + " steps; accuracy may be reduced");

  const double m = traj.mass;
  auto lagrangian = [&](std::size_t k) {
    return 0.5 * path[k].p * path[k].p / m - field.potential_energy(path[k].z);
  };
  const double h = (path.back().t - path.front().t) / static_cast<double>(intervals);

  if (intervals == 1) return 0.5 * h * (lagrangian(0) + lagrangian(1));

  std::size_t simpson_end = intervals;
  double tail = 0.0;
  if (intervals % 2 == 1) {
    simpson_end = intervals - 3;
    tail = 3.0 * h / 8.0 *
           (lagrangian(simpson_end) + 3.0 * lagrangian(simpson_end + 1) + 3.0 * lagrangian(simpson_end + 2) +
            lagrangian(simpson_end + 3));
  }
  double sum = 0.0;
  if (simpson_end > 0) {
    sum = lagrangian(0) + lagrangian(simpson_end);
    for (std::size_t k = 1; k < simpson_end; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * lagrangian(k);
    sum *= h / 3.0;
  }
  return sum + tail;
}

/// Initial momentum of the trajectory from z_i at t_i to z_f at t_f. Secant
/// iteration seeded with the ballistic guess m (z_f - z_i)/(t_f - t_i).
inline double shoot_for_momentum(const ForceField& field, double z_i, double z_f, double t_i, double t_f, double mass,
                                 double dt = 0.0) {
  detail::check_times(t_i, t_f, mass);
  dt = detail::resolve_dt(t_i, t_f, dt);
  const double span = t_f - t_i;
  const std::size_t steps = detail::step_count(span, dt);
  auto miss = [&](double p) { return detail::verlet_endpoint(field, z_i, p, span, steps, mass).first - z_f; };

  const double scale = std::max({1.0, std::abs(z_f), std::abs(z_i)});
  const double tolerance = 1e-10 * std::max(1.0, std::abs(z_f));
  const double eps = std::numeric_limits<double>::epsilon();

  double p0 = mass * (z_f - z_i) / span;
  double g0 = miss(p0);
  if (g0 == 0.0) return p0;
  double p1 = p0 + 1e-4 * std::max(1.0, std::abs(p0));
  double g1 = miss(p1);

  // rounding in the step sum leaves the endpoint noisy at about sqrt(steps) ulps
  const double noise = 16.0 * eps * scale * std::sqrt(static_cast<double>(steps));
  for (int iter = 0; iter < 100; ++iter) {
    if (std::abs(g1) <= noise) return p1;
    const double slope = (g1 - g0) / (p1 - p0);
    if (std::abs(g1) <= tolerance && (!std::isfinite(slope) || slope == 0.0)) return p1;
    if (!std::isfinite(slope) || slope == 0.0)
      throw NoTrajectoryError("endpoint does not respond to the initial momentum; no trajectory reaches z_f = " +
                              std::to_string(z_f));
    const double p2 = p1 - g1 / slope;
    if (!std::isfinite(p2)) throw NoTrajectoryError("secant step diverged");
    if (std::abs(p2 - p1) <= 4.0 * eps * std::max(1.0, std::abs(p1))) {
      if (std::abs(g1) <= tolerance) return p1;
      throw ConvergenceError("shooting stalled with endpoint miss " + std::to_string(g1));
    }
    p0 = p1;
    g0 = g1;
    p1 = p2;
    g1 = miss(p1);
  }
  if (std::abs(g1) <= tolerance) return p1;
  throw ConvergenceError("shooting did not converge in 100 iterations");
}

/// Caustic thresholds on dp_i/dz_f: absolute, and relative to the free-motion value m/t.
inline constexpr double kCausticAbsolute = 1e8;
inline constexpr double kCausticRelative = 1e6;

/// Shoots the trajectory to z_f and differentiates the shooting map by
/// central differences to get dp_i/dz_f. The action comes from the same path.
inline ActionRecord van_vleck_jacobian(const ForceField& field, double z_i, double z_f, double t_i, double t_f,
                                       double mass, double dt = 0.0) {
  const double delta = 1e-4 * std::max(1.0, std::abs(z_f));
  const double p_mid = shoot_for_momentum(field, z_i, z_f, t_i, t_f, mass, dt);
  const double p_plus = shoot_for_momentum(field, z_i, z_f + delta, t_i, t_f, mass, dt);
  const double p_minus = shoot_for_momentum(field, z_i, z_f - delta, t_i, t_f, mass, dt);

  const double central = (p_plus - p_minus) / (2.0 * delta);
  const double forward = (p_plus - p_mid) / delta;
  const double backward = (p_mid - p_minus) / delta;
  const double free_scale = mass / (t_f - t_i);

  if (!std::isfinite(central) || std::abs(central) > kCausticAbsolute ||
      std::abs(central) > kCausticRelative * free_scale)
    throw CausticError("trajectory density dp_i/dz_f = " + std::to_string(central) + " diverges (caustic)");
  if ((forward > 0.0) != (backward > 0.0)) throw CausticError("dp_i/dz_f changes sign across z_f (caustic)");
  if (!(central > 0.0))
    throw CausticError("trajectory has passed a caustic (dp_i/dz_f < 0); Maslov phases are not modelled");

  ActionRecord record;
  record.trajectory = integrate_trajectory(field, z_i, p_mid, t_i, t_f, mass, dt);
  record.action = accumulate_action(record.trajectory, field);
  record.dpi_dzf = central;
  return record;
}

/// Action of the endpoint-to-endpoint trajectory.
inline double endpoint_action(const ForceField& field, double z_i, double z_f, double t_i, double t_f, double mass,
                              double dt = 0.0) {
  const double p = shoot_for_momentum(field, z_i, z_f, t_i, t_f, mass, dt);
  return accumulate_action(integrate_trajectory(field, z_i, p, t_i, t_f, mass, dt), field);
}

/// -dS_c/dz_i by central differences in the initial point, step 1e-4 max(1,|z_i|).
inline double initial_momentum_from_action(const ForceField& field, double z_i, double z_f, double t_i, double t_f,
                                           double mass, double dt = 0.0) {
  const double delta = 1e-4 * std::max(1.0, std::abs(z_i));
  const double s_plus = endpoint_action(field, z_i + delta, z_f, t_i, t_f, mass, dt);
  const double s_minus = endpoint_action(field, z_i - delta, z_f, t_i, t_f, mass, dt);
  return -(s_plus - s_minus) / (2.0 * delta);
}

/// Start of the zone beyond which the accumulated action dominates hbar:
/// z_i = f sigma, t_i = m z_i^2 / hbar, mean energy hbar^2/(2 m sigma^2).
/// `threshold` is the smallest f accepted as "much larger than sqrt(2)".
inline TransitionZoneEstimate transition_zone(double sigma, double mass, double f, double threshold = 10.0) {
  if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
  if (!(f > 0.0)) throw ValidationError("f must be positive");
  if (!(mass > 0.0)) throw ValidationError("mass must be positive");
  TransitionZoneEstimate est;
  est.f = f;
  est.sigma = sigma;
  est.mass = mass;
  est.z_i = f * sigma;
  est.t_i = mass * est.z_i * est.z_i / kHbar;
  est.mean_energy = kHbar * kHbar / (2.0 * mass * sigma * sigma);
  est.threshold = threshold;
  est.valid = f >= threshold;
  return est;
}

}  // namespace itlab
