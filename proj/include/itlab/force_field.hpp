#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/grid.hpp"
#include "itlab/interpolate.hpp"

namespace itlab {

/// One-dimensional external field: nothing, a constant force, or a potential V(z).
class ForceField {
 public:
  enum class Kind { free, uniform, potential };

  struct Free {};
  struct Uniform {
    double force;
  };
  struct Potential {
    std::function<double(double)> energy;
    // Optional analytic -dV/dz; central differences otherwise.
    std::function<double(double)> force;
    std::string label = "potential";
  };

  static ForceField free() { return ForceField(Free{}); }

  static ForceField uniform(double force) {
    if (!std::isfinite(force)) throw ValidationError("uniform force must be finite");
    return ForceField(Uniform{force});
  }

  static ForceField potential(std::function<double(double)> energy, std::function<double(double)> force = {},
                              std::string label = "potential") {
    if (!energy) throw ValidationError("potential needs an energy function");
    return ForceField(Potential{std::move(energy), std::move(force), std::move(label)});
  }

  /// V = m omega^2 z^2 / 2
  static ForceField harmonic(double mass, double omega) {
    if (!(mass > 0.0) || !(omega > 0.0)) throw ValidationError("harmonic field needs positive mass and frequency");
    const double k = mass * omega * omega;
    return potential([k](double z) { return 0.5 * k * z * z; }, [k](double z) { return -k * z; }, "harmonic");
  }

  /// Potential sampled on a grid, cubic-interpolated between nodes.
  static ForceField sampled(const Grid& grid, std::vector<double> values) {
    if (values.size() != grid.size()) throw ValidationError("sampled potential length does not match grid");
    auto data = std::make_shared<const std::vector<double>>(std::move(values));
    const double origin = grid.z_min();
    const double step = grid.spacing();
    return potential(
        [data, origin, step](double z) {
          return cubic_interpolate<double>(std::span<const double>(*data), origin, step, z);
        },
        {}, "sampled");
  }

  Kind kind() const { return static_cast<Kind>(field_.index()); }

  /// Constant force of a uniform field; zero for the free field.
  double uniform_force() const {
    if (const auto* u = std::get_if<Uniform>(&field_)) return u->force;
    if (std::holds_alternative<Free>(field_)) return 0.0;
    throw ValidationError("field is not uniform");
  }

  /// True for fields with a closed-form Gaussian solution (free or uniform).
  bool has_analytic_solution() const { return !std::holds_alternative<Potential>(field_); }

  double potential_energy(double z) const {
    return std::visit(
        [z](const auto& f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Free>) {
            return 0.0;
          } else if constexpr (std::is_same_v<T, Uniform>) {
            return -f.force * z;
          } else {
            return f.energy(z);
          }
        },
        field_);
  }

  double force(double z) const {
    return std::visit(
        [z](const auto& f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, Free>) {
            return 0.0;
          } else if constexpr (std::is_same_v<T, Uniform>) {
            return f.force;
          } else {
            if (f.force) return f.force(z);
            const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(z));
            return -(f.energy(z + h) - f.energy(z - h)) / (2.0 * h);
          }
        },
        field_);
  }

  std::string name() const {
    switch (kind()) {
      case Kind::free:
        return "free";
      case Kind::uniform:
        return "uniform";
      case Kind::potential:
        return std::get<Potential>(field_).label;
    }
    return "unknown";
  }

 private:
  explicit ForceField(std::variant<Free, Uniform, Potential> f) : field_(std::move(f)) {}

  std::variant<Free, Uniform, Potential> field_;
};

}  // namespace itlab
