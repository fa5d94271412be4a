#pragma once

// Atomic units throughout: hbar = electron mass = elementary charge = 1.
// Laboratory quantities enter only through the conversions below.

#include <numbers>

#include "itlab/errors.hpp"

namespace itlab {

inline constexpr double kHbar = 1.0;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace units {

/// Bohr radius in nanometres (1 a.u. of length).
inline constexpr double kBohrNm = 0.052917721;
/// 1 a.u. of time in seconds.
inline constexpr double kAtomicTimeS = 2.4188843265857e-17;
/// Unified atomic mass unit in electron masses.
inline constexpr double kAmuInElectronMasses = 1822.888486;
inline constexpr double kProtonMass = 1836.15267343;

constexpr double nm_to_au(double nm) { return nm / kBohrNm; }
constexpr double au_to_nm(double au) { return au * kBohrNm; }
constexpr double pm_to_au(double pm) { return nm_to_au(pm * 1e-3); }
constexpr double um_to_au(double um) { return nm_to_au(um * 1e3); }
constexpr double cm_to_au(double cm) { return nm_to_au(cm * 1e7); }
constexpr double au_time_to_s(double t) { return t * kAtomicTimeS; }
constexpr double amu_to_au(double amu) { return amu * kAmuInElectronMasses; }

}  // namespace units

/// hbar is pinned to 1; only the particle mass varies between runs.
struct UnitSystem {
  double mass = 1.0;

  static constexpr double hbar() { return kHbar; }

  static UnitSystem electron() { return UnitSystem{1.0}; }
  static UnitSystem proton() { return UnitSystem{units::kProtonMass}; }

  void validate() const {
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
  }
};

}  // namespace itlab
