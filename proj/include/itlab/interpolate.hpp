#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "itlab/errors.hpp"

namespace itlab {

/// Four-point Lagrange (cubic) interpolation on a uniform grid starting at
/// `origin` with step `step`. Throws ExtrapolationError when the stencil
/// would leave the sampled range.
template <typename T>
T cubic_interpolate(std::span<const T> values, double origin, double step, double x) {
  const std::size_t n = values.size();
  if (n < 4) throw ValidationError("cubic interpolation needs at least four samples");
  const double s = (x - origin) / step;
  const double base = std::floor(s);
  if (!std::isfinite(s) || base < 1.0 || base > static_cast<double>(n) - 3.0) {
    // the last node itself is still allowed
    if (s == static_cast<double>(n - 1)) return values[n - 1];
    throw ExtrapolationError("interpolation point " + std::to_string(x) + " outside sampled support");
  }
  const auto j = static_cast<std::size_t>(base);
  const double u = s - base;
  const double w0 = -u * (u - 1.0) * (u - 2.0) / 6.0;
  const double w1 = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
  const double w2 = -(u + 1.0) * u * (u - 2.0) / 2.0;
  const double w3 = (u + 1.0) * u * (u - 1.0) / 6.0;
  return w0 * values[j - 1] + w1 * values[j] + w2 * values[j + 1] + w3 * values[j + 2];
}

}  // namespace itlab
