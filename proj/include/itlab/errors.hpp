#pragma once

#include <functional>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace itlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: preconditions, degenerate grids, inconsistent geometry.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Configuration problems in the scenario runner (missing or unknown keys).
class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Base for failures that happen while computing, as opposed to bad input.
class NumericError : public Error {
 public:
  using Error::Error;
};

class AliasingError : public NumericError {
 public:
  using NumericError::NumericError;
};

class BoundaryError : public NumericError {
 public:
  using NumericError::NumericError;
};

class IntegrationError : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoTrajectoryError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Focal point of the trajectory family: the Van Vleck amplitude is singular.
class CausticError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ExtrapolationError : public NumericError {
 public:
  using NumericError::NumericError;
};

class UndefinedRatioError : public NumericError {
 public:
  using NumericError::NumericError;
};

using WarningHandler = std::function<void(std::string_view)>;

namespace detail {
struct WarningSink {
  std::mutex mutex;
  WarningHandler handler = [](std::string_view msg) { std::cerr << "itlab warning: " << msg << '\n'; };
};
inline WarningSink& warning_sink() {
  static WarningSink sink;
  return sink;
}
}  // namespace detail

/// Installs a process-wide handler for non-fatal diagnostics; returns the previous one.
inline WarningHandler set_warning_handler(WarningHandler handler) {
  auto& sink = detail::warning_sink();
  std::lock_guard lock(sink.mutex);
  std::swap(sink.handler, handler);
  return handler;
}

inline void warn(std::string_view message) {
  auto& sink = detail::warning_sink();
  std::lock_guard lock(sink.mutex);
  if (sink.handler) sink.handler(message);
}

}  // namespace itlab
