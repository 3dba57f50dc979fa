#pragma once

#include <stdexcept>
#include <string>

namespace agg {

/// Bad grid sizes, mismatched dimensions, malformed config files.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A sample of phi reached or left the physical interval (-1, 1).
class PhaseBoundError : public std::runtime_error {
  public:
    explicit PhaseBoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated operation precondition (e.g. nonzero-mean right-hand side).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A single sub-step could not be completed (Newton stall, CFL rejection,
/// elliptic iteration cap).  The caller may retry with a smaller dt.
class StepFailure : public std::runtime_error {
  public:
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the time loop after retries are exhausted.
class RunAbort : public std::runtime_error {
  public:
    explicit RunAbort(const std::string& what) : std::runtime_error(what) {}
};

} // namespace agg
