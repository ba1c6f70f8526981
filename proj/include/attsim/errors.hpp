/// errors.hpp — exception taxonomy for the simulator.
///
/// Three families matter to callers because the command-line tool maps them
/// to distinct exit codes:
///   * ValidationError (and IO problems)      -> exit 1
///   * NonFiniteState / NonFiniteControl      -> exit 2
///   * invariant-monitor violations (verify)  -> exit 3 (no exception; counted)
#pragma once

#include <stdexcept>
#include <string>

namespace attsim {

/// Base class for every error raised by the simulator library.
class SimulationError : public std::runtime_error {
public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

/// Input, configuration, or command-line validation failure. Messages carry
/// the offending key path (e.g. "config.ufsmc.gamma1: ...").
class ValidationError : public SimulationError {
public:
  using SimulationError::SimulationError;
};

/// File input/output failure; message carries the path.
class IoError : public SimulationError {
public:
  using SimulationError::SimulationError;
};

/// An attitude composition hit a vanishing denominator (the two rotations
/// compose to a full turn, where the three-parameter set is singular).
class DegenerateComposition : public SimulationError {
public:
  using SimulationError::SimulationError;
};

/// The initial attitude error is numerically zero, so no rotation axis can
/// be extracted; the maneuver is already at its goal.
class ZeroInitialError : public SimulationError {
public:
  using SimulationError::SimulationError;
};

/// The integrator produced a non-finite state component (blow-up).
class NonFiniteState : public SimulationError {
public:
  using SimulationError::SimulationError;
};

/// A controller produced a non-finite torque component.
class NonFiniteControl : public SimulationError {
public:
  using SimulationError::SimulationError;
};

/// Two run results were compared that do not belong to the same scenario.
class ScenarioMismatch : public SimulationError {
public:
  using SimulationError::SimulationError;
};

} // namespace attsim
