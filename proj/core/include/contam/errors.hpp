#pragma once

#include <stdexcept>
#include <string>

namespace contam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Overlapping agent bodies or otherwise impossible layouts.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// A decision rule, strategy or message violated its protocol contract.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class PlacementError : public Error {
 public:
  using Error::Error;
};

/// A strategy threw while the engine was stepping; carries the step and agent.
class SimulationError : public Error {
 public:
  SimulationError(const std::string& what, int step, int agent)
      : Error(what), step_(step), agent_(agent) {}
  int step() const noexcept { return step_; }
  int agent() const noexcept { return agent_; }

 private:
  int step_;
  int agent_;
};

}  // namespace contam
