#pragma once

#include <stdexcept>
#include <string>

namespace ckindex {

/// Base of every error raised by the library. `kind()` is the stable,
/// machine-readable tag used in CLI error objects.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  const char* kind() const noexcept override { return "parse_error"; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class GraphError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "graph_error"; }
};

class GraphMismatch : public Error {
 public:
  GraphMismatch() : Error("operands belong to different graphs") {}
  const char* kind() const noexcept override { return "graph_mismatch"; }
};

/// A Cuntz-Krieger expansion reached a sink before the requested level.
class SinkObstruction : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "sink_obstruction"; }
};

/// Graph hypotheses (no sinks, no sources, connectivity) do not hold.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "hypothesis_violation"; }
};

/// Input is not of the required algebraic form (projection, partial
/// isometry, homogeneous, admissible, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_input"; }
};

/// An internal consistency check failed. Never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_error"; }
};

}  // namespace ckindex
