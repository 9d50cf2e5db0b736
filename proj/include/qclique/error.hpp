#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qclique {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph files, QASM). Line and column are 1-based;
/// column is 0 when only the line is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ":" + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An index (vertex, qubit) outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A gate or circuit that violates a structural invariant.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Oracle / Grover synthesis was asked for an unsupported instance.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to a pure function (e.g. k = 0).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The statevector would not fit under the configured qubit cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t qubits)
      : Error(what), qubits_(qubits) {}

  std::size_t qubits() const noexcept { return qubits_; }

 private:
  std::size_t qubits_;
};

}  // namespace qclique
