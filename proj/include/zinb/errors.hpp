#pragma once

#include <stdexcept>
#include <string>

namespace zinb {

/// Bad run configuration or input schema (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid data content: bad counts, missing coordinates, malformed rows
/// (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller broke a function precondition (dimension mismatch, out-of-range
/// argument).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

/// Numerical failure: non-positive-definite system, singular neighbor
/// submatrix, divergent update (CLI exit code 4).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zinb
