#pragma once

#include <stdexcept>
#include <string>

namespace llafusion {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Contract = 1,   // violated precondition on an argument
  Config = 2,
  Data = 3,
  Numerical = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(ErrorKind::Contract, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

/// Malformed or inconsistent input data (bad magic, count mismatch, out-of-range label).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

/// Factorization failure, divergence, or non-finite intermediate values.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

}  // namespace llafusion
