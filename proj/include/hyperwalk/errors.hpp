#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dataset line could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyHypergraphError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter is outside its valid domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A candidate or request references data that is not there.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Internal precondition broken; indicates a bug in the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

/// A split left no usable missing hyperedges even after reseeding.
class DegenerateTrialError : public Error {
 public:
  using Error::Error;
};

/// AUROC or F1 requested on input where it is not defined.
class MetricUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Katz series does not converge for the requested damping factor.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperwalk
