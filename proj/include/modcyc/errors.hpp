#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modcyc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad vertex id, wrong modulus, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class ExactModeTooLarge : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class CleaningFailed : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class EigenNonConvergence : public Error {
 public:
  EigenNonConvergence(const std::string& what, std::size_t iterations)
      : Error(what), iterations_(iterations) {}
  std::size_t iterations() const { return iterations_; }

 private:
  std::size_t iterations_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class AlphaTooSmall : public Error {
 public:
  using Error::Error;
};

class EvenKUnsupported : public Error {
 public:
  using Error::Error;
};

/// Strict mode declined to run (graph below n0, expansion not asserted, ...).
class StrictModeRefused : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

/// Should never surface; indicates a bug in an internal construction.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace modcyc
