#pragma once

#include <stdexcept>
#include <string>

namespace sgholder {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator validation.
struct SignError : Error { using Error::Error; };
struct RowSumError : Error { using Error::Error; };
struct DetailedBalanceError : Error { using Error::Error; };
struct NotMarkovian : Error { using Error::Error; };
struct SymmetryError : Error { using Error::Error; };

// Evaluation.
struct NonpositiveTime : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UnsupportedPair : Error { using Error::Error; };
struct ModelKindError : Error { using Error::Error; };
struct BackendUnsupported : Error { using Error::Error; };
struct WindowError : Error { using Error::Error; };
struct BoxTooSmall : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };

// Structural prerequisites of a comparison or sweep.
struct PrerequisiteFailed : Error { using Error::Error; };
struct IntertwiningUnverified : Error { using Error::Error; };
struct CocycleConsistencyError : Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sgholder
