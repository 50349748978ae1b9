#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grossgame {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotPolynomial : public Error {
 public:
  NotPolynomial() : Error("quotient is not a polynomial in grossone") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidStrategy : public Error {
 public:
  using Error::Error;
};

class NonDeterministicStrategy : public Error {
 public:
  using Error::Error;
};

// The number of rounds is not a natural number usable by the engine.
class InvalidRoundCount : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

// Failures that the CLI reports as "no answer" (exit code 2) rather than as
// input errors.
class AnalysisFailure : public Error {
 public:
  using Error::Error;
};

class NotConverged : public AnalysisFailure {
 public:
  using AnalysisFailure::AnalysisFailure;
};

class BelowStationarity : public AnalysisFailure {
 public:
  using AnalysisFailure::AnalysisFailure;
};

class DegenerateBeta : public AnalysisFailure {
 public:
  DegenerateBeta()
      : AnalysisFailure("slope beta is identically zero (degenerate line)") {}
};

class EmptySolution : public AnalysisFailure {
 public:
  using AnalysisFailure::AnalysisFailure;
};

class NoPivot : public AnalysisFailure {
 public:
  NoPivot()
      : AnalysisFailure(
            "no usable pivot: the R, T and P slope components are all zero") {}
};

}  // namespace grossgame
